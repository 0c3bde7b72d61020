// Copyright 2026 The PDPSD Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PDPSD_MILP_SOLVER_H_
#define PDPSD_MILP_SOLVER_H_

#include <ostream>

#include "pdpsd/milp/problem.h"

namespace pdpsd::milp {

// LP-based branch and bound. Nodes are explored best bound first (ties:
// deeper first, then older); branching picks the most fractional integer
// variable, lowest index on ties. A single simplex object is warm-started
// across all nodes.
//
// Throws InputError when `problem.Validate()` reports issues.
MilpSolution SolveMilp(const MilpProblem& problem,
                       const MilpSettings& settings = {});

// Exhaustive reference solver: tries every integer assignment and, when
// continuous variables exist, solves the remaining LP. Intended as a test
// oracle. Throws CapabilityError beyond 24 integer variables or
// `max_combinations` assignments.
MilpSolution EnumerateMilp(const MilpProblem& problem,
                           long long max_combinations = 1LL << 22);

// Writes the problem in a CPLEX-LP style text format (see README).
void WriteLpText(const MilpProblem& problem, std::ostream& out);

}  // namespace pdpsd::milp

#endif  // PDPSD_MILP_SOLVER_H_
