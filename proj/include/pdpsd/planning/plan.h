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

#ifndef PDPSD_PLANNING_PLAN_H_
#define PDPSD_PLANNING_PLAN_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdpsd/core/instance.h"
#include "pdpsd/milp/problem.h"
#include "pdpsd/planning/route_model.h"

namespace pdpsd {

// A solved (or encoded) routing plan in domain terms.
struct Plan {
  std::vector<std::string> scenario_ids;
  std::vector<double> probabilities;
  std::vector<int> truck_ids;
  std::map<int, bool> truck_used;
  std::map<int, int> assignment;  // customer -> truck id
  std::vector<int> outsourced;    // sorted
  // routes[w][t]: stops of truck_ids[t] in scenario w, origin first.
  std::vector<std::vector<std::vector<LocationId>>> routes;
  std::vector<std::vector<std::map<int, double>>> loads;
  std::vector<std::vector<std::map<int, double>>> orders;

  double objective = 0.0;  // model objective, constants included
  milp::SolveStatus status = milp::SolveStatus::kOptimal;
  double gap = 0.0;
  long node_count = 0;
  double wall_time = 0.0;

  int TruckIndex(int truck_id) const;
  // Probability-weighted routing distance of all trucks.
  double ExpectedDistance(const Instance& instance) const;
  // Initial costs + penalties + routing cost of scenario `w`'s routes.
  double ScenarioCost(const Instance& instance, int w) const;
};

// Builds the model for `input`, solves it and decodes the result. Scenarios
// with identical size vectors are merged before building; the plan still
// lists every input scenario. `incumbent` (one route set per input scenario)
// seeds branch and bound when feasible.
//
// Throws ModelInfeasibleError when no feasible plan exists or none was found
// within the time limit; the message carries a structural hint.
Plan SolveRouteModel(const Instance& instance, const RouteModelInput& input,
                     const milp::MilpSettings& settings,
                     const std::optional<RouteChoice>& incumbent);

// Converts a model assignment into a plan (objective from the assignment).
Plan PlanFromAssignment(const RouteModel& model, const std::vector<double>& x);

// Checks every plan invariant against the model input: allocation, walks
// anchored at the origin and ending at the depot, visit order, onboard load
// within [0, capacity] along every route, dependency coupling and order.
// Returns one message per violation.
std::vector<std::string> CheckPlan(const Instance& instance,
                                   const RouteModelInput& input,
                                   const Plan& plan);

}  // namespace pdpsd

#endif  // PDPSD_PLANNING_PLAN_H_
