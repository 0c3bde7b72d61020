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

// Canonical mixed-integer linear program (minimization) and solver results.

#ifndef PDPSD_MILP_PROBLEM_H_
#define PDPSD_MILP_PROBLEM_H_

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace pdpsd::milp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class RowSense { kLessEqual, kEqual, kGreaterEqual };
enum class VarType { kContinuous, kInteger };

struct Term {
  int var = 0;
  double coef = 0.0;
};

struct Row {
  std::vector<Term> terms;
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;
  std::string name;
};

struct MilpProblem {
  std::vector<double> objective;
  double objective_offset = 0.0;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<VarType> types;
  std::vector<std::string> names;
  std::vector<Row> rows;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  int AddVariable(std::string name, double lo, double hi, VarType type,
                  double cost = 0.0);
  int AddBinary(std::string name, double cost = 0.0) {
    return AddVariable(std::move(name), 0.0, 1.0, VarType::kInteger, cost);
  }
  void AddRow(std::vector<Term> terms, RowSense sense, double rhs,
              std::string name = {});

  // Structural problems: index out of range, lo > hi, infinite integer bounds,
  // NaN data. Empty when the problem is well formed.
  std::vector<std::string> Validate() const;

  double Evaluate(const std::vector<double>& x) const;
  // Largest violation of any bound or row (0 when feasible).
  double MaxViolation(const std::vector<double>& x) const;
  double MaxIntegralityViolation(const std::vector<double>& x) const;
};

enum class SolveStatus {
  kOptimal,
  kInfeasible,
  kUnbounded,
  kTimeLimitFeasible,
  kTimeLimitNoSolution,
};

const char* ToString(SolveStatus status);

struct MilpSolution {
  SolveStatus status = SolveStatus::kInfeasible;
  double objective_value = 0.0;
  std::vector<double> assignment;
  double gap = 0.0;  // incumbent minus proven lower bound
  long node_count = 0;
  double wall_time = 0.0;  // seconds
  // Global lower bound after each processed node (when requested).
  std::vector<double> bound_log;

  bool has_solution() const {
    return status == SolveStatus::kOptimal ||
           status == SolveStatus::kTimeLimitFeasible;
  }
};

struct MilpSettings {
  double time_limit = 300.0;  // seconds
  double absolute_gap = 1e-6;
  double integrality_tolerance = 1e-6;
  double feasibility_tolerance = 1e-6;
  // A feasible point used as the first incumbent; ignored when infeasible.
  std::optional<std::vector<double>> initial_solution;
  bool record_bound_log = false;
};

}  // namespace pdpsd::milp

#endif  // PDPSD_MILP_PROBLEM_H_
