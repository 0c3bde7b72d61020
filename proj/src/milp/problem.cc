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

#include "pdpsd/milp/problem.h"

#include <algorithm>
#include <cmath>

namespace pdpsd::milp {

int MilpProblem::AddVariable(std::string name, double lo, double hi,
                             VarType type, double cost) {
  objective.push_back(cost);
  lower.push_back(lo);
  upper.push_back(hi);
  types.push_back(type);
  names.push_back(std::move(name));
  return num_vars() - 1;
}

void MilpProblem::AddRow(std::vector<Term> terms, RowSense sense, double rhs,
                         std::string name) {
  rows.push_back(Row{std::move(terms), sense, rhs, std::move(name)});
}

std::vector<std::string> MilpProblem::Validate() const {
  std::vector<std::string> problems;
  const int n = num_vars();
  if (static_cast<int>(lower.size()) != n ||
      static_cast<int>(upper.size()) != n ||
      static_cast<int>(types.size()) != n) {
    problems.push_back("bound/type vectors do not match the variable count");
    return problems;
  }
  for (int j = 0; j < n; ++j) {
    if (std::isnan(objective[j]) || std::isnan(lower[j]) ||
        std::isnan(upper[j])) {
      problems.push_back("variable " + std::to_string(j) + " has NaN data");
    }
    if (lower[j] > upper[j]) {
      problems.push_back("variable " + std::to_string(j) +
                         " has lower bound above upper bound");
    }
    if (types[j] == VarType::kInteger &&
        (std::isinf(lower[j]) || std::isinf(upper[j]))) {
      problems.push_back("integer variable " + std::to_string(j) +
                         " needs finite bounds");
    }
  }
  for (int r = 0; r < num_rows(); ++r) {
    if (std::isnan(rows[r].rhs) || std::isinf(rows[r].rhs)) {
      problems.push_back("row " + std::to_string(r) + " has a non-finite rhs");
    }
    for (const Term& t : rows[r].terms) {
      if (t.var < 0 || t.var >= n) {
        problems.push_back("row " + std::to_string(r) +
                           " references variable " + std::to_string(t.var));
      } else if (!std::isfinite(t.coef)) {
        problems.push_back("row " + std::to_string(r) +
                           " has a non-finite coefficient");
      }
    }
  }
  return problems;
}

double MilpProblem::Evaluate(const std::vector<double>& x) const {
  double value = objective_offset;
  for (int j = 0; j < num_vars(); ++j) value += objective[j] * x[j];
  return value;
}

double MilpProblem::MaxViolation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (int j = 0; j < num_vars(); ++j) {
    worst = std::max({worst, lower[j] - x[j], x[j] - upper[j]});
  }
  for (const Row& row : rows) {
    double activity = 0.0;
    for (const Term& t : row.terms) activity += t.coef * x[t.var];
    switch (row.sense) {
      case RowSense::kLessEqual:
        worst = std::max(worst, activity - row.rhs);
        break;
      case RowSense::kGreaterEqual:
        worst = std::max(worst, row.rhs - activity);
        break;
      case RowSense::kEqual:
        worst = std::max(worst, std::fabs(activity - row.rhs));
        break;
    }
  }
  return worst;
}

double MilpProblem::MaxIntegralityViolation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (int j = 0; j < num_vars(); ++j) {
    if (types[j] == VarType::kInteger) {
      worst = std::max(worst, std::fabs(x[j] - std::round(x[j])));
    }
  }
  return worst;
}

const char* ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "Optimal";
    case SolveStatus::kInfeasible:
      return "Infeasible";
    case SolveStatus::kUnbounded:
      return "Unbounded";
    case SolveStatus::kTimeLimitFeasible:
      return "TimeLimitFeasible";
    case SolveStatus::kTimeLimitNoSolution:
      return "TimeLimitNoSolution";
  }
  return "Unknown";
}

}  // namespace pdpsd::milp
