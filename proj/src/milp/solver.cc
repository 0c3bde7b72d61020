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

#include "pdpsd/milp/solver.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

#include "pdpsd/core/errors.h"
#include "pdpsd/milp/simplex.h"

namespace pdpsd::milp {
namespace {

struct BoundChange {
  int var;
  double lo;
  double hi;
};

struct Node {
  double bound;
  int depth;
  long id;
  std::vector<BoundChange> changes;  // relative to the root bounds
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    // priority_queue pops the "largest"; invert to get the smallest key.
    return std::tie(a.bound, b.depth, a.id) > std::tie(b.bound, a.depth, b.id);
  }
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

void ThrowIfMalformed(const MilpProblem& problem) {
  const auto issues = problem.Validate();
  if (!issues.empty()) throw InputError("malformed MILP: " + issues.front());
}

}  // namespace

MilpSolution SolveMilp(const MilpProblem& problem,
                       const MilpSettings& settings) {
  ThrowIfMalformed(problem);
  const auto start = Clock::now();
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(settings.time_limit));
  const int n = problem.num_vars();
  const double int_tol = settings.integrality_tolerance;

  MilpSolution result;
  std::vector<double> root_lo = problem.lower;
  std::vector<double> root_hi = problem.upper;
  for (int j = 0; j < n; ++j) {
    if (problem.types[j] != VarType::kInteger) continue;
    root_lo[j] = std::ceil(root_lo[j] - int_tol);
    root_hi[j] = std::floor(root_hi[j] + int_tol);
    if (root_lo[j] > root_hi[j]) {
      result.status = SolveStatus::kInfeasible;
      result.wall_time = Seconds(start);
      return result;
    }
  }

  double incumbent_value = kInfinity;
  std::vector<double> incumbent;
  if (settings.initial_solution.has_value() &&
      static_cast<int>(settings.initial_solution->size()) == n) {
    const auto& x = *settings.initial_solution;
    if (problem.MaxViolation(x) <= settings.feasibility_tolerance &&
        problem.MaxIntegralityViolation(x) <= int_tol) {
      incumbent = x;
      incumbent_value = problem.Evaluate(x);
    }
  }

  BoundedSimplex lp(problem);
  for (int j = 0; j < n; ++j) lp.SetColumnBounds(j, root_lo[j], root_hi[j]);
  std::vector<int> touched;

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  long next_id = 0;
  open.push(Node{-kInfinity, 0, next_id++, {}});
  bool timed_out = false;
  double open_bound = kInfinity;

  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    if (node.bound >= incumbent_value - settings.absolute_gap) continue;
    if (settings.record_bound_log) result.bound_log.push_back(node.bound);
    if (Clock::now() >= deadline) {
      timed_out = true;
      open_bound = node.bound;
      break;
    }

    for (int j : touched) lp.SetColumnBounds(j, root_lo[j], root_hi[j]);
    touched.clear();
    for (const BoundChange& c : node.changes) {
      lp.SetColumnBounds(c.var, c.lo, c.hi);
      touched.push_back(c.var);
    }

    ++result.node_count;
    const LpStatus status = lp.Solve(deadline);
    if (status == LpStatus::kIterationLimit) {
      timed_out = true;
      open_bound = node.bound;
      break;
    }
    if (status == LpStatus::kInfeasible) continue;
    if (status == LpStatus::kUnbounded) {
      if (incumbent.empty()) {
        result.status = SolveStatus::kUnbounded;
        result.wall_time = Seconds(start);
        return result;
      }
      continue;
    }

    const double bound = std::max(node.bound, lp.objective());
    if (bound >= incumbent_value - settings.absolute_gap) continue;
    std::vector<double> x = lp.ColumnValues();

    int branch_var = -1;
    double best_frac = int_tol;
    for (int j = 0; j < n; ++j) {
      if (problem.types[j] != VarType::kInteger) continue;
      const double frac = std::fabs(x[j] - std::round(x[j]));
      if (frac > best_frac) {
        best_frac = frac;
        branch_var = j;
      }
    }

    if (branch_var < 0) {
      std::vector<double> rounded = x;
      for (int j = 0; j < n; ++j) {
        if (problem.types[j] == VarType::kInteger) {
          rounded[j] = std::round(rounded[j]);
        }
      }
      if (problem.MaxViolation(rounded) <= settings.feasibility_tolerance) {
        x = rounded;
      }
      const double value = problem.Evaluate(x);
      if (value < incumbent_value) {
        incumbent_value = value;
        incumbent = std::move(x);
      }
      continue;
    }

    const double v = x[branch_var];
    double lo = root_lo[branch_var];
    double hi = root_hi[branch_var];
    for (const BoundChange& c : node.changes) {
      if (c.var == branch_var) {
        lo = c.lo;
        hi = c.hi;
      }
    }
    auto child = [&](double child_lo, double child_hi) {
      Node next{bound, node.depth + 1, next_id++, node.changes};
      auto it = std::find_if(
          next.changes.begin(), next.changes.end(),
          [&](const BoundChange& c) { return c.var == branch_var; });
      if (it != next.changes.end()) {
        it->lo = child_lo;
        it->hi = child_hi;
      } else {
        next.changes.push_back({branch_var, child_lo, child_hi});
      }
      open.push(std::move(next));
    };
    child(lo, std::floor(v));
    child(std::ceil(v), hi);
  }

  result.wall_time = Seconds(start);
  if (timed_out) {
    if (!open.empty()) open_bound = std::min(open_bound, open.top().bound);
    if (incumbent.empty()) {
      result.status = SolveStatus::kTimeLimitNoSolution;
      return result;
    }
    result.status = SolveStatus::kTimeLimitFeasible;
    result.gap = std::isfinite(open_bound)
                     ? std::max(0.0, incumbent_value - open_bound)
                     : kInfinity;
  } else if (incumbent.empty()) {
    result.status = SolveStatus::kInfeasible;
    return result;
  } else {
    result.status = SolveStatus::kOptimal;
  }
  result.objective_value = incumbent_value;
  result.assignment = std::move(incumbent);
  return result;
}

MilpSolution EnumerateMilp(const MilpProblem& problem,
                           long long max_combinations) {
  ThrowIfMalformed(problem);
  const auto start = Clock::now();
  const int n = problem.num_vars();
  std::vector<int> ints;
  for (int j = 0; j < n; ++j) {
    if (problem.types[j] == VarType::kInteger) ints.push_back(j);
  }
  if (ints.size() > 24) {
    throw CapabilityError("enumeration supports at most 24 integer variables, got " +
                          std::to_string(ints.size()));
  }
  std::vector<long long> lo(ints.size()), hi(ints.size());
  long double combinations = 1;
  for (size_t k = 0; k < ints.size(); ++k) {
    lo[k] = static_cast<long long>(std::ceil(problem.lower[ints[k]] - 1e-9));
    hi[k] = static_cast<long long>(std::floor(problem.upper[ints[k]] + 1e-9));
    combinations *= std::max<long long>(0, hi[k] - lo[k] + 1);
  }
  if (combinations > static_cast<long double>(max_combinations)) {
    throw CapabilityError("enumeration space too large");
  }

  MilpSolution best;
  best.status = SolveStatus::kInfeasible;
  if (combinations == 0) return best;
  const bool pure = static_cast<int>(ints.size()) == n;
  std::vector<long long> value = lo;
  while (true) {
    ++best.node_count;
    MilpProblem fixed = problem;
    for (size_t k = 0; k < ints.size(); ++k) {
      fixed.lower[ints[k]] = fixed.upper[ints[k]] = static_cast<double>(value[k]);
    }
    if (pure) {
      if (fixed.MaxViolation(fixed.lower) <= 1e-9) {
        const double obj = fixed.Evaluate(fixed.lower);
        if (best.status != SolveStatus::kOptimal || obj < best.objective_value) {
          best.status = SolveStatus::kOptimal;
          best.objective_value = obj;
          best.assignment = fixed.lower;
        }
      }
    } else {
      for (size_t k = 0; k < ints.size(); ++k) {
        fixed.types[ints[k]] = VarType::kContinuous;
      }
      MilpSolution lp = SolveLp(fixed);
      if (lp.status == SolveStatus::kUnbounded) {
        best.status = SolveStatus::kUnbounded;
        best.assignment.clear();
        best.wall_time = Seconds(start);
        return best;
      }
      if (lp.status == SolveStatus::kOptimal &&
          (best.status != SolveStatus::kOptimal ||
           lp.objective_value < best.objective_value)) {
        best.status = SolveStatus::kOptimal;
        best.objective_value = lp.objective_value;
        best.assignment = lp.assignment;
      }
    }
    size_t k = 0;
    while (k < ints.size() && value[k] == hi[k]) {
      value[k] = lo[k];
      ++k;
    }
    if (k == ints.size()) break;
    ++value[k];
  }
  best.wall_time = Seconds(start);
  return best;
}

namespace {

std::string VarName(const MilpProblem& problem, int j) {
  if (j < static_cast<int>(problem.names.size()) && !problem.names[j].empty()) {
    return problem.names[j];
  }
  return "x" + std::to_string(j);
}

void WriteNumber(std::ostream& out, double v) {
  if (std::isinf(v)) {
    out << (v > 0 ? "+inf" : "-inf");
  } else {
    out << v;
  }
}

void WriteLinear(const MilpProblem& problem, const std::vector<Term>& terms,
                 std::ostream& out) {
  if (terms.empty()) {
    out << " 0";
    return;
  }
  bool first = true;
  for (const Term& t : terms) {
    const double c = t.coef;
    out << (c < 0 ? " - " : (first ? " " : " + "));
    out << std::fabs(c) << " " << VarName(problem, t.var);
    first = false;
  }
}

}  // namespace

void WriteLpText(const MilpProblem& problem, std::ostream& out) {
  const auto old_precision = out.precision(17);
  out << "Minimize\n obj:";
  std::vector<Term> obj;
  for (int j = 0; j < problem.num_vars(); ++j) {
    if (problem.objective[j] != 0.0) obj.push_back({j, problem.objective[j]});
  }
  WriteLinear(problem, obj, out);
  if (problem.objective_offset != 0.0) {
    out << (problem.objective_offset < 0 ? " - " : " + ")
        << std::fabs(problem.objective_offset);
  }
  out << "\nSubject To\n";
  for (int r = 0; r < problem.num_rows(); ++r) {
    const Row& row = problem.rows[r];
    out << " " << (row.name.empty() ? "r" + std::to_string(r) : row.name)
        << ":";
    WriteLinear(problem, row.terms, out);
    switch (row.sense) {
      case RowSense::kLessEqual:
        out << " <= ";
        break;
      case RowSense::kEqual:
        out << " = ";
        break;
      case RowSense::kGreaterEqual:
        out << " >= ";
        break;
    }
    out << row.rhs << "\n";
  }
  out << "Bounds\n";
  for (int j = 0; j < problem.num_vars(); ++j) {
    out << " ";
    WriteNumber(out, problem.lower[j]);
    out << " <= " << VarName(problem, j) << " <= ";
    WriteNumber(out, problem.upper[j]);
    out << "\n";
  }
  out << "General\n";
  for (int j = 0; j < problem.num_vars(); ++j) {
    if (problem.types[j] == VarType::kInteger) {
      out << " " << VarName(problem, j) << "\n";
    }
  }
  out << "End\n";
  out.precision(old_precision);
}

}  // namespace pdpsd::milp
