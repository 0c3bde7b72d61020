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

#ifndef PDPSD_MILP_SIMPLEX_H_
#define PDPSD_MILP_SIMPLEX_H_

#include <chrono>
#include <optional>
#include <vector>

#include "pdpsd/milp/problem.h"

namespace pdpsd::milp {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

using Clock = std::chrono::steady_clock;

// Bounded-variable revised simplex on the computational form
//
//   A x - r = 0,   lower <= (x, r) <= upper,
//
// where r holds one "row activity" variable per constraint. The basis
// inverse is kept explicitly (dense, row major) and updated in product form.
//
// The object keeps its basis between calls, so after changing column bounds
// (as branch-and-bound does) the next Solve() warm-starts: boxed nonbasic
// columns are moved to the bound matching the sign of their reduced cost,
// which keeps the basis dual feasible, and the dual simplex restores primal
// feasibility. Bases that are not dual feasible fall back to a two-phase
// primal simplex. Both loops switch to Bland's smallest-index rule after a
// run of degenerate pivots.
//
// Integrality flags of the input problem are ignored.
class BoundedSimplex {
 public:
  explicit BoundedSimplex(const MilpProblem& problem);

  int num_columns() const { return n_; }
  void SetColumnBounds(int column, double lo, double hi);
  double column_lower(int column) const { return lo_[column]; }
  double column_upper(int column) const { return hi_[column]; }

  LpStatus Solve(std::optional<Clock::time_point> deadline = std::nullopt);

  // Valid after kOptimal.
  double objective() const;
  std::vector<double> ColumnValues() const;
  long iterations() const { return iterations_; }

 private:
  enum Status : unsigned char { kBasic, kAtLower, kAtUpper, kFree };
  enum class Inner { kOptimal, kInfeasible, kUnbounded, kLimit, kNumerical };

  Inner DualSimplex(const std::optional<Clock::time_point>& deadline);
  Inner PrimalSimplex(const std::optional<Clock::time_point>& deadline);

  void PlaceNonbasic(int j);
  bool MakeDualFeasible();
  void ComputePrimal();
  void ComputeDuals(const std::vector<double>& basic_costs);
  void ComputeDuals();
  void Ftran(int j, std::vector<double>& out) const;
  void AlphaRow(int p, std::vector<double>& alpha) const;
  void UpdateInverse(int p, const std::vector<double>& column);
  void Refactor();
  double Infeasibility(int j) const;
  bool CanIncrease(int j) const;
  bool CanDecrease(int j) const;

  int n_ = 0;  // structural columns
  int m_ = 0;  // rows kept after dropping empty ones
  bool trivially_infeasible_ = false;
  double offset_ = 0.0;

  std::vector<double> cost_, lo_, hi_;  // size n_ + m_
  // Structural columns (CSC) and rows (CSR).
  std::vector<int> col_start_, col_index_;
  std::vector<double> col_value_;
  std::vector<int> row_start_, row_index_;
  std::vector<double> row_value_;

  std::vector<int> basis_;  // basic variable of each row
  std::vector<Status> status_;
  std::vector<double> x_;
  std::vector<double> d_;
  std::vector<double> binv_;  // m_ x m_, row major
  std::vector<double> row_norm_;  // squared norms of the rows of binv_

  int pivots_since_refactor_ = 0;
  long iterations_ = 0;
  long solve_start_ = 0;  // iterations_ when the current Solve began
  bool bland_ = false;
  int degenerate_run_ = 0;

  // Scratch.
  std::vector<double> column_, alpha_, work_;
  std::vector<int> nonzeros_;
};

// Solves the continuous relaxation of `problem`.
MilpSolution SolveLp(const MilpProblem& problem);

}  // namespace pdpsd::milp

#endif  // PDPSD_MILP_SIMPLEX_H_
