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

#include "pdpsd/milp/simplex.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "pdpsd/core/errors.h"

namespace pdpsd::milp {
namespace {

constexpr double kPrimalTol = 1e-9;
constexpr double kDualTol = 1e-9;
constexpr double kPivotTol = 1e-9;
constexpr double kDropTol = 1e-14;
constexpr int kRefactorPeriod = 100;
constexpr int kDegenerateRunForBland = 50;
constexpr long kIterationCap = 200000;

bool Expired(const std::optional<Clock::time_point>& deadline) {
  return deadline.has_value() && Clock::now() >= *deadline;
}

}  // namespace

BoundedSimplex::BoundedSimplex(const MilpProblem& problem) {
  const auto issues = problem.Validate();
  if (!issues.empty()) throw InputError("malformed LP: " + issues.front());

  n_ = problem.num_vars();
  offset_ = problem.objective_offset;

  // Merge duplicate terms and drop empty rows.
  std::vector<std::vector<Term>> kept_terms;
  std::vector<double> row_lo, row_hi;
  for (const Row& row : problem.rows) {
    std::map<int, double> merged;
    for (const Term& t : row.terms) merged[t.var] += t.coef;
    std::vector<Term> terms;
    for (const auto& [var, coef] : merged) {
      if (coef != 0.0) terms.push_back({var, coef});
    }
    double lo = row.sense == RowSense::kLessEqual ? -kInfinity : row.rhs;
    double hi = row.sense == RowSense::kGreaterEqual ? kInfinity : row.rhs;
    if (terms.empty()) {
      if (lo > 0.0 || hi < 0.0) trivially_infeasible_ = true;
      continue;
    }
    kept_terms.push_back(std::move(terms));
    row_lo.push_back(lo);
    row_hi.push_back(hi);
  }
  m_ = static_cast<int>(kept_terms.size());
  const int total = n_ + m_;

  cost_.assign(total, 0.0);
  lo_.assign(total, 0.0);
  hi_.assign(total, 0.0);
  for (int j = 0; j < n_; ++j) {
    cost_[j] = problem.objective[j];
    lo_[j] = problem.lower[j];
    hi_[j] = problem.upper[j];
  }
  for (int i = 0; i < m_; ++i) {
    lo_[n_ + i] = row_lo[i];
    hi_[n_ + i] = row_hi[i];
  }

  row_start_.assign(m_ + 1, 0);
  for (int i = 0; i < m_; ++i) {
    row_start_[i + 1] = row_start_[i] + static_cast<int>(kept_terms[i].size());
  }
  row_index_.resize(row_start_[m_]);
  row_value_.resize(row_start_[m_]);
  std::vector<int> col_count(n_, 0);
  for (int i = 0; i < m_; ++i) {
    int k = row_start_[i];
    for (const Term& t : kept_terms[i]) {
      row_index_[k] = t.var;
      row_value_[k] = t.coef;
      ++k;
      ++col_count[t.var];
    }
  }
  col_start_.assign(n_ + 1, 0);
  for (int j = 0; j < n_; ++j) col_start_[j + 1] = col_start_[j] + col_count[j];
  col_index_.resize(col_start_[n_]);
  col_value_.resize(col_start_[n_]);
  std::vector<int> fill(col_start_.begin(), col_start_.end() - 1);
  for (int i = 0; i < m_; ++i) {
    for (int k = row_start_[i]; k < row_start_[i + 1]; ++k) {
      const int j = row_index_[k];
      col_index_[fill[j]] = i;
      col_value_[fill[j]] = row_value_[k];
      ++fill[j];
    }
  }

  // Slack basis: B = -I.
  basis_.resize(m_);
  status_.assign(total, kAtLower);
  x_.assign(total, 0.0);
  d_.assign(total, 0.0);
  for (int i = 0; i < m_; ++i) {
    basis_[i] = n_ + i;
    status_[n_ + i] = kBasic;
  }
  for (int j = 0; j < n_; ++j) PlaceNonbasic(j);
  binv_.assign(static_cast<size_t>(m_) * m_, 0.0);
  for (int i = 0; i < m_; ++i) binv_[static_cast<size_t>(i) * m_ + i] = -1.0;
  row_norm_.assign(m_, 1.0);

  column_.assign(m_, 0.0);
  work_.assign(m_, 0.0);
  alpha_.assign(total, 0.0);
}

void BoundedSimplex::SetColumnBounds(int column, double lo, double hi) {
  lo_[column] = lo;
  hi_[column] = hi;
}

// Puts a nonbasic variable on a bound consistent with its current status.
void BoundedSimplex::PlaceNonbasic(int j) {
  const bool has_lo = std::isfinite(lo_[j]);
  const bool has_hi = std::isfinite(hi_[j]);
  Status s = status_[j];
  if (s == kAtUpper && !has_hi) s = kAtLower;
  if (s == kAtLower && !has_lo) s = has_hi ? kAtUpper : kFree;
  if (s == kFree && (has_lo || has_hi)) s = has_lo ? kAtLower : kAtUpper;
  status_[j] = s;
  x_[j] = s == kAtLower ? lo_[j] : (s == kAtUpper ? hi_[j] : 0.0);
}

bool BoundedSimplex::CanIncrease(int j) const {
  return status_[j] != kAtUpper && lo_[j] < hi_[j];
}

bool BoundedSimplex::CanDecrease(int j) const {
  return status_[j] != kAtLower && lo_[j] < hi_[j];
}

double BoundedSimplex::Infeasibility(int j) const {
  if (x_[j] < lo_[j] - kPrimalTol) return lo_[j] - x_[j];
  if (x_[j] > hi_[j] + kPrimalTol) return x_[j] - hi_[j];
  return 0.0;
}

void BoundedSimplex::Ftran(int j, std::vector<double>& out) const {
  std::fill(out.begin(), out.end(), 0.0);
  if (j >= n_) {
    const int k = j - n_;
    for (int i = 0; i < m_; ++i) out[i] = -binv_[static_cast<size_t>(i) * m_ + k];
    return;
  }
  for (int e = col_start_[j]; e < col_start_[j + 1]; ++e) {
    const int k = col_index_[e];
    const double a = col_value_[e];
    for (int i = 0; i < m_; ++i) {
      out[i] += a * binv_[static_cast<size_t>(i) * m_ + k];
    }
  }
}

// alpha_j = (row p of B^-1) * column j, for every variable.
void BoundedSimplex::AlphaRow(int p, std::vector<double>& alpha) const {
  std::fill(alpha.begin(), alpha.end(), 0.0);
  const double* rho = &binv_[static_cast<size_t>(p) * m_];
  for (int k = 0; k < m_; ++k) {
    const double r = rho[k];
    if (r == 0.0) continue;
    for (int e = row_start_[k]; e < row_start_[k + 1]; ++e) {
      alpha[row_index_[e]] += r * row_value_[e];
    }
    alpha[n_ + k] = -r;
  }
}

void BoundedSimplex::UpdateInverse(int p, const std::vector<double>& column) {
  double* row_p = &binv_[static_cast<size_t>(p) * m_];
  const double inv = 1.0 / column[p];
  nonzeros_.clear();
  double norm_p = 0.0;
  for (int k = 0; k < m_; ++k) {
    if (row_p[k] != 0.0) {
      row_p[k] *= inv;
      norm_p += row_p[k] * row_p[k];
      nonzeros_.push_back(k);
    }
  }
  row_norm_[p] = norm_p;
  // The row norms follow the rank-one update exactly:
  // |r_i - f r_p|^2 = |r_i|^2 - 2 f <r_i, r_p> + f^2 |r_p|^2.
  for (int i = 0; i < m_; ++i) {
    if (i == p) continue;
    const double f = column[i];
    if (f == 0.0) continue;
    double* row_i = &binv_[static_cast<size_t>(i) * m_];
    double dot = 0.0;
    for (int k : nonzeros_) {
      dot += row_i[k] * row_p[k];
      double v = row_i[k] - f * row_p[k];
      row_i[k] = std::fabs(v) < kDropTol ? 0.0 : v;
    }
    row_norm_[i] = std::max(row_norm_[i] - 2.0 * f * dot + f * f * norm_p, 1e-12);
  }
  ++pivots_since_refactor_;
}

// Rebuilds B^-1 from scratch for the current basis. Structural columns that
// turn out dependent are dropped and replaced by row variables.
void BoundedSimplex::Refactor() {
  std::fill(binv_.begin(), binv_.end(), 0.0);
  for (int i = 0; i < m_; ++i) binv_[static_cast<size_t>(i) * m_ + i] = -1.0;
  std::vector<int> current(m_);
  for (int i = 0; i < m_; ++i) current[i] = n_ + i;

  std::vector<int> structurals;
  for (int i = 0; i < m_; ++i) {
    if (basis_[i] < n_) structurals.push_back(basis_[i]);
  }
  // Rows whose own row variable is wanted in the basis are not available.
  std::vector<bool> row_taken(m_, false);
  for (int i = 0; i < m_; ++i) {
    if (basis_[i] >= n_) row_taken[basis_[i] - n_] = true;
  }
  for (int j : structurals) {
    Ftran(j, column_);
    int best = -1;
    double best_abs = 1e-9;
    for (int i = 0; i < m_; ++i) {
      if (row_taken[i] || current[i] < n_) continue;
      if (std::fabs(column_[i]) > best_abs) {
        best_abs = std::fabs(column_[i]);
        best = i;
      }
    }
    if (best < 0) {
      status_[j] = x_[j] - lo_[j] <= hi_[j] - x_[j] ? kAtLower : kAtUpper;
      PlaceNonbasic(j);
      continue;
    }
    UpdateInverse(best, column_);
    current[best] = j;
  }
  for (int i = 0; i < m_; ++i) {
    basis_[i] = current[i];
    status_[current[i]] = kBasic;
  }
  // Row variables displaced by dropped structurals become basic again; all
  // other row variables not in `current` are nonbasic.
  std::vector<bool> basic(n_ + m_, false);
  for (int i = 0; i < m_; ++i) basic[basis_[i]] = true;
  for (int j = 0; j < n_ + m_; ++j) {
    if (!basic[j] && status_[j] == kBasic) {
      status_[j] = kAtLower;
      PlaceNonbasic(j);
    }
  }
  for (int i = 0; i < m_; ++i) {
    const double* row = &binv_[static_cast<size_t>(i) * m_];
    double norm = 0.0;
    for (int k = 0; k < m_; ++k) norm += row[k] * row[k];
    row_norm_[i] = norm;
  }
  pivots_since_refactor_ = 0;
}

void BoundedSimplex::ComputePrimal() {
  std::fill(work_.begin(), work_.end(), 0.0);
  for (int j = 0; j < n_ + m_; ++j) {
    if (status_[j] == kBasic || x_[j] == 0.0) continue;
    if (j >= n_) {
      work_[j - n_] -= x_[j];
    } else {
      for (int e = col_start_[j]; e < col_start_[j + 1]; ++e) {
        work_[col_index_[e]] += col_value_[e] * x_[j];
      }
    }
  }
  for (int i = 0; i < m_; ++i) {
    const double* row = &binv_[static_cast<size_t>(i) * m_];
    double v = 0.0;
    for (int k = 0; k < m_; ++k) v += row[k] * work_[k];
    x_[basis_[i]] = -v;
  }
}

void BoundedSimplex::ComputeDuals(const std::vector<double>& basic_costs) {
  std::vector<double> y(m_, 0.0);
  for (int i = 0; i < m_; ++i) {
    const double c = basic_costs[i];
    if (c == 0.0) continue;
    const double* row = &binv_[static_cast<size_t>(i) * m_];
    for (int k = 0; k < m_; ++k) y[k] += c * row[k];
  }
  for (int j = 0; j < n_; ++j) {
    double v = 0.0;
    for (int e = col_start_[j]; e < col_start_[j + 1]; ++e) {
      v += y[col_index_[e]] * col_value_[e];
    }
    d_[j] = v;
  }
  for (int k = 0; k < m_; ++k) d_[n_ + k] = -y[k];
  // d_j = c_j - y' col_j; the caller supplies which costs apply.
}

void BoundedSimplex::ComputeDuals() {
  std::vector<double> cb(m_);
  for (int i = 0; i < m_; ++i) cb[i] = cost_[basis_[i]];
  ComputeDuals(cb);
  for (int j = 0; j < n_ + m_; ++j) {
    d_[j] = status_[j] == kBasic ? 0.0 : cost_[j] - d_[j];
  }
}

// Flips boxed nonbasics to the bound their reduced cost prefers. False when
// an unboxed variable has a wrong-signed reduced cost.
bool BoundedSimplex::MakeDualFeasible() {
  bool ok = true;
  bool moved = false;
  for (int j = 0; j < n_ + m_; ++j) {
    if (status_[j] == kBasic || lo_[j] == hi_[j]) continue;
    const double d = d_[j];
    if (status_[j] == kAtLower && d < -kDualTol) {
      if (std::isfinite(hi_[j])) {
        status_[j] = kAtUpper;
        x_[j] = hi_[j];
        moved = true;
      } else {
        ok = false;
      }
    } else if (status_[j] == kAtUpper && d > kDualTol) {
      if (std::isfinite(lo_[j])) {
        status_[j] = kAtLower;
        x_[j] = lo_[j];
        moved = true;
      } else {
        ok = false;
      }
    } else if (status_[j] == kFree && std::fabs(d) > kDualTol) {
      ok = false;
    }
  }
  if (moved) ComputePrimal();
  return ok;
}

BoundedSimplex::Inner BoundedSimplex::DualSimplex(
    const std::optional<Clock::time_point>& deadline) {
  const int total = n_ + m_;
  int numerical_retries = 0;
  while (true) {
    if (++iterations_ - solve_start_ > kIterationCap || Expired(deadline)) return Inner::kLimit;
    if (pivots_since_refactor_ >= kRefactorPeriod) {
      Refactor();
      ComputePrimal();
      ComputeDuals();
      if (!MakeDualFeasible()) return Inner::kNumerical;
    }

    // Leaving row: dual steepest edge (smallest index under Bland).
    int p = -1;
    double worst = 0.0;
    for (int i = 0; i < m_; ++i) {
      const int b = basis_[i];
      const double inf = Infeasibility(b);
      if (inf <= 0.0) continue;
      if (bland_) {
        if (p < 0 || b < basis_[p]) p = i;
      } else if (inf * inf > worst * row_norm_[i]) {
        worst = inf * inf / row_norm_[i];
        p = i;
      }
    }
    if (p < 0) return Inner::kOptimal;

    const int leaving = basis_[p];
    const bool to_lower = x_[leaving] < lo_[leaving];
    const double target = to_lower ? lo_[leaving] : hi_[leaving];
    const double sign = to_lower ? 1.0 : -1.0;
    AlphaRow(p, alpha_);

    auto eligible = [&](int j) {
      if (status_[j] == kBasic || lo_[j] == hi_[j]) return false;
      const double a = sign * alpha_[j];
      switch (status_[j]) {
        case kAtLower:
          return a < -kPivotTol;
        case kAtUpper:
          return a > kPivotTol;
        case kFree:
          return std::fabs(a) > kPivotTol;
        default:
          return false;
      }
    };

    int q = -1;
    if (bland_) {
      double best_ratio = kInfinity;
      for (int j = 0; j < total; ++j) {
        if (!eligible(j)) continue;
        const double ratio = std::fabs(d_[j]) / std::fabs(alpha_[j]);
        if (ratio < best_ratio - 1e-12) {
          best_ratio = ratio;
          q = j;
        }
      }
    } else {
      double bound = kInfinity;
      for (int j = 0; j < total; ++j) {
        if (!eligible(j)) continue;
        bound = std::min(bound,
                         (std::fabs(d_[j]) + kDualTol) / std::fabs(alpha_[j]));
      }
      double best_alpha = 0.0;
      for (int j = 0; j < total; ++j) {
        if (!eligible(j)) continue;
        const double ratio = std::fabs(d_[j]) / std::fabs(alpha_[j]);
        if (ratio <= bound && std::fabs(alpha_[j]) > best_alpha) {
          best_alpha = std::fabs(alpha_[j]);
          q = j;
        }
      }
    }
    if (q < 0) return Inner::kInfeasible;

    Ftran(q, column_);
    if (std::fabs(column_[p] - alpha_[q]) > 1e-7 * (1.0 + std::fabs(alpha_[q]))) {
      if (++numerical_retries > 3) return Inner::kNumerical;
      Refactor();
      ComputePrimal();
      ComputeDuals();
      if (!MakeDualFeasible()) return Inner::kNumerical;
      continue;
    }

    const double theta = d_[q] / alpha_[q];
    const double delta = (x_[leaving] - target) / column_[p];
    x_[q] += delta;
    for (int i = 0; i < m_; ++i) {
      if (column_[i] != 0.0) x_[basis_[i]] -= column_[i] * delta;
    }
    for (int j = 0; j < total; ++j) {
      if (status_[j] != kBasic && alpha_[j] != 0.0) d_[j] -= theta * alpha_[j];
    }
    d_[q] = 0.0;
    d_[leaving] = -theta;
    x_[leaving] = target;
    status_[leaving] = to_lower ? kAtLower : kAtUpper;
    if (lo_[leaving] == hi_[leaving]) status_[leaving] = kAtLower;
    status_[q] = kBasic;
    basis_[p] = q;
    UpdateInverse(p, column_);

    if (std::fabs(theta) < 1e-12) {
      if (++degenerate_run_ > kDegenerateRunForBland) bland_ = true;
    } else {
      degenerate_run_ = 0;
      bland_ = false;
    }
  }
}

// Two-phase primal simplex: phase 1 minimizes the total bound violation of
// basic variables, phase 2 the true objective. Duals are recomputed each
// iteration.
BoundedSimplex::Inner BoundedSimplex::PrimalSimplex(
    const std::optional<Clock::time_point>& deadline) {
  const int total = n_ + m_;
  std::vector<double> cb(m_);
  while (true) {
    if (++iterations_ - solve_start_ > kIterationCap || Expired(deadline)) return Inner::kLimit;
    if (pivots_since_refactor_ >= kRefactorPeriod) {
      Refactor();
      ComputePrimal();
    }

    bool phase_one = false;
    for (int i = 0; i < m_; ++i) {
      const int b = basis_[i];
      if (x_[b] < lo_[b] - kPrimalTol) {
        cb[i] = -1.0;
        phase_one = true;
      } else if (x_[b] > hi_[b] + kPrimalTol) {
        cb[i] = 1.0;
        phase_one = true;
      } else {
        cb[i] = 0.0;
      }
    }
    if (phase_one) {
      ComputeDuals(cb);
      for (int j = 0; j < total; ++j) {
        d_[j] = status_[j] == kBasic ? 0.0 : -d_[j];
      }
    } else {
      ComputeDuals();
    }

    int q = -1;
    double best = 0.0;
    for (int j = 0; j < total; ++j) {
      if (status_[j] == kBasic || lo_[j] == hi_[j]) continue;
      const double d = d_[j];
      const bool improves = (d < -kDualTol && CanIncrease(j)) ||
                            (d > kDualTol && CanDecrease(j));
      if (!improves) continue;
      if (bland_) {
        q = j;
        break;
      }
      if (std::fabs(d) > best) {
        best = std::fabs(d);
        q = j;
      }
    }
    if (q < 0) return phase_one ? Inner::kInfeasible : Inner::kOptimal;

    const double dir = d_[q] < 0.0 ? 1.0 : -1.0;
    Ftran(q, column_);

    // Ratio test. Each basic moves at rate r = -column_i * dir per unit step.
    double step = hi_[q] - lo_[q];  // bound flip
    int p = -1;
    bool leave_at_upper = false;
    double p_rate = 0.0;
    for (int i = 0; i < m_; ++i) {
      const double r = -column_[i] * dir;
      if (std::fabs(r) < kPivotTol) continue;
      const int b = basis_[i];
      const double x = x_[b];
      double limit = kInfinity;
      bool at_upper = false;
      if (r < 0.0) {
        if (x > hi_[b] + kPrimalTol) {
          limit = (x - hi_[b]) / -r;
          at_upper = true;
        } else if (x >= lo_[b] - kPrimalTol && std::isfinite(lo_[b])) {
          limit = std::max(0.0, x - lo_[b]) / -r;
        }
      } else {
        if (x < lo_[b] - kPrimalTol) {
          limit = (lo_[b] - x) / r;
        } else if (x <= hi_[b] + kPrimalTol && std::isfinite(hi_[b])) {
          limit = std::max(0.0, hi_[b] - x) / r;
          at_upper = true;
        }
      }
      if (!std::isfinite(limit)) continue;
      bool take = false;
      if (limit < step - 1e-12) {
        take = true;
      } else if (limit <= step + 1e-12 && p >= 0) {
        take = bland_ ? b < basis_[p] : std::fabs(r) > std::fabs(p_rate);
      }
      if (take) {
        step = limit;
        p = i;
        leave_at_upper = at_upper;
        p_rate = r;
      }
    }
    if (!std::isfinite(step)) {
      if (phase_one) return Inner::kNumerical;
      return Inner::kUnbounded;
    }

    x_[q] += dir * step;
    for (int i = 0; i < m_; ++i) {
      if (column_[i] != 0.0) x_[basis_[i]] -= column_[i] * dir * step;
    }
    if (p < 0) {
      status_[q] = status_[q] == kAtUpper ? kAtLower : kAtUpper;
      x_[q] = status_[q] == kAtUpper ? hi_[q] : lo_[q];
    } else {
      const int leaving = basis_[p];
      status_[leaving] = leave_at_upper ? kAtUpper : kAtLower;
      x_[leaving] = leave_at_upper ? hi_[leaving] : lo_[leaving];
      status_[q] = kBasic;
      basis_[p] = q;
      UpdateInverse(p, column_);
    }

    if (step < 1e-12) {
      if (++degenerate_run_ > kDegenerateRunForBland) bland_ = true;
    } else {
      degenerate_run_ = 0;
      bland_ = false;
    }
  }
}

LpStatus BoundedSimplex::Solve(std::optional<Clock::time_point> deadline) {
  if (trivially_infeasible_) return LpStatus::kInfeasible;
  for (int j = 0; j < n_; ++j) {
    if (lo_[j] > hi_[j]) return LpStatus::kInfeasible;
  }
  bland_ = false;
  degenerate_run_ = 0;
  solve_start_ = iterations_;
  for (int attempt = 0; attempt < 4; ++attempt) {
    if (attempt > 0) Refactor();
    for (int j = 0; j < n_ + m_; ++j) {
      if (status_[j] != kBasic) PlaceNonbasic(j);
    }
    ComputePrimal();
    ComputeDuals();
    Inner result = MakeDualFeasible() ? DualSimplex(deadline)
                                      : PrimalSimplex(deadline);
    if (result == Inner::kNumerical) {
      bland_ = true;
      result = PrimalSimplex(deadline);
    }
    switch (result) {
      case Inner::kLimit:
        return LpStatus::kIterationLimit;
      case Inner::kUnbounded:
        return LpStatus::kUnbounded;
      case Inner::kInfeasible:
        return LpStatus::kInfeasible;
      case Inner::kNumerical:
        continue;
      case Inner::kOptimal:
        break;
    }
    // Verify with values recomputed from the current inverse.
    ComputePrimal();
    ComputeDuals();
    double primal = 0.0;
    double dual = 0.0;
    for (int j = 0; j < n_ + m_; ++j) {
      primal = std::max(primal, Infeasibility(j));
      if (status_[j] == kAtLower && lo_[j] < hi_[j]) dual = std::max(dual, -d_[j]);
      if (status_[j] == kAtUpper && lo_[j] < hi_[j]) dual = std::max(dual, d_[j]);
      if (status_[j] == kFree) dual = std::max(dual, std::fabs(d_[j]));
    }
    if (primal <= 1e-7 && dual <= 1e-7) return LpStatus::kOptimal;
  }
  return LpStatus::kIterationLimit;
}

double BoundedSimplex::objective() const {
  double value = offset_;
  for (int j = 0; j < n_; ++j) value += cost_[j] * x_[j];
  return value;
}

std::vector<double> BoundedSimplex::ColumnValues() const {
  std::vector<double> values(x_.begin(), x_.begin() + n_);
  for (int j = 0; j < n_; ++j) {
    values[j] = std::clamp(values[j], lo_[j], hi_[j]);
  }
  return values;
}

MilpSolution SolveLp(const MilpProblem& problem) {
  const auto start = Clock::now();
  BoundedSimplex lp(problem);
  MilpSolution solution;
  switch (lp.Solve()) {
    case LpStatus::kOptimal:
      solution.status = SolveStatus::kOptimal;
      solution.assignment = lp.ColumnValues();
      solution.objective_value = problem.Evaluate(solution.assignment);
      break;
    case LpStatus::kInfeasible:
      solution.status = SolveStatus::kInfeasible;
      break;
    case LpStatus::kUnbounded:
      solution.status = SolveStatus::kUnbounded;
      break;
    case LpStatus::kIterationLimit:
      solution.status = SolveStatus::kTimeLimitNoSolution;
      break;
  }
  solution.wall_time =
      std::chrono::duration<double>(Clock::now() - start).count();
  return solution;
}

}  // namespace pdpsd::milp
