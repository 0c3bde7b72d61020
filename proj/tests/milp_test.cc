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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "pdpsd/core/errors.h"
#include "pdpsd/milp/simplex.h"
#include "pdpsd/milp/solver.h"
#include "random_milp.h"

namespace pdpsd::milp {
namespace {

// Minimum over all vertices of {rows, box}: every choice of n linearly
// independent active constraints is solved and kept when feasible.
std::optional<double> VertexEnumerationOptimum(const MilpProblem& p) {
  const int n = p.num_vars();
  std::vector<Eigen::VectorXd> normals;
  std::vector<double> rhs;
  for (const Row& row : p.rows) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
    for (const Term& t : row.terms) a[t.var] += t.coef;
    normals.push_back(a);
    rhs.push_back(row.rhs);
  }
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[j] = 1.0;
    normals.push_back(e);
    rhs.push_back(p.lower[j]);
    normals.push_back(e);
    rhs.push_back(p.upper[j]);
  }
  const int total = static_cast<int>(normals.size());
  std::optional<double> best;
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    Eigen::MatrixXd a(n, n);
    Eigen::VectorXd b(n);
    for (int r = 0; r < n; ++r) {
      a.row(r) = normals[pick[r]].transpose();
      b[r] = rhs[pick[r]];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (lu.isInvertible()) {
      Eigen::VectorXd x = lu.solve(b);
      std::vector<double> v(x.data(), x.data() + n);
      if (p.MaxViolation(v) <= 1e-8) {
        const double obj = p.Evaluate(v);
        if (!best || obj < *best) best = obj;
      }
    }
    int k = n - 1;
    while (k >= 0 && pick[k] == total - n + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int r = k + 1; r < n; ++r) pick[r] = pick[r - 1] + 1;
  }
  return best;
}

TEST(SolveLpTest, SingleActiveBound) {
  MilpProblem p;
  int x = p.AddVariable("x", 0, 10, VarType::kContinuous, 1.0);
  p.AddRow({{x, 1.0}}, RowSense::kGreaterEqual, 3.0);
  MilpSolution s = SolveLp(p);
  ASSERT_EQ(s.status, SolveStatus::kOptimal);
  EXPECT_NEAR(s.objective_value, 3.0, 1e-9);
  EXPECT_NEAR(s.assignment[0], 3.0, 1e-9);
}

TEST(SolveLpTest, SymmetricFace) {
  MilpProblem p;
  int x = p.AddVariable("x", 0, 1, VarType::kContinuous, -1.0);
  int y = p.AddVariable("y", 0, 1, VarType::kContinuous, -1.0);
  p.AddRow({{x, 1.0}, {y, 1.0}}, RowSense::kLessEqual, 1.0);
  MilpSolution s = SolveLp(p);
  ASSERT_EQ(s.status, SolveStatus::kOptimal);
  EXPECT_NEAR(s.objective_value, -1.0, 1e-9);
}

TEST(SolveLpTest, DetectsUnbounded) {
  MilpProblem p;
  int x = p.AddVariable("x", 0, kInfinity, VarType::kContinuous, -1.0);
  int y = p.AddVariable("y", 0, kInfinity, VarType::kContinuous, 0.0);
  p.AddRow({{x, 1.0}, {y, -1.0}}, RowSense::kLessEqual, 2.0);
  EXPECT_EQ(SolveLp(p).status, SolveStatus::kUnbounded);
}

TEST(SolveLpTest, DetectsInfeasible) {
  MilpProblem p;
  int x = p.AddVariable("x", 0, kInfinity, VarType::kContinuous, 1.0);
  int y = p.AddVariable("y", 0, kInfinity, VarType::kContinuous, 1.0);
  p.AddRow({{x, 1.0}, {y, 1.0}}, RowSense::kLessEqual, 1.0);
  p.AddRow({{x, 1.0}, {y, 2.0}}, RowSense::kGreaterEqual, 3.0);
  EXPECT_EQ(SolveLp(p).status, SolveStatus::kInfeasible);
}

TEST(SolveLpTest, FreeVariablesAndEqualities) {
  // min x + 2y, x - y = 1, x + y >= 3, x, y free.
  MilpProblem p;
  int x = p.AddVariable("x", -kInfinity, kInfinity, VarType::kContinuous, 1.0);
  int y = p.AddVariable("y", -kInfinity, kInfinity, VarType::kContinuous, 2.0);
  p.AddRow({{x, 1.0}, {y, -1.0}}, RowSense::kEqual, 1.0);
  p.AddRow({{x, 1.0}, {y, 1.0}}, RowSense::kGreaterEqual, 3.0);
  MilpSolution s = SolveLp(p);
  ASSERT_EQ(s.status, SolveStatus::kOptimal);
  EXPECT_NEAR(s.assignment[0], 2.0, 1e-9);
  EXPECT_NEAR(s.assignment[1], 1.0, 1e-9);
  EXPECT_NEAR(s.objective_value, 4.0, 1e-9);
}

TEST(SolveLpTest, EmptyRowsAreDropped) {
  MilpProblem p;
  p.AddVariable("x", 0, 1, VarType::kContinuous, 1.0);
  p.AddRow({}, RowSense::kLessEqual, 5.0);
  EXPECT_EQ(SolveLp(p).status, SolveStatus::kOptimal);
  p.AddRow({}, RowSense::kGreaterEqual, 5.0);
  EXPECT_EQ(SolveLp(p).status, SolveStatus::kInfeasible);
}

TEST(SolveLpTest, MalformedProblemThrows) {
  MilpProblem p;
  p.AddVariable("x", 2, 1, VarType::kContinuous, 1.0);
  EXPECT_THROW(SolveLp(p), InputError);
  MilpProblem q;
  q.AddVariable("x", 0, 1, VarType::kContinuous, 1.0);
  q.AddRow({{3, 1.0}}, RowSense::kLessEqual, 1.0);
  EXPECT_THROW(SolveLp(q), InputError);
}

TEST(SolveLpTest, MatchesVertexEnumerationOnRandomDenseLps) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> size(1, 6);
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  int optimal = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = size(rng);
    const int m = size(rng);
    MilpProblem p;
    for (int j = 0; j < n; ++j) {
      p.AddVariable("x" + std::to_string(j), -4.0, 4.0, VarType::kContinuous,
                    coef(rng));
    }
    for (int i = 0; i < m; ++i) {
      std::vector<Term> terms;
      for (int j = 0; j < n; ++j) terms.push_back({j, coef(rng)});
      p.AddRow(terms, rng() % 2 ? RowSense::kLessEqual : RowSense::kGreaterEqual,
               coef(rng));
    }
    const auto oracle = VertexEnumerationOptimum(p);
    const MilpSolution s = SolveLp(p);
    if (!oracle) {
      EXPECT_EQ(s.status, SolveStatus::kInfeasible) << "trial " << trial;
      continue;
    }
    ++optimal;
    ASSERT_EQ(s.status, SolveStatus::kOptimal) << "trial " << trial;
    EXPECT_NEAR(s.objective_value, *oracle, 1e-9 * (1.0 + std::fabs(*oracle)))
        << "trial " << trial;
    EXPECT_LE(p.MaxViolation(s.assignment), 1e-9);
  }
  EXPECT_GT(optimal, 50);
}

TEST(SolveLpTest, MatchesVertexEnumerationWithHalfInfiniteBounds) {
  // One-sided bounds leave the slack basis dual infeasible, which exercises
  // the primal path. The oracle works on a 1e3 box; an optimum touching the
  // box means the true LP is unbounded.
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> size(1, 5);
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = size(rng);
    const int m = size(rng);
    MilpProblem p;
    for (int j = 0; j < n; ++j) {
      const bool lower_side = rng() % 2;
      p.AddVariable("x", lower_side ? -4.0 : -kInfinity,
                    lower_side ? kInfinity : 4.0, VarType::kContinuous,
                    coef(rng));
    }
    for (int i = 0; i < m; ++i) {
      std::vector<Term> terms;
      for (int j = 0; j < n; ++j) terms.push_back({j, coef(rng)});
      p.AddRow(terms, rng() % 2 ? RowSense::kLessEqual : RowSense::kGreaterEqual,
               coef(rng));
    }
    MilpProblem boxed = p;
    for (int j = 0; j < n; ++j) {
      boxed.lower[j] = std::max(boxed.lower[j], -1e3);
      boxed.upper[j] = std::min(boxed.upper[j], 1e3);
    }
    const auto oracle = VertexEnumerationOptimum(boxed);
    const MilpSolution s = SolveLp(p);
    if (!oracle) {
      EXPECT_EQ(s.status, SolveStatus::kInfeasible) << "trial " << trial;
      continue;
    }
    const MilpSolution on_box = SolveLp(boxed);
    ASSERT_EQ(on_box.status, SolveStatus::kOptimal) << "trial " << trial;
    bool touches_box = false;
    for (double v : on_box.assignment) touches_box |= std::fabs(v) > 999.0;
    if (touches_box) {
      EXPECT_EQ(s.status, SolveStatus::kUnbounded) << "trial " << trial;
    } else {
      ASSERT_EQ(s.status, SolveStatus::kOptimal) << "trial " << trial;
      EXPECT_NEAR(s.objective_value, *oracle, 1e-8 * (1.0 + std::fabs(*oracle)))
          << "trial " << trial;
    }
  }
}

TEST(SolveLpTest, WarmStartAfterBoundChangesMatchesColdSolve) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    MilpProblem p = testing_util::RandomMilp(rng, 10, 12, 2);
    for (auto& t : p.types) t = VarType::kContinuous;
    BoundedSimplex warm(p);
    warm.Solve();
    for (int round = 0; round < 5; ++round) {
      MilpProblem changed = p;
      for (int j = 0; j < p.num_vars(); ++j) {
        if (rng() % 3 == 0) {
          const double v = std::floor(p.lower[j] + (rng() % 3) * 0.5);
          changed.lower[j] = std::min(v, p.upper[j]);
        }
        warm.SetColumnBounds(j, changed.lower[j], changed.upper[j]);
      }
      const LpStatus ws = warm.Solve();
      const MilpSolution cold = SolveLp(changed);
      if (cold.status == SolveStatus::kOptimal) {
        ASSERT_EQ(ws, LpStatus::kOptimal);
        EXPECT_NEAR(warm.objective(), cold.objective_value, 1e-7);
      } else {
        EXPECT_EQ(cold.status, SolveStatus::kInfeasible);
        EXPECT_EQ(ws, LpStatus::kInfeasible);
      }
    }
  }
}

TEST(SolveMilpTest, KnapsackMatchesBruteForce) {
  const std::vector<double> value = {10, 13, 7, 8, 15, 4, 9, 11};
  const std::vector<double> weight = {5, 7, 3, 4, 8, 2, 5, 6};
  const double cap = 20;
  MilpProblem p;
  std::vector<Term> row;
  for (int j = 0; j < 8; ++j) {
    p.AddBinary("x" + std::to_string(j), -value[j]);
    row.push_back({j, weight[j]});
  }
  p.AddRow(row, RowSense::kLessEqual, cap);
  double best = 0;
  for (int mask = 0; mask < 256; ++mask) {
    double w = 0, v = 0;
    for (int j = 0; j < 8; ++j) {
      if (mask >> j & 1) {
        w += weight[j];
        v += value[j];
      }
    }
    if (w <= cap) best = std::max(best, v);
  }
  MilpSolution s = SolveMilp(p);
  ASSERT_EQ(s.status, SolveStatus::kOptimal);
  EXPECT_NEAR(s.objective_value, -best, 1e-9);
  EXPECT_LE(p.MaxIntegralityViolation(s.assignment), 1e-6);
}

TEST(SolveMilpTest, AssignmentIsSolvedAtRoot) {
  const double cost[3][3] = {{4, 1, 3}, {2, 0, 5}, {3, 2, 2}};
  MilpProblem p;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) p.AddBinary("x", cost[i][j]);
  }
  for (int i = 0; i < 3; ++i) {
    p.AddRow({{3 * i, 1}, {3 * i + 1, 1}, {3 * i + 2, 1}}, RowSense::kEqual, 1);
    p.AddRow({{i, 1}, {3 + i, 1}, {6 + i, 1}}, RowSense::kEqual, 1);
  }
  std::vector<int> perm = {0, 1, 2};
  double best = kInfinity;
  do {
    best = std::min(best, cost[0][perm[0]] + cost[1][perm[1]] + cost[2][perm[2]]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  MilpSolution s = SolveMilp(p);
  ASSERT_EQ(s.status, SolveStatus::kOptimal);
  EXPECT_NEAR(s.objective_value, best, 1e-9);
  EXPECT_EQ(s.node_count, 1);
}

TEST(SolveMilpTest, ContradictoryConstraintsAreInfeasible) {
  MilpProblem p;
  int x = p.AddVariable("x", -5, 5, VarType::kInteger, 1.0);
  p.AddRow({{x, 1.0}}, RowSense::kGreaterEqual, 1.0);
  p.AddRow({{x, 1.0}}, RowSense::kLessEqual, 0.0);
  EXPECT_EQ(SolveMilp(p).status, SolveStatus::kInfeasible);
  EXPECT_EQ(EnumerateMilp(p).status, SolveStatus::kInfeasible);
}

TEST(SolveMilpTest, FractionalBoundsRoundInward) {
  MilpProblem p;
  p.AddVariable("x", 0.5, 0.7, VarType::kInteger, 1.0);
  EXPECT_EQ(SolveMilp(p).status, SolveStatus::kInfeasible);
}

TEST(SolveMilpTest, InfeasibleInitialSolutionIsIgnored) {
  MilpProblem p;
  int x = p.AddBinary("x", -1.0);
  int y = p.AddBinary("y", -1.0);
  p.AddRow({{x, 1.0}, {y, 1.0}}, RowSense::kLessEqual, 1.0);
  MilpSettings settings;
  settings.initial_solution = std::vector<double>{1.0, 1.0};
  MilpSolution s = SolveMilp(p, settings);
  ASSERT_EQ(s.status, SolveStatus::kOptimal);
  EXPECT_NEAR(s.objective_value, -1.0, 1e-9);
  EXPECT_LE(p.MaxViolation(s.assignment), 1e-9);
}

TEST(SolveMilpTest, TimeLimitWithIncumbentReportsGap) {
  std::mt19937 rng(3);
  MilpProblem p = testing_util::RandomMilp(rng, 12, 10, 0);
  MilpSettings settings;
  settings.time_limit = 0.0;
  settings.initial_solution = std::vector<double>(p.lower);
  MilpSolution s = SolveMilp(p, settings);
  if (p.MaxViolation(p.lower) <= 1e-6) {
    EXPECT_EQ(s.status, SolveStatus::kTimeLimitFeasible);
    EXPECT_GE(s.gap, 0.0);
  } else {
    EXPECT_EQ(s.status, SolveStatus::kTimeLimitNoSolution);
  }
}

TEST(SolveMilpTest, MatchesEnumerationOnRandomProblems) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    MilpProblem p = testing_util::RandomMilp(rng, 1 + trial % 10, 1 + trial % 12,
                                             trial % 3);
    MilpSettings settings;
    settings.record_bound_log = true;
    const MilpSolution s = SolveMilp(p, settings);
    const MilpSolution e = EnumerateMilp(p);
    ASSERT_EQ(s.status, e.status) << "trial " << trial;
    if (!s.has_solution()) continue;
    EXPECT_NEAR(s.objective_value, e.objective_value, 1e-6) << "trial " << trial;
    EXPECT_LE(p.MaxViolation(s.assignment), 1e-6);
    EXPECT_LE(p.MaxIntegralityViolation(s.assignment), 1e-6);
    EXPECT_TRUE(std::is_sorted(s.bound_log.begin(), s.bound_log.end()));
  }
}

TEST(SolveMilpTest, ObjectiveScalingScalesOptimum) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    MilpProblem p = testing_util::RandomMilp(rng, 8, 6, 1);
    MilpProblem scaled = p;
    for (double& c : scaled.objective) c *= 3.5;
    const MilpSolution a = SolveMilp(p);
    const MilpSolution b = SolveMilp(scaled);
    ASSERT_EQ(a.status, b.status);
    if (a.has_solution()) {
      EXPECT_NEAR(b.objective_value / 3.5, a.objective_value, 1e-6);
    }
  }
}

TEST(SolveMilpTest, DeterministicAcrossRuns) {
  std::mt19937 rng(5);
  MilpProblem p = testing_util::RandomMilp(rng, 12, 12, 2);
  const MilpSolution a = SolveMilp(p);
  const MilpSolution b = SolveMilp(p);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.assignment, b.assignment);
  EXPECT_EQ(a.node_count, b.node_count);
}

TEST(EnumerateMilpTest, AllContinuousMatchesLp) {
  MilpProblem p;
  int x = p.AddVariable("x", 0, 4, VarType::kContinuous, -1.0);
  int y = p.AddVariable("y", 0, 4, VarType::kContinuous, -2.0);
  p.AddRow({{x, 1.0}, {y, 3.0}}, RowSense::kLessEqual, 6.0);
  EXPECT_NEAR(EnumerateMilp(p).objective_value, SolveLp(p).objective_value,
              1e-9);
}

TEST(EnumerateMilpTest, RejectsTooManyIntegers) {
  MilpProblem p;
  for (int j = 0; j < 25; ++j) p.AddBinary("b");
  EXPECT_THROW(EnumerateMilp(p), CapabilityError);
}

TEST(LpTextTest, ListsObjectiveRowsBoundsAndIntegers) {
  MilpProblem p;
  int x = p.AddBinary("x", 2.0);
  int y = p.AddVariable("y", 0, kInfinity, VarType::kContinuous, -1.0);
  p.AddRow({{x, 1.0}, {y, -1.5}}, RowSense::kGreaterEqual, 0.5, "cap");
  std::ostringstream out;
  WriteLpText(p, out);
  EXPECT_EQ(out.str(),
            "Minimize\n obj: 2 x - 1 y\nSubject To\n cap: 1 x - 1.5 y >= 0.5\n"
            "Bounds\n 0 <= x <= 1\n 0 <= y <= +inf\nGeneral\n x\nEnd\n");
}

}  // namespace
}  // namespace pdpsd::milp
