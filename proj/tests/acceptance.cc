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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pdpsd/core/cost.h"
#include "pdpsd/experiments/experiments.h"
#include "pdpsd/experiments/fixtures.h"
#include "pdpsd/io/json_io.h"
#include "pdpsd/io/solomon.h"
#include "pdpsd/milp/solver.h"
#include "pdpsd/planning/offline.h"
#include "pdpsd/planning/reroute.h"
#include "random_milp.h"
#include "route_oracle.h"
#include "sim_oracle.h"

namespace pdpsd {
namespace {

const SolomonData& C101() {
  static const SolomonData data = ReadSolomonFile(PDPSD_TEST_DATA "/C101_25.txt");
  return data;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// 1. Cost arithmetic over the reference trace row distances.
Outcome CostArithmetic() {
  // Depot plus one customer at distance D; customers 2-5 only exist to be
  // outsourced.
  auto cost = [](double d, int outsourced) {
    Instance instance;
    instance.trucks = {{1, 50.0, 0.0}};
    std::vector<std::vector<double>> m(6, std::vector<double>(6, 0.0));
    m[0][1] = d;
    instance.distances = DistanceProvider::FromMatrix(m);
    const std::vector<int> used{1};
    const std::vector<Arc> arcs{{0, 1}, {1, 0}};
    std::vector<int> out;
    for (int i = 0; i < outsourced; ++i) out.push_back(2 + i);
    return PlanCost(instance, used, arcs, out);
  };
  struct Row {
    double distance;
    int outsourced;
    double expected;
  };
  const Row rows[] = {{95.5, 0, 10.028}, {98.0, 0, 10.290},
                      {63.6, 4, 70.678}, {159.2, 4, 80.715}};
  Outcome o{true, ""};
  for (const Row& r : rows) {
    const double got = RoundMilli(cost(r.distance, r.outsourced));
    o.detail += FormatMilli(got, false) + " ";
    if (std::llabs(ToMilli(got) - ToMilli(r.expected)) > 1) o.pass = false;
  }
  return o;
}

Plan SingleRoutePlan(const Instance& instance, const std::string& scenario,
                     std::vector<LocationId> route) {
  Plan plan;
  plan.scenario_ids = {scenario};
  plan.probabilities = {1.0};
  plan.truck_ids = {instance.trucks.at(0).id};
  plan.truck_used[plan.truck_ids[0]] = true;
  plan.routes = {{route}};
  return plan;
}

// 2. Starting weights along the reference solution trace.
Outcome WeightPropagation() {
  const Instance instance = ReplanTraceInstance(C101());
  SimulationState state = InitialState(instance, "w2");
  std::vector<double> weights;
  const Plan first =
      SingleRoutePlan(instance, "w2", {0, 2, 4, 5, 7, 8, 1, 6, 10, 3, 9, 0});
  AdoptPlan(instance, first, state);
  weights.push_back(state.trucks[0].load);
  state = ObserveState(instance, state, {8});
  weights.push_back(state.trucks[0].load);
  const Plan second =
      SingleRoutePlan(instance, "w2", {10, 15, 11, 3, 9, 13, 12, 14, 0});
  state = ObserveState(instance, state, second, {5});
  weights.push_back(state.trucks[0].load);
  Outcome o;
  o.pass = weights == std::vector<double>{50.0, 10.0, 30.0};
  for (double w : weights) o.detail += FormatMilli(w, true) + " ";
  return o;
}

// 3. Branch and bound against exhaustive enumeration.
Outcome MilpOracle() {
  std::mt19937 rng(7);
  int mismatches = 0;
  int infeasible = 0;
  const int trials = 240;
  for (int t = 0; t < trials; ++t) {
    const milp::MilpProblem p =
        milp::testing_util::RandomMilp(rng, 1 + t % 12, 1 + (t * 7) % 20, t % 3);
    const milp::MilpSolution s = milp::SolveMilp(p);
    const milp::MilpSolution e = milp::EnumerateMilp(p);
    if (e.status == milp::SolveStatus::kInfeasible) ++infeasible;
    if (s.status != e.status) {
      ++mismatches;
    } else if (e.has_solution() &&
               std::abs(s.objective_value - e.objective_value) > 1e-6) {
      ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(trials) + " problems, " +
                               std::to_string(infeasible) + " infeasible, " +
                               std::to_string(mismatches) + " mismatches"};
}

// 4. Offline model against exhaustive subset x permutation search.
Outcome OfflineOracle() {
  std::mt19937 rng(11);
  int mismatches = 0;
  const int trials = 25;
  for (int t = 0; t < trials; ++t) {
    const Instance instance = testing_util::RandomSmallInstance(rng, 1 + t % 5);
    const auto oracle = testing_util::BruteForcePlan(instance);
    const Plan plan = SolveOffline(instance);
    if (std::abs(plan.objective - oracle.cost) > 1e-6) ++mismatches;
  }
  return {mismatches == 0,
          std::to_string(trials) + " instances, " + std::to_string(mismatches) +
              " mismatches"};
}

// 5. Stochastic versus deterministic planning with default settings.
Outcome StochasticComparison() {
  const Instance instance = StochasticComparisonInstance(C101());
  const ComparisonReport r = RunStochasticComparison(instance, 0, 1, {});
  const bool expected_ok =
      r.deterministic_expected
          ? r.stochastic_expected <= *r.deterministic_expected + 1e-6
          : true;  // the deterministic plan breaks capacity in some scenario
  const bool known_ok = r.known_heavy_cost >= r.known_light_cost - 1e-6;
  std::ostringstream d;
  d << "E[stochastic] " << FormatMilli(r.stochastic_expected, false)
    << " E[deterministic] "
    << (r.deterministic_expected ? FormatMilli(*r.deterministic_expected, false)
                                 : std::string("infeasible"))
    << " known w1 " << FormatMilli(r.known_heavy_cost, false) << " known w2 "
    << FormatMilli(r.known_light_cost, false) << "; stochastic solve "
    << milp::ToString(r.stochastic.status) << " gap " << r.stochastic.gap << " after "
    << r.stochastic.node_count << " nodes";
  return {expected_ok && known_ok, d.str()};
}

// 6. Cost as request epochs are accepted.
Outcome EpochSweep() {
  const Instance instance = RerouteEffectivenessInstance(C101(), {10, 5, 5, 5});
  SimulationSettings settings;
  settings.trigger = ReplanTrigger::KthFromRouteEnd(3);
  const SweepReport report = RunEpochSweep(instance, settings);
  bool served_up = true;
  bool cost_down = true;
  bool valid = true;
  std::string detail;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const SweepRow& row = report.rows[i];
    detail += std::to_string(row.served) + "/" + FormatMilli(row.total_cost, false) + " ";
    if (!row.issues.empty()) valid = false;
    if (i == 0) continue;
    if (row.served < report.rows[i - 1].served) served_up = false;
    if (row.total_cost > report.rows[i - 1].total_cost + 1e-6) cost_down = false;
  }
  for (std::size_t i = 1; i < report.full.epochs.size(); ++i) {
    if (report.full.epochs[i].served_count < report.full.epochs[i - 1].served_count) {
      served_up = false;
    }
  }
  // Row 0 is the offline run with every later customer outsourced.
  const bool economy =
      report.full.total_cost <= report.rows.front().total_cost + 1e-6;
  detail += served_up ? "(a) ok " : "(a) FAIL ";
  detail += cost_down ? "(b) ok " : "(b) FAIL ";
  detail += economy ? "(c) ok" : "(c) FAIL";
  return {served_up && cost_down && economy && valid, detail};
}

// 7. Invariants over random small simulations.
Outcome InvariantSuite() {
  std::mt19937 rng(5);
  const int trials = 60;
  int bad = 0;
  int failures = 0;
  std::string first;
  for (int t = 0; t < trials; ++t) {
    const testing_util::SimulationCase c = testing_util::RandomSimulationCase(rng);
    SimulationSettings settings;
    settings.trigger = ReplanTrigger::KthFromRouteEnd(c.k);
    settings.realized_scenario = c.realized;
    const SimulationResult result = RunSimulation(c.base, c.events, settings);
    const Instance full = WithEvents(c.base, c.events);
    auto issues = CheckSimulation(full, result);
    const auto oracle = testing_util::OracleCheck(full, result);
    issues.insert(issues.end(), oracle.begin(), oracle.end());
    for (const EpochRecord& e : result.epochs) failures += e.failed ? 1 : 0;
    if (!issues.empty()) {
      ++bad;
      if (first.empty()) first = "trial " + std::to_string(t) + ": " + issues.front();
    }
  }
  return {bad == 0, std::to_string(trials) + " runs, " + std::to_string(failures) +
                        " failed re-plans recorded, " + std::to_string(bad) +
                        " with violations" + (first.empty() ? "" : "; " + first)};
}

// 8. Two serial runs give byte-identical documents.
Outcome Determinism() {
  std::vector<std::string> docs[2];
  for (auto& out : docs) {
    const Instance reroute = RerouteEffectivenessInstance(C101(), {10, 5, 5, 5});
    SimulationSettings settings;
    settings.trigger = ReplanTrigger::KthFromRouteEnd(3);
    const SimulationResult sim = RunSimulation(reroute, {}, settings);
    out.push_back(DumpJson(SimulationJson(reroute, sim)));
    out.push_back(SimulationCsv(sim));

    const Instance trace = ReplanTraceInstance(C101());
    settings.realized_scenario = "w2";
    const SimulationResult traced = RunSimulation(trace, {}, settings);
    out.push_back(DumpJson(SimulationJson(trace, traced)));
    out.push_back(SimulationCsv(traced));

    const Instance light = KnownScenarioInstance(StochasticComparisonInstance(C101()), 1);
    const Plan plan = SolveOffline(light);
    out.push_back(DumpJson(PlanJson(light, plan)));
    out.push_back(PlanCsv(light, plan));
  }
  return {docs[0] == docs[1], std::to_string(docs[0].size()) + " documents compared"};
}

}  // namespace
}  // namespace pdpsd

int main() {
  using Clock = std::chrono::steady_clock;
  const std::vector<std::pair<const char*, std::function<pdpsd::Outcome()>>> criteria = {
      {"cost arithmetic", pdpsd::CostArithmetic},
      {"weight propagation", pdpsd::WeightPropagation},
      {"milp oracle", pdpsd::MilpOracle},
      {"offline brute force", pdpsd::OfflineOracle},
      {"stochastic vs deterministic", pdpsd::StochasticComparison},
      {"epoch sweep", pdpsd::EpochSweep},
      {"simulation invariants", pdpsd::InvariantSuite},
      {"determinism", pdpsd::Determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    pdpsd::Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("criterion %zu %s: %s (%.1fs) %s\n", i + 1, criteria[i].first,
                o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
