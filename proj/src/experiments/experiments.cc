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

#include "pdpsd/experiments/experiments.h"

#include <algorithm>
#include <set>

#include "pdpsd/core/cost.h"
#include "pdpsd/core/errors.h"
#include "pdpsd/experiments/fixtures.h"
#include "pdpsd/io/json_io.h"
#include "pdpsd/planning/offline.h"

namespace pdpsd {
namespace {

constexpr double kLoadTol = 1e-6;

// Instance without the customers requested after epoch `last`.
Instance UpToEpoch(const Instance& instance, int last, int& dropped) {
  Instance out = instance;
  std::set<int> gone;
  out.customers.clear();
  for (const Customer& c : instance.customers) {
    if (c.request_epoch > last) {
      if (c.demand_flag == 1) ++dropped;
      gone.insert(c.id);
    } else {
      out.customers.push_back(c);
    }
  }
  for (Scenario& s : out.scenarios.scenarios) {
    for (int id : gone) s.sizes.erase(id);
  }
  out.dependencies.pairs.clear();
  for (const auto& [a, b] : instance.dependencies.pairs) {
    if (gone.count(a) == 0 && gone.count(b) == 0) {
      out.dependencies.pairs.emplace_back(a, b);
    } else if (gone.count(a) == 0 || gone.count(b) == 0) {
      throw InputError("dependency (" + std::to_string(a) + "," +
                       std::to_string(b) + ") spans disabled epochs");
    }
  }
  return out;
}

std::string Cost(const std::optional<double>& v) {
  return v ? FormatMilli(*v, false) : std::string("infeasible");
}

}  // namespace

std::optional<double> RealizedCost(const Instance& instance, const Plan& plan,
                                   int plan_scenario, int w) {
  double total = instance.cost.outsource_penalty *
                 static_cast<double>(plan.outsourced.size());
  for (const auto& [truck_id, used] : plan.truck_used) {
    if (used) total += instance.FindTruck(truck_id)->initial_cost;
  }
  const auto& routes = plan.routes[plan_scenario];
  for (std::size_t t = 0; t < routes.size(); ++t) {
    const auto& stops = routes[t];
    if (stops.empty()) continue;
    const double capacity = instance.FindTruck(plan.truck_ids[t])->capacity;
    double load = 0.0;
    for (LocationId c : stops) {
      if (c != kDepot) load += std::max(0.0, -instance.Size(c, w));
    }
    if (load > capacity + kLoadTol) return std::nullopt;
    for (LocationId c : stops) {
      if (c == kDepot) continue;
      load += instance.Size(c, w);
      if (load < -kLoadTol || load > capacity + kLoadTol) return std::nullopt;
    }
    total += instance.cost.RoutingCost(WalkDistance(instance, stops));
  }
  return total;
}

ComparisonReport RunStochasticComparison(const Instance& instance, int heavy,
                                         int light,
                                         const milp::MilpSettings& settings) {
  const int n = instance.scenarios.size();
  if (heavy < 0 || heavy >= n || light < 0 || light >= n || heavy == light) {
    throw InputError("comparison needs two distinct scenarios");
  }
  ComparisonReport report;
  report.stochastic = SolveOffline(instance, settings);
  const Instance heavy_only = KnownScenarioInstance(instance, heavy);
  const Instance light_only = KnownScenarioInstance(instance, light);
  report.deterministic = SolveOffline(heavy_only, settings);
  report.known_heavy = report.deterministic;
  report.known_light = SolveOffline(light_only, settings);

  report.deterministic_expected = 0.0;
  for (int w = 0; w < n; ++w) {
    const Scenario& s = instance.scenarios.scenarios[w];
    const auto stochastic = RealizedCost(instance, report.stochastic, w, w);
    const auto deterministic = RealizedCost(instance, report.deterministic, 0, w);
    report.rows.push_back({"stochastic", s.id, s.probability, stochastic});
    report.rows.push_back({"deterministic", s.id, s.probability, deterministic});
    report.stochastic_expected += s.probability * stochastic.value_or(0.0);
    if (deterministic && report.deterministic_expected) {
      *report.deterministic_expected += s.probability * *deterministic;
    } else {
      report.deterministic_expected.reset();
    }
  }
  report.known_heavy_cost = report.known_heavy.ScenarioCost(heavy_only, 0);
  report.known_light_cost = report.known_light.ScenarioCost(light_only, 0);
  report.rows.push_back({"known", instance.scenarios.scenarios[heavy].id, 1.0,
                         report.known_heavy_cost});
  report.rows.push_back({"known", instance.scenarios.scenarios[light].id, 1.0,
                         report.known_light_cost});
  return report;
}

SweepReport RunEpochSweep(const Instance& instance,
                          const SimulationSettings& settings) {
  std::set<int> epochs;
  for (const Customer& c : instance.customers) {
    if (c.request_epoch > 0) epochs.insert(c.request_epoch);
  }
  std::vector<int> limits{0};
  limits.insert(limits.end(), epochs.begin(), epochs.end());
  SweepReport report;
  for (std::size_t e = 0; e < limits.size(); ++e) {
    int dropped = 0;
    const Instance part = UpToEpoch(instance, limits[e], dropped);
    SimulationResult result = RunSimulation(part, {}, settings);
    SweepRow row;
    row.enabled_epochs = static_cast<int>(e);
    row.outsourced = static_cast<int>(result.outsourced.size()) + dropped;
    row.served = static_cast<int>(result.requested.size() + dropped) - row.outsourced;
    row.delivery_cost = result.delivery_cost;
    row.total_cost = result.total_cost + instance.cost.outsource_penalty * dropped;
    row.issues = CheckSimulation(part, result);
    report.rows.push_back(std::move(row));
    if (e + 1 == limits.size()) report.full = std::move(result);
  }
  return report;
}

nlohmann::json ComparisonJson(const ComparisonReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ComparisonRow& r : report.rows) {
    nlohmann::json item = {{"plan", r.plan},
                           {"scenario", r.scenario},
                           {"probability", r.probability}};
    item["cost"] = r.cost ? nlohmann::json(RoundMilli(*r.cost)) : nlohmann::json();
    rows.push_back(item);
  }
  nlohmann::json doc;
  doc["kind"] = "experiment";
  doc["name"] = "stochastic-vs-deterministic";
  doc["series"] = rows;
  doc["stochasticExpected"] = RoundMilli(report.stochastic_expected);
  doc["deterministicExpected"] =
      report.deterministic_expected
          ? nlohmann::json(RoundMilli(*report.deterministic_expected))
          : nlohmann::json();
  doc["stochasticStatus"] = milp::ToString(report.stochastic.status);
  doc["stochasticGap"] = report.stochastic.gap;
  return doc;
}

std::string ComparisonCsv(const ComparisonReport& report) {
  std::string out = "plan,scenario,probability,realizedCost\n";
  for (const ComparisonRow& r : report.rows) {
    out += r.plan + "," + r.scenario + "," + FormatMilli(r.probability, true) + "," +
           Cost(r.cost) + "\n";
  }
  out += "stochastic,expected,1," + FormatMilli(report.stochastic_expected, false) +
         "\n";
  out += "deterministic,expected,1," + Cost(report.deterministic_expected) + "\n";
  return out;
}

nlohmann::json SweepJson(const SweepReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepRow& r : report.rows) {
    rows.push_back({{"enabledEpochs", r.enabled_epochs},
                    {"served", r.served},
                    {"outsourced", r.outsourced},
                    {"deliveryCost", RoundMilli(r.delivery_cost)},
                    {"totalCost", RoundMilli(r.total_cost)}});
  }
  nlohmann::json doc;
  doc["kind"] = "experiment";
  doc["name"] = "cost-vs-epochs";
  doc["series"] = rows;
  return doc;
}

std::string SweepCsv(const SweepReport& report) {
  std::string out =
      "enabledEpochs,servedCustomers,outsourcedCustomers,deliveryCost,totalCost\n";
  for (const SweepRow& r : report.rows) {
    out += std::to_string(r.enabled_epochs) + "," + std::to_string(r.served) + "," +
           std::to_string(r.outsourced) + "," + FormatMilli(r.delivery_cost, false) +
           "," + FormatMilli(r.total_cost, false) + "\n";
  }
  return out;
}

}  // namespace pdpsd
