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

#include "pdpsd/planning/plan.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "pdpsd/core/cost.h"
#include "pdpsd/core/errors.h"
#include "pdpsd/milp/solver.h"
#include "pdpsd/planning/greedy.h"

namespace pdpsd {
namespace {

constexpr double kLoadTol = 1e-6;

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string InfeasibilityHint(const RouteModelInput& input) {
  std::vector<std::string> hints;
  std::set<int> origins;
  for (const ModelTruck& t : input.trucks) {
    if (t.origin != kDepot) origins.insert(t.origin);
    if (t.origin_load > t.capacity + kLoadTol) {
      hints.push_back("truck " + std::to_string(t.truck_id) + " origin load " +
                      Num(t.origin_load) + " exceeds capacity " +
                      Num(t.capacity));
    }
  }
  for (const auto& [a, b] : input.dependencies) {
    if (origins.count(b) > 0 && origins.count(a) == 0) {
      hints.push_back("dependency (" + std::to_string(a) + "," +
                      std::to_string(b) + ") needs " + std::to_string(a) +
                      " before the truck origin " + std::to_string(b));
    }
  }
  std::map<int, int> index;
  for (size_t c = 0; c < input.customers.size(); ++c) {
    index[input.customers[c]] = static_cast<int>(c);
  }
  double max_capacity = 0.0;
  for (const ModelTruck& t : input.trucks) {
    max_capacity = std::max(max_capacity, t.capacity);
  }
  for (const auto& [a, b] : input.dependencies) {
    for (const auto& sizes : input.sizes) {
      const double sa = sizes[index.at(a)];
      const double sb = sizes[index.at(b)];
      if (std::max(0.0, -sa) + std::max(0.0, -sb) > max_capacity ||
          std::max(0.0, sa) + std::max(0.0, sb) > max_capacity) {
        hints.push_back("dependency (" + std::to_string(a) + "," +
                        std::to_string(b) + ") forces an over-capacity pairing");
        break;
      }
    }
  }
  for (const auto& [c, t] : input.forced_truck) {
    if (std::find(input.forced_outsourced.begin(), input.forced_outsourced.end(),
                  c) != input.forced_outsourced.end()) {
      hints.push_back("customer " + std::to_string(c) +
                      " is both forced onto truck " + std::to_string(t) +
                      " and outsourced");
    }
  }
  if (hints.empty()) {
    hints.push_back(
        "no plan satisfies the capacity, dependency and origin constraints");
  }
  std::string message;
  for (const auto& h : hints) {
    if (!message.empty()) message += "; ";
    message += h;
  }
  return message;
}

}  // namespace

int Plan::TruckIndex(int truck_id) const {
  for (size_t t = 0; t < truck_ids.size(); ++t) {
    if (truck_ids[t] == truck_id) return static_cast<int>(t);
  }
  return -1;
}

double Plan::ExpectedDistance(const Instance& instance) const {
  double total = 0.0;
  for (size_t w = 0; w < routes.size(); ++w) {
    for (const auto& stops : routes[w]) {
      total += probabilities[w] * WalkDistance(instance, stops);
    }
  }
  return total;
}

double Plan::ScenarioCost(const Instance& instance, int w) const {
  double total = instance.cost.outsource_penalty *
                 static_cast<double>(outsourced.size());
  for (const auto& [truck_id, used] : truck_used) {
    if (used) total += instance.FindTruck(truck_id)->initial_cost;
  }
  for (const auto& stops : routes[w]) {
    total += instance.cost.RoutingCost(WalkDistance(instance, stops));
  }
  return total;
}

Plan PlanFromAssignment(const RouteModel& model, const std::vector<double>& x) {
  RouteSolution decoded = DecodeRouteSolution(model, x);
  Plan plan;
  for (const ModelScenario& s : model.input.scenarios) {
    plan.scenario_ids.push_back(s.id);
    plan.probabilities.push_back(s.probability);
  }
  for (const ModelTruck& t : model.input.trucks) {
    plan.truck_ids.push_back(t.truck_id);
  }
  plan.truck_used = std::move(decoded.choice.truck_used);
  plan.assignment = std::move(decoded.assignment);
  plan.outsourced = std::move(decoded.choice.outsourced);
  plan.routes = std::move(decoded.choice.routes);
  plan.loads = std::move(decoded.loads);
  plan.orders = std::move(decoded.orders);
  plan.objective = model.problem.Evaluate(x);
  return plan;
}

Plan SolveRouteModel(const Instance& instance, const RouteModelInput& input,
                     const milp::MilpSettings& settings,
                     const std::optional<RouteChoice>& incumbent) {
  // Merge scenarios whose size vectors coincide.
  RouteModelInput merged = input;
  merged.scenarios.clear();
  merged.sizes.clear();
  std::vector<int> group(input.scenarios.size());
  std::vector<int> first_member;
  for (size_t w = 0; w < input.scenarios.size(); ++w) {
    int found = -1;
    for (size_t g = 0; g < merged.sizes.size(); ++g) {
      if (merged.sizes[g] == input.sizes[w]) {
        found = static_cast<int>(g);
        break;
      }
    }
    if (found < 0) {
      found = static_cast<int>(merged.sizes.size());
      merged.scenarios.push_back({input.scenarios[w].id, 0.0});
      merged.sizes.push_back(input.sizes[w]);
      first_member.push_back(static_cast<int>(w));
    }
    merged.scenarios[found].probability += input.scenarios[w].probability;
    group[w] = found;
  }

  RouteModel model = BuildRouteModel(instance, merged);
  milp::MilpSettings local = settings;
  // Start from the cheaper of the caller's incumbent and the greedy plan.
  std::vector<RouteChoice> candidates;
  if (incumbent.has_value() &&
      incumbent->routes.size() == input.scenarios.size()) {
    RouteChoice choice = *incumbent;
    choice.routes.clear();
    for (int w : first_member) choice.routes.push_back(incumbent->routes[w]);
    candidates.push_back(std::move(choice));
  }
  if (auto greedy = GreedyChoice(instance, merged)) {
    candidates.push_back(std::move(*greedy));
  }
  if (!local.initial_solution.has_value()) {
    double best = milp::kInfinity;
    for (const RouteChoice& choice : candidates) {
      std::vector<double> x;
      try {
        x = EncodeRoutes(model, choice);
      } catch (const std::exception&) {
        continue;
      }
      if (model.problem.MaxViolation(x) > local.feasibility_tolerance ||
          model.problem.MaxIntegralityViolation(x) >
              local.integrality_tolerance) {
        continue;
      }
      const double value = model.problem.Evaluate(x);
      if (value < best) {
        best = value;
        local.initial_solution = std::move(x);
      }
    }
  }
  const milp::MilpSolution solution = milp::SolveMilp(model.problem, local);
  if (!solution.has_solution()) {
    if (solution.status == milp::SolveStatus::kTimeLimitNoSolution) {
      throw ModelInfeasibleError(
          "time limit reached before a feasible plan was found");
    }
    throw ModelInfeasibleError("model infeasible: " + InfeasibilityHint(input));
  }

  Plan compact = PlanFromAssignment(model, solution.assignment);
  Plan plan = compact;
  plan.scenario_ids.clear();
  plan.probabilities.clear();
  plan.routes.clear();
  plan.loads.clear();
  plan.orders.clear();
  for (size_t w = 0; w < input.scenarios.size(); ++w) {
    plan.scenario_ids.push_back(input.scenarios[w].id);
    plan.probabilities.push_back(input.scenarios[w].probability);
    plan.routes.push_back(compact.routes[group[w]]);
    plan.loads.push_back(compact.loads[group[w]]);
    plan.orders.push_back(compact.orders[group[w]]);
  }
  plan.objective = solution.objective_value;
  plan.status = solution.status;
  plan.gap = solution.gap;
  plan.node_count = solution.node_count;
  plan.wall_time = solution.wall_time;
  return plan;
}

std::vector<std::string> CheckPlan(const Instance& instance,
                                   const RouteModelInput& input,
                                   const Plan& plan) {
  std::vector<std::string> issues;
  auto add = [&](std::string m) { issues.push_back(std::move(m)); };
  std::map<int, int> index;
  for (size_t c = 0; c < input.customers.size(); ++c) {
    index[input.customers[c]] = static_cast<int>(c);
  }
  const std::set<int> outsourced(plan.outsourced.begin(), plan.outsourced.end());
  for (int c : input.customers) {
    const bool served = plan.assignment.count(c) > 0;
    if (served == (outsourced.count(c) > 0)) {
      add("customer " + std::to_string(c) +
          " must be either served or outsourced");
    }
  }
  for (const auto& [c, t] : plan.assignment) {
    if (index.count(c) == 0) add("assignment of unknown customer " + std::to_string(c));
  }
  for (int c : plan.outsourced) {
    if (index.count(c) == 0) add("outsourcing of unknown customer " + std::to_string(c));
  }
  for (int c : input.forced_outsourced) {
    if (outsourced.count(c) == 0) {
      add("customer " + std::to_string(c) + " must stay outsourced");
    }
  }
  for (const auto& [c, t] : input.forced_truck) {
    auto it = plan.assignment.find(c);
    if (it == plan.assignment.end() || it->second != t) {
      add("customer " + std::to_string(c) + " must be served by truck " +
          std::to_string(t));
    }
  }
  for (const auto& [c, t] : input.forbidden_truck) {
    auto it = plan.assignment.find(c);
    if (it != plan.assignment.end() && it->second == t) {
      add("customer " + std::to_string(c) + " may not ride truck " +
          std::to_string(t));
    }
  }
  if (plan.routes.size() != input.scenarios.size()) {
    add("plan lists " + std::to_string(plan.routes.size()) +
        " scenarios, model has " + std::to_string(input.scenarios.size()));
    return issues;
  }
  const int n = static_cast<int>(input.customers.size());

  for (size_t w = 0; w < plan.routes.size(); ++w) {
    for (size_t t = 0; t < input.trucks.size(); ++t) {
      const ModelTruck& truck = input.trucks[t];
      const std::string where = "scenario " + input.scenarios[w].id +
                                " truck " + std::to_string(truck.truck_id) + ": ";
      std::set<int> assigned;
      for (const auto& [c, tid] : plan.assignment) {
        if (tid == truck.truck_id) assigned.insert(c);
      }
      if (!assigned.empty()) {
        auto used = plan.truck_used.find(truck.truck_id);
        if (used == plan.truck_used.end() || !used->second) {
          add(where + "serves customers but is not marked used");
        }
      }
      const auto& stops = plan.routes[w][t];
      if (stops.empty()) {
        if (!assigned.empty() || truck.origin != kDepot) {
          add(where + "has no route");
        }
        continue;
      }
      if (stops.front() != truck.origin) add(where + "route does not start at the origin");
      if (stops.back() != kDepot) add(where + "route does not end at the depot");
      std::set<int> seen;
      for (size_t k = 0; k < stops.size(); ++k) {
        const int s = stops[k];
        if (!instance.distances.Knows(s)) {
          add(where + "unknown location " + std::to_string(s));
        }
        if (s == kDepot) {
          if (k != 0 && k + 1 != stops.size()) add(where + "route passes the depot");
          continue;
        }
        if (!seen.insert(s).second) {
          add(where + "customer " + std::to_string(s) + " visited twice");
        }
      }
      if (seen != assigned) add(where + "route does not cover exactly its customers");

      double load = truck.origin_load;
      if (truck.origin == kDepot) {
        load = 0.0;
        for (int c : seen) {
          if (index.count(c) == 0) continue;
          const double a = input.sizes[w][index.at(c)];
          if (a < 0.0) load -= a;
        }
      }
      if (load < -kLoadTol || load > truck.capacity + kLoadTol) {
        add(where + "start load " + Num(load) + " outside [0, " +
            Num(truck.capacity) + "]");
      }
      double last_order = -1.0;
      const auto* orders =
          w < plan.orders.size() && t < plan.orders[w].size() ? &plan.orders[w][t]
                                                              : nullptr;
      const auto* loads =
          w < plan.loads.size() && t < plan.loads[w].size() ? &plan.loads[w][t]
                                                            : nullptr;
      for (size_t k = 0; k < stops.size(); ++k) {
        const int s = stops[k];
        if (s == kDepot || index.count(s) == 0) continue;
        if (k > 0) load += input.sizes[w][index.at(s)];
        if (load < -kLoadTol || load > truck.capacity + kLoadTol) {
          add(where + "load " + Num(load) + " outside [0, " +
              Num(truck.capacity) + "] after customer " + std::to_string(s));
        }
        if (loads != nullptr && loads->count(s) > 0 &&
            std::fabs(loads->at(s) - load) > kLoadTol) {
          add(where + "recorded load of customer " + std::to_string(s) +
              " differs from the running load");
        }
        if (orders != nullptr && orders->count(s) > 0) {
          const double order = orders->at(s);
          if (order < 1.0 - kLoadTol || order > n + kLoadTol ||
              order <= last_order) {
            add(where + "visit order is not increasing at customer " +
                std::to_string(s));
          }
          last_order = order;
        }
      }
    }
  }

  for (const auto& [a, b] : input.dependencies) {
    const std::string pair =
        "dependency (" + std::to_string(a) + "," + std::to_string(b) + ")";
    const bool oa = outsourced.count(a) > 0;
    const bool ob = outsourced.count(b) > 0;
    if (oa != ob) {
      add(pair + ": only one endpoint is outsourced");
      continue;
    }
    if (oa) continue;
    auto ta = plan.assignment.find(a);
    auto tb = plan.assignment.find(b);
    if (ta == plan.assignment.end() || tb == plan.assignment.end()) continue;
    if (ta->second != tb->second) {
      add(pair + ": endpoints on different trucks");
      continue;
    }
    const int t = plan.TruckIndex(ta->second);
    for (size_t w = 0; w < plan.routes.size(); ++w) {
      const auto& stops = plan.routes[w][t];
      auto pa = std::find(stops.begin(), stops.end(), a);
      auto pb = std::find(stops.begin(), stops.end(), b);
      if (pa == stops.end() || pb == stops.end() || pa > pb) {
        add(pair + ": order violated in scenario " + input.scenarios[w].id);
      }
    }
  }
  return issues;
}

}  // namespace pdpsd
