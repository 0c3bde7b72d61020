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

#include "pdpsd/core/cost.h"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>

#include "pdpsd/core/errors.h"

namespace pdpsd {
namespace {

std::string Num(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return buf;
}

bool HasCycle(const std::vector<std::pair<int, int>>& pairs) {
  std::map<int, std::vector<int>> next;
  for (const auto& [a, b] : pairs) next[a].push_back(b);
  std::map<int, int> color;  // 0 white, 1 grey, 2 black
  std::function<bool(int)> visit = [&](int node) {
    color[node] = 1;
    for (int succ : next[node]) {
      if (color[succ] == 1) return true;
      if (color[succ] == 0 && visit(succ)) return true;
    }
    color[node] = 2;
    return false;
  };
  for (const auto& [node, unused] : next) {
    if (color[node] == 0 && visit(node)) return true;
  }
  return false;
}

}  // namespace

double ArcCost(const Instance& instance, LocationId from, LocationId to) {
  return instance.cost.RoutingCost(instance.distances.Distance(from, to));
}

double PlanCost(const Instance& instance, std::span<const int> used_trucks,
                std::span<const Arc> arcs, std::span<const int> outsourced) {
  double total = 0.0;
  for (int truck_id : used_trucks) {
    const Truck* truck = instance.FindTruck(truck_id);
    if (truck == nullptr) {
      throw InputError("unknown truck " + std::to_string(truck_id));
    }
    total += truck->initial_cost;
  }
  total += instance.cost.outsource_penalty *
           static_cast<double>(outsourced.size());
  for (const Arc& arc : arcs) total += ArcCost(instance, arc.from, arc.to);
  return total;
}

double WalkDistance(const Instance& instance,
                    std::span<const LocationId> stops) {
  double total = 0.0;
  for (size_t i = 1; i < stops.size(); ++i) {
    total += instance.distances.Distance(stops[i - 1], stops[i]);
  }
  return total;
}

std::vector<std::string> ValidateInstance(const Instance& instance) {
  std::vector<std::string> violations;
  auto add = [&](std::string message) {
    violations.push_back(std::move(message));
  };

  std::set<int> ids;
  for (const Customer& c : instance.customers) {
    const std::string who = "customers[" + std::to_string(c.id) + "]";
    if (c.id <= 0) add(who + ".id must be positive");
    if (!ids.insert(c.id).second) add(who + ".id is not unique");
    if (c.demand_flag != 0 && c.demand_flag != 1) {
      add(who + ".k must be 0 or 1");
    }
    if (c.request_epoch < 0) add(who + ".requestEpoch must be >= 0");
    if (!instance.distances.Knows(c.id)) {
      add(who + " has no location in the distance provider");
    }
  }

  if (instance.trucks.empty()) add("trucks: at least one truck is required");
  std::set<int> truck_ids;
  for (const Truck& t : instance.trucks) {
    const std::string who = "trucks[" + std::to_string(t.id) + "]";
    if (!truck_ids.insert(t.id).second) add(who + ".id is not unique");
    if (!(t.capacity > 0.0)) add(who + ".capacity must be > 0");
    if (!(t.initial_cost >= 0.0)) add(who + ".initialCost must be >= 0");
  }

  for (const auto& [a, b] : instance.dependencies.pairs) {
    const std::string who =
        "dependency (" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (a == b) add(who + " is a self pair");
    const Customer* ca = instance.FindCustomer(a);
    const Customer* cb = instance.FindCustomer(b);
    if (ca == nullptr || cb == nullptr) {
      add(who + " references an unknown customer");
      continue;
    }
    if (ca->demand_flag != 1 || cb->demand_flag != 1) {
      add(who + " endpoints must both have k=1");
    }
  }
  if (HasCycle(instance.dependencies.pairs)) add("dependency graph cyclic");

  const CostModel& cost = instance.cost;
  if (!(cost.fuel_consumption >= 0.0)) add("cost.fuelConsumption must be >= 0");
  if (!(cost.fuel_price >= 0.0)) add("cost.fuelPrice must be >= 0");
  if (!(cost.outsource_penalty >= 0.0)) {
    add("cost.outsourcePenalty must be >= 0");
  }

  const DistanceProvider& dist = instance.distances;
  if (dist.is_matrix()) {
    const auto& m = dist.matrix();
    int max_id = 0;
    for (const Customer& c : instance.customers) max_id = std::max(max_id, c.id);
    if (static_cast<int>(m.size()) != max_id + 1) {
      add("distanceMatrix dimension " + std::to_string(m.size()) +
          " does not match the location count " + std::to_string(max_id + 1));
    }
    for (size_t r = 0; r < m.size(); ++r) {
      if (m[r].size() != m.size()) {
        add("distanceMatrix row " + std::to_string(r) + " is not square");
        continue;
      }
      for (size_t c = 0; c < m[r].size(); ++c) {
        if (!(m[r][c] >= 0.0)) {
          add("distanceMatrix[" + std::to_string(r) + "][" +
              std::to_string(c) + "] is negative");
        }
      }
      if (m[r][r] != 0.0) {
        add("distanceMatrix[" + std::to_string(r) + "][" + std::to_string(r) +
            "] must be 0");
      }
    }
  }

  const auto& scenarios = instance.scenarios.scenarios;
  if (scenarios.empty()) add("scenarios: at least one scenario is required");
  double total = 0.0;
  std::set<std::string> scenario_ids;
  for (const Scenario& s : scenarios) {
    if (!scenario_ids.insert(s.id).second) {
      add("scenario " + s.id + " is not unique");
    }
    if (!(s.probability >= 0.0 && s.probability <= 1.0)) {
      add("scenario " + s.id + ": probability " + Num(s.probability) +
          " not in [0,1]");
    }
    total += s.probability;
    for (const Customer& c : instance.customers) {
      if (c.demand_flag == 1 && s.sizes.count(c.id) == 0) {
        add("scenario " + s.id + " has no size for customer " +
            std::to_string(c.id));
      }
    }
  }
  if (!scenarios.empty() && std::fabs(total - 1.0) > 1e-9) {
    add("probabilities sum to " + Num(total));
  }
  return violations;
}

double RoundMilli(double value) {
  return static_cast<double>(ToMilli(value)) / 1000.0;
}

long long ToMilli(double value) {
  // The 1e-7 nudge absorbs representation error at exact half-way points.
  const double scaled = std::fabs(value) * 1000.0;
  const long long magnitude =
      static_cast<long long>(std::floor(scaled + 0.5 + 1e-7));
  return value < 0 ? -magnitude : magnitude;
}

}  // namespace pdpsd
