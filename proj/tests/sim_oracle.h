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

// Random small re-route simulations and an invariant checker that only uses
// coordinates and sizes, not the library's own bookkeeping.

#ifndef PDPSD_TESTS_SIM_ORACLE_H_
#define PDPSD_TESTS_SIM_ORACLE_H_

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pdpsd/core/instance.h"
#include "pdpsd/planning/reroute.h"

namespace pdpsd::testing_util {

struct SimulationCase {
  Instance base;  // epoch-0 customers only
  std::vector<RequestEvent> events;
  std::string realized;
  int k = 3;
};

// 3-4 epoch-0 customers, one or two events of 1-2 customers, one or two
// trucks, one or two scenarios. Dependencies only join customers known at the
// same time.
inline SimulationCase RandomSimulationCase(std::mt19937& rng) {
  std::uniform_int_distribution<int> coord(0, 30);
  std::uniform_int_distribution<int> weight(1, 8);
  SimulationCase out;
  Instance& base = out.base;
  base.name = "random-sim";
  const int scenarios = 1 + static_cast<int>(rng() % 2);
  for (int w = 0; w < scenarios; ++w) {
    base.scenarios.scenarios.push_back(
        Scenario{"w" + std::to_string(w + 1), 1.0 / scenarios, {}});
  }
  auto point = [&] {
    return Point{static_cast<double>(coord(rng)), static_cast<double>(coord(rng))};
  };
  // Sign is shared across scenarios, magnitude varies.
  auto sizes = [&]() {
    const double sign = rng() % 3 == 0 ? -1.0 : 1.0;
    std::map<std::string, double> s;
    for (const Scenario& sc : base.scenarios.scenarios) s[sc.id] = sign * weight(rng);
    return s;
  };
  auto dependencies = [&](const std::vector<int>& ids) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        if (rng() % 5 == 0) pairs.emplace_back(ids[a], ids[b]);
      }
    }
    return pairs;
  };

  std::map<int, Point> points;
  const int initial = 3 + static_cast<int>(rng() % 2);
  std::vector<int> ids;
  int next_id = 1;
  for (; next_id <= initial; ++next_id) {
    const Point p = point();
    base.customers.push_back(Customer{next_id, p, 1, 0});
    points[next_id] = p;
    for (const auto& [sid, v] : sizes()) {
      base.scenarios.scenarios[base.scenarios.IndexOf(sid)].sizes[next_id] = v;
    }
    ids.push_back(next_id);
  }
  base.dependencies.pairs = dependencies(ids);
  base.distances = DistanceProvider::FromCoordinates(point(), points);
  const int trucks = 1 + static_cast<int>(rng() % 2);
  for (int t = 1; t <= trucks; ++t) {
    base.trucks.push_back(Truck{t, 12.0 + static_cast<double>(rng() % 10),
                                static_cast<double>(rng() % 3)});
  }
  base.cost.outsource_penalty = 3.0 + static_cast<double>(rng() % 8);

  const int events = 1 + static_cast<int>(rng() % 2);
  for (int e = 1; e <= events; ++e) {
    RequestEvent event;
    event.epoch = e;
    const int count = 1 + static_cast<int>(rng() % 2);
    std::vector<int> fresh;
    for (int i = 0; i < count; ++i, ++next_id) {
      event.customers.push_back(Customer{next_id, point(), 1, e});
      event.sizes[next_id] = sizes();
      fresh.push_back(next_id);
    }
    event.dependencies = dependencies(fresh);
    out.events.push_back(event);
  }
  out.realized = base.scenarios.scenarios[rng() % scenarios].id;
  out.k = 1 + static_cast<int>(rng() % 3);
  return out;
}

// Invariants of a finished run, checked from coordinates and realized sizes.
// `full` includes the events.
inline std::vector<std::string> OracleCheck(const Instance& full,
                                            const SimulationResult& result) {
  std::vector<std::string> issues;
  const int w = full.scenarios.IndexOf(result.realized_scenario);
  auto pos = [&](int id) {
    return id == 0 ? full.distances.depot() : full.distances.points().at(id);
  };
  std::map<int, int> visits;
  std::map<int, std::pair<int, int>> where;  // customer -> (truck, position)
  double distance = 0.0;
  double initial = 0.0;
  for (std::size_t t = 0; t < result.actual_routes.size(); ++t) {
    const auto& route = result.actual_routes[t];
    if (route.empty()) continue;
    if (route.front() != 0 || route.back() != 0) {
      issues.push_back("truck route not anchored at the depot");
      continue;
    }
    const Truck* truck = full.FindTruck(result.truck_ids[t]);
    if (route.size() > 1) initial += truck->initial_cost;
    std::size_t trip = 0;
    double load = 0.0;
    for (std::size_t i = 0; i + 1 < route.size(); ++i) {
      distance += std::hypot(pos(route[i]).x - pos(route[i + 1]).x,
                             pos(route[i]).y - pos(route[i + 1]).y);
    }
    for (std::size_t i = 0; i < route.size(); ++i) {
      const int c = route[i];
      if (c == 0) {
        if (i + 1 == route.size()) break;
        if (trip >= result.trip_loads[t].size()) {
          issues.push_back("missing trip load");
          break;
        }
        load = result.trip_loads[t][trip++];
        // Deliveries of the trip leave the depot on board, except those fed
        // by a dependency predecessor.
        double needed = 0.0;
        for (std::size_t j = i + 1; j < route.size() && route[j] != 0; ++j) {
          bool fed = false;
          for (const auto& [a, b] : full.dependencies.pairs) fed = fed || b == route[j];
          if (fed) continue;
          needed += std::max(0.0, -full.scenarios.scenarios[w].sizes.at(route[j]));
        }
        if (load + 1e-6 < needed) issues.push_back("trip leaves without its deliveries");
      } else {
        ++visits[c];
        where[c] = {static_cast<int>(t), static_cast<int>(i)};
        load += full.scenarios.scenarios[w].sizes.at(c);
      }
      if (load < -1e-6 || load > truck->capacity + 1e-6) {
        issues.push_back("load " + std::to_string(load) + " out of range at stop " +
                         std::to_string(c));
      }
    }
  }
  std::set<int> outsourced(result.outsourced.begin(), result.outsourced.end());
  for (const Customer& c : full.customers) {
    if (c.demand_flag != 1) continue;
    const int v = visits.count(c.id) ? visits.at(c.id) : 0;
    const int o = static_cast<int>(outsourced.count(c.id));
    if (v + o != 1) {
      issues.push_back("customer " + std::to_string(c.id) + " visited " +
                       std::to_string(v) + "x, outsourced " + std::to_string(o) + "x");
    }
  }
  for (const auto& [a, b] : full.dependencies.pairs) {
    const bool sa = where.count(a) > 0;
    const bool sb = where.count(b) > 0;
    if (sa != sb) {
      issues.push_back("dependency split");
    } else if (sa && (where[a].first != where[b].first ||
                      where[a].second >= where[b].second)) {
      issues.push_back("dependency order");
    }
  }
  for (const EpochRecord& e : result.epochs) {
    if (e.failed) continue;
    for (std::size_t t = 0; t < e.routes.size(); ++t) {
      const auto& r = e.routes[t];
      if (r.empty()) continue;
      if (r.front() != e.origins[t] || r.back() != 0) {
        issues.push_back("plan route not anchored");
      }
      std::set<int> seen;
      for (std::size_t i = 1; i + 1 < r.size(); ++i) {
        if (r[i] == 0 || !seen.insert(r[i]).second) issues.push_back("plan route repeats");
      }
    }
  }
  const double cost = initial + full.cost.RoutingCost(distance) +
                      full.cost.outsource_penalty * static_cast<double>(outsourced.size());
  if (std::abs(distance - result.total_distance) > 1e-6) {
    issues.push_back("distance mismatch");
  }
  if (std::abs(cost - result.total_cost) > 1e-6) issues.push_back("cost mismatch");
  return issues;
}

}  // namespace pdpsd::testing_util

#endif  // PDPSD_TESTS_SIM_ORACLE_H_
