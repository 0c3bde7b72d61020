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

// Exhaustive single-truck, single-scenario planner used as an oracle, plus a
// generator of small random instances. Independent of the MILP code.

#ifndef PDPSD_TESTS_ROUTE_ORACLE_H_
#define PDPSD_TESTS_ROUTE_ORACLE_H_

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "pdpsd/core/instance.h"

namespace pdpsd::testing_util {

inline double Euclid(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

struct BruteForceResult {
  double cost = std::numeric_limits<double>::infinity();
  std::vector<int> route;  // customers in visit order
};

// Minimum over every served subset and visit order of
//   initial cost (if anything is served) + penalty * |outsourced|
//   + fuel * price * tour length,
// subject to: dependent pairs share their fate and keep their order; the
// truck leaves the depot with every served delivery on board; the load stays
// within [0, capacity] after every stop.
inline BruteForceResult BruteForcePlan(const Instance& instance) {
  const Truck& truck = instance.trucks.at(0);
  std::vector<int> ids;
  for (const Customer& c : instance.customers) {
    if (c.demand_flag == 1 && c.request_epoch == 0) ids.push_back(c.id);
  }
  const int n = static_cast<int>(ids.size());
  auto pos = [&](int id) -> Point {
    return id == 0 ? instance.distances.depot()
                   : instance.distances.points().at(id);
  };
  auto size = [&](int id) {
    return instance.scenarios.scenarios.at(0).sizes.at(id);
  };
  const double per_unit =
      instance.cost.fuel_consumption * instance.cost.fuel_price;

  BruteForceResult best;
  for (int mask = 0; mask < (1 << n); ++mask) {
    auto served = [&](int id) {
      for (int k = 0; k < n; ++k) {
        if (ids[k] == id) return ((mask >> k) & 1) != 0;
      }
      return false;
    };
    bool coupled = true;
    for (const auto& [a, b] : instance.dependencies.pairs) {
      if (served(a) != served(b)) coupled = false;
    }
    if (!coupled) continue;
    std::vector<int> route;
    for (int k = 0; k < n; ++k) {
      if ((mask >> k) & 1) route.push_back(ids[k]);
    }
    const double fixed =
        (route.empty() ? 0.0 : truck.initial_cost) +
        instance.cost.outsource_penalty * (n - static_cast<int>(route.size()));
    std::sort(route.begin(), route.end());
    do {
      bool ok = true;
      for (const auto& [a, b] : instance.dependencies.pairs) {
        if (!served(a)) continue;
        const auto ia = std::find(route.begin(), route.end(), a);
        const auto ib = std::find(route.begin(), route.end(), b);
        if (ia > ib) ok = false;
      }
      double load = 0.0;
      for (int c : route) load += std::max(0.0, -size(c));
      if (load > truck.capacity + 1e-9) ok = false;
      for (int c : route) {
        load += size(c);
        if (load < -1e-9 || load > truck.capacity + 1e-9) ok = false;
      }
      if (!ok) continue;
      double length = 0.0;
      int at = 0;
      for (int c : route) {
        length += Euclid(pos(at), pos(c));
        at = c;
      }
      length += Euclid(pos(at), pos(0));
      const double cost = fixed + per_unit * length;
      if (cost < best.cost) {
        best.cost = cost;
        best.route = route;
      }
    } while (std::next_permutation(route.begin(), route.end()));
  }
  return best;
}

// 1 truck, 1 scenario, integer coordinates, mixed pickups and deliveries,
// an acyclic dependency set.
inline Instance RandomSmallInstance(std::mt19937& rng, int customers) {
  std::uniform_int_distribution<int> coord(0, 40);
  std::uniform_int_distribution<int> weight(1, 12);
  Instance instance;
  instance.name = "random";
  std::map<int, Point> points;
  Scenario scenario{"w1", 1.0, {}};
  for (int id = 1; id <= customers; ++id) {
    instance.customers.push_back(Customer{id, std::nullopt, 1, 0});
    const Point p{static_cast<double>(coord(rng)),
                  static_cast<double>(coord(rng))};
    instance.customers.back().position = p;
    points[id] = p;
    const double w = weight(rng);
    scenario.sizes[id] = rng() % 3 == 0 ? -w : w;
  }
  instance.distances = DistanceProvider::FromCoordinates(
      Point{static_cast<double>(coord(rng)), static_cast<double>(coord(rng))},
      points);
  instance.scenarios.scenarios.push_back(scenario);
  const double capacity = 10.0 + static_cast<double>(rng() % 16);
  const double initial = static_cast<double>(rng() % 4);
  instance.trucks.push_back(Truck{1, capacity, initial});
  instance.cost.outsource_penalty = 2.0 + static_cast<double>(rng() % 10);
  for (int a = 1; a <= customers; ++a) {
    for (int b = a + 1; b <= customers; ++b) {
      if (rng() % 6 == 0) instance.dependencies.pairs.emplace_back(a, b);
    }
  }
  return instance;
}

}  // namespace pdpsd::testing_util

#endif  // PDPSD_TESTS_ROUTE_ORACLE_H_
