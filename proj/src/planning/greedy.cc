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

#include "pdpsd/planning/greedy.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "pdpsd/core/cost.h"

namespace pdpsd {
namespace {

constexpr double kTol = 1e-9;

struct Group {
  std::vector<int> members;  // predecessors first
  int forced_truck = -1;     // truck index
  bool forced_out = false;
};

class Greedy {
 public:
  Greedy(const Instance& instance, const RouteModelInput& input)
      : instance_(instance), in_(input) {
    for (std::size_t c = 0; c < in_.customers.size(); ++c) {
      index_[in_.customers[c]] = static_cast<int>(c);
    }
    routes_.resize(in_.trucks.size());
  }

  std::optional<RouteChoice> Run() {
    if (!BuildGroups()) return std::nullopt;
    std::vector<bool> done(groups_.size(), false);
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      if (groups_[g].forced_out) {
        done[g] = true;
      } else if (groups_[g].forced_truck >= 0) {
        const int t = groups_[g].forced_truck;
        auto route = Insert(groups_[g], t);
        if (!route) return std::nullopt;
        routes_[t] = *route;
        done[g] = true;
      }
    }
    while (true) {
      double best_gain = -kTol;
      int best_group = -1;
      int best_truck = -1;
      std::vector<int> best_route;
      for (std::size_t g = 0; g < groups_.size(); ++g) {
        if (done[g]) continue;
        for (std::size_t t = 0; t < in_.trucks.size(); ++t) {
          if (in_.trucks[t].fixed_used == false) continue;
          auto route = Insert(groups_[g], static_cast<int>(t));
          if (!route) continue;
          double delta = RouteCost(t, *route) - RouteCost(t, routes_[t]) -
                         in_.outsource_penalty *
                             static_cast<double>(groups_[g].members.size());
          if (!Used(t)) delta += in_.trucks[t].initial_cost;
          if (delta < best_gain) {
            best_gain = delta;
            best_group = static_cast<int>(g);
            best_truck = static_cast<int>(t);
            best_route = *route;
          }
        }
      }
      if (best_group < 0) break;
      routes_[best_truck] = best_route;
      done[best_group] = true;
    }
    return Choice();
  }

 private:
  int Origin(std::size_t t) const { return in_.trucks[t].origin; }

  bool Used(std::size_t t) const {
    return Origin(t) != kDepot || !routes_[t].empty() ||
           in_.trucks[t].fixed_used == true;
  }

  double Size(int w, int customer) const {
    return in_.sizes[w][index_.at(customer)];
  }

  double RouteCost(std::size_t t, const std::vector<int>& route) const {
    if (Origin(t) == kDepot && route.empty()) return 0.0;
    LocationId at = Origin(t);
    double cost = 0.0;
    for (int c : route) {
      cost += ArcCost(instance_, at, c);
      at = c;
    }
    return cost + ArcCost(instance_, at, kDepot);
  }

  bool LoadsFit(std::size_t t, const std::vector<int>& route) const {
    const double cap = in_.trucks[t].capacity;
    for (std::size_t w = 0; w < in_.sizes.size(); ++w) {
      double load = in_.trucks[t].origin_load;
      if (Origin(t) == kDepot) {
        load = 0.0;
        for (int c : route) load += std::max(0.0, -Size(w, c));
      }
      if (load > cap + kTol) return false;
      for (int c : route) {
        load += Size(w, c);
        if (load < -kTol || load > cap + kTol) return false;
      }
    }
    return true;
  }

  bool OrderHolds(std::size_t t, const std::vector<int>& route) const {
    for (const auto& [a, b] : in_.dependencies) {
      const auto ia = std::find(route.begin(), route.end(), a);
      const auto ib = std::find(route.begin(), route.end(), b);
      if (b == Origin(t) && ia != route.end()) return false;
      if (ia != route.end() && ib != route.end() && ia > ib) return false;
    }
    return true;
  }

  // Cheapest insertion of the group's members, in order, behind their
  // predecessors. Returns the new route, or nullopt when it does not fit.
  std::optional<std::vector<int>> Insert(const Group& group, int t) const {
    std::vector<int> route = routes_[t];
    for (int m : group.members) {
      if (in_.forbidden_truck.count({m, in_.trucks[t].truck_id}) > 0) {
        return std::nullopt;
      }
      if (m == Origin(t)) continue;
      std::size_t lowest = 0;
      for (const auto& [a, b] : in_.dependencies) {
        if (b != m) continue;
        const auto it = std::find(route.begin(), route.end(), a);
        if (it != route.end()) {
          lowest = std::max(lowest, static_cast<std::size_t>(it - route.begin()) + 1);
        }
      }
      double best = std::numeric_limits<double>::infinity();
      std::vector<int> chosen;
      for (std::size_t p = lowest; p <= route.size(); ++p) {
        std::vector<int> trial = route;
        trial.insert(trial.begin() + static_cast<std::ptrdiff_t>(p), m);
        if (!LoadsFit(t, trial)) continue;
        const double cost = RouteCost(t, trial);
        if (cost < best - kTol) {
          best = cost;
          chosen = std::move(trial);
        }
      }
      if (chosen.empty()) return std::nullopt;
      route = std::move(chosen);
    }
    if (!OrderHolds(t, route) || !LoadsFit(t, route)) return std::nullopt;
    return route;
  }

  bool BuildGroups() {
    const int n = static_cast<int>(in_.customers.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& [a, b] : in_.dependencies) {
      parent[find(index_.at(a))] = find(index_.at(b));
    }
    // Longest chain of predecessors puts members in a valid order.
    std::map<int, int> depth;
    for (int pass = 0; pass < n; ++pass) {
      for (const auto& [a, b] : in_.dependencies) {
        depth[b] = std::max(depth[b], depth[a] + 1);
      }
    }
    std::map<int, int> group_of_root;
    std::vector<int> order = in_.customers;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return depth[x] < depth[y];
    });
    for (int c : order) {
      const int root = find(index_.at(c));
      auto [it, fresh] =
          group_of_root.emplace(root, static_cast<int>(groups_.size()));
      if (fresh) groups_.push_back({});
      groups_[it->second].members.push_back(c);
    }
    std::set<int> forced_out(in_.forced_outsourced.begin(),
                             in_.forced_outsourced.end());
    for (Group& g : groups_) {
      for (int c : g.members) {
        int truck = -1;
        auto f = in_.forced_truck.find(c);
        for (std::size_t t = 0; t < in_.trucks.size(); ++t) {
          if ((f != in_.forced_truck.end() && in_.trucks[t].truck_id == f->second) ||
              in_.trucks[t].origin == c) {
            if (truck >= 0 && truck != static_cast<int>(t)) return false;
            truck = static_cast<int>(t);
          }
        }
        if (truck >= 0) {
          if (g.forced_truck >= 0 && g.forced_truck != truck) return false;
          g.forced_truck = truck;
        }
        if (forced_out.count(c) > 0) g.forced_out = true;
      }
      if (g.forced_out && g.forced_truck >= 0) return false;
    }
    return true;
  }

  RouteChoice Choice() const {
    RouteChoice choice;
    std::set<int> routed;
    std::vector<std::vector<LocationId>> per_truck;
    for (std::size_t t = 0; t < in_.trucks.size(); ++t) {
      choice.truck_used[in_.trucks[t].truck_id] = Used(t);
      std::vector<LocationId> stops;
      if (Origin(t) != kDepot || !routes_[t].empty()) {
        stops.push_back(Origin(t));
        if (Origin(t) != kDepot) routed.insert(Origin(t));
        for (int c : routes_[t]) {
          stops.push_back(c);
          routed.insert(c);
        }
        stops.push_back(kDepot);
      }
      per_truck.push_back(std::move(stops));
    }
    choice.routes.assign(in_.scenarios.size(), per_truck);
    for (int c : in_.customers) {
      if (routed.count(c) == 0) choice.outsourced.push_back(c);
    }
    std::sort(choice.outsourced.begin(), choice.outsourced.end());
    return choice;
  }

  const Instance& instance_;
  const RouteModelInput& in_;
  std::map<int, int> index_;
  std::vector<Group> groups_;
  std::vector<std::vector<int>> routes_;
};

}  // namespace

std::optional<RouteChoice> GreedyChoice(const Instance& instance,
                                        const RouteModelInput& input) {
  return Greedy(instance, input).Run();
}

}  // namespace pdpsd
