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

// Extensive-form routing MILP shared by the offline planner and the re-route
// planner. The model has n customer slots (slot 0 is the depot), one block of
// first-stage variables (truck usage U, assignment W, outsourcing Y) and one
// block of second-stage variables per scenario (arcs V, visit order S,
// onboard load Q).

#ifndef PDPSD_PLANNING_ROUTE_MODEL_H_
#define PDPSD_PLANNING_ROUTE_MODEL_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pdpsd/core/instance.h"
#include "pdpsd/milp/problem.h"

namespace pdpsd {

// Variable layout [U | W | Y | V(w1)..V(ws) | S(w.) | Q(w.)].
// Customer slots are 1..n; V blocks cover the full (n+1)^2 arc grid.
class RouteLayout {
 public:
  RouteLayout() = default;
  RouteLayout(int customers, int trucks, int scenarios);

  int customers() const { return n_; }
  int trucks() const { return trucks_; }
  int scenarios() const { return scenarios_; }
  int num_vars() const { return q_base_ + scenarios_ * trucks_ * n_; }

  int U(int t) const { return t; }
  int W(int slot, int t) const { return w_base_ + (slot - 1) * trucks_ + t; }
  int Y(int slot) const { return y_base_ + slot - 1; }
  int V(int w, int t, int from, int to) const {
    return v_base_ + ((w * trucks_ + t) * (n_ + 1) + from) * (n_ + 1) + to;
  }
  int S(int w, int t, int slot) const {
    return s_base_ + (w * trucks_ + t) * n_ + slot - 1;
  }
  int Q(int w, int t, int slot) const {
    return q_base_ + (w * trucks_ + t) * n_ + slot - 1;
  }

 private:
  int n_ = 0;
  int trucks_ = 0;
  int scenarios_ = 0;
  int w_base_ = 0;
  int y_base_ = 0;
  int v_base_ = 0;
  int s_base_ = 0;
  int q_base_ = 0;
};

struct ModelTruck {
  int truck_id = 0;
  double capacity = 0.0;
  double initial_cost = 0.0;
  // Where the truck starts: the depot, or the customer it visited last.
  LocationId origin = kDepot;
  // Onboard weight at a customer origin. Depot starts load every delivery
  // package assigned to the truck instead.
  double origin_load = 0.0;
  // Committed usage; free when unset.
  std::optional<bool> fixed_used;
};

struct ModelScenario {
  std::string id;
  double probability = 0.0;
};

// Everything the builder needs, in location ids. Truck origins that are
// customers must appear in `customers`.
struct RouteModelInput {
  std::vector<int> customers;
  std::vector<ModelTruck> trucks;
  std::vector<ModelScenario> scenarios;
  // sizes[w][c]: signed size of customers[c] in scenario w.
  std::vector<std::vector<double>> sizes;
  std::vector<std::pair<int, int>> dependencies;
  // Customer -> truck id that must serve it.
  std::map<int, int> forced_truck;
  // (customer, truck id) pairs that may not be assigned.
  std::set<std::pair<int, int>> forbidden_truck;
  std::vector<int> forced_outsourced;
  double outsource_penalty = 0.0;
  // Added to the objective (committed costs).
  double constant = 0.0;
};

struct RouteModel {
  RouteModelInput input;
  RouteLayout layout;
  milp::MilpProblem problem;
  std::map<int, int> slot_of;  // customer id -> slot

  LocationId LocationOfSlot(int slot) const {
    return slot == 0 ? kDepot : input.customers[slot - 1];
  }
  int SlotOf(LocationId location) const {
    return location == kDepot ? 0 : slot_of.at(location);
  }
};

// Builds the MILP. Throws InputError on inconsistent input (size table shape,
// unknown ids, duplicate origins).
RouteModel BuildRouteModel(const Instance& instance, RouteModelInput input);

// A candidate solution in domain terms.
struct RouteChoice {
  std::map<int, bool> truck_used;  // truck id -> U
  // routes[w][t]: stops of truck t in scenario w, origin first, depot last;
  // empty when a depot-origin truck does not move.
  std::vector<std::vector<std::vector<LocationId>>> routes;
  std::vector<int> outsourced;
};

// Converts routes to a full assignment (W, Y, V, S and Q included).
std::vector<double> EncodeRoutes(const RouteModel& model,
                                 const RouteChoice& choice);

// Follows successor arcs from `origin` until the depot. Throws DecodeError if
// the arcs do not form a single walk, naming the leftover cycle as
// "subtour {3,4}". Returns an empty sequence for an empty arc set.
std::vector<LocationId> DecodeWalk(const std::vector<std::pair<int, int>>& arcs,
                                   LocationId origin);

// Decoded decision variables.
struct RouteSolution {
  RouteChoice choice;
  std::map<int, int> assignment;  // customer -> truck id
  // loads[w][t]: customer -> onboard weight after the visit.
  std::vector<std::vector<std::map<int, double>>> loads;
  // orders[w][t]: customer -> visit position.
  std::vector<std::vector<std::map<int, double>>> orders;
};

// Throws DecodeError when the vector length mismatches or arcs do not form
// walks; the message names the truck and scenario.
RouteSolution DecodeRouteSolution(const RouteModel& model,
                                  const std::vector<double>& assignment);

}  // namespace pdpsd

#endif  // PDPSD_PLANNING_ROUTE_MODEL_H_
