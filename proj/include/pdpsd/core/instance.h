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

// Domain model of the package pickup-and-delivery planning problem: customers
// with signed package sizes per demand scenario, a depot, a truck fleet,
// visit-order dependencies and the cost parameters.

#ifndef PDPSD_CORE_INSTANCE_H_
#define PDPSD_CORE_INSTANCE_H_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pdpsd {

// Locations are identified by integers: 0 is the depot, customers use their
// (positive) customer id.
using LocationId = int;
inline constexpr LocationId kDepot = 0;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Customer {
  int id = 0;
  // Planar position for coordinate instances; unset for matrix instances,
  // where the customer id indexes the distance matrix.
  std::optional<Point> position;
  int demand_flag = 1;    // k_i: 1 if the customer requires service.
  int request_epoch = 0;  // Re-plan epoch at which the request becomes known.
};

struct Truck {
  int id = 0;
  double capacity = 0.0;
  double initial_cost = 0.0;
};

// Ordered pairs (i, j): customer i must be visited before customer j, and
// both share the same truck or are both outsourced.
struct DependencyRelation {
  std::vector<std::pair<int, int>> pairs;

  bool Contains(int before, int after) const;
};

struct CostModel {
  double fuel_consumption = 0.1;  // litres per distance unit
  double fuel_price = 1.05;       // currency per litre
  double outsource_penalty = 16.0;

  double RoutingCostPerUnit() const { return fuel_consumption * fuel_price; }
  double RoutingCost(double distance) const {
    return RoutingCostPerUnit() * distance;
  }
};

// Distances over the depot and the customers, either Euclidean over
// coordinates or read from an explicit (possibly asymmetric) matrix.
class DistanceProvider {
 public:
  DistanceProvider() = default;

  static DistanceProvider FromCoordinates(Point depot,
                                          std::map<int, Point> customers);
  // Row/column 0 is the depot; row/column i is customer id i.
  static DistanceProvider FromMatrix(std::vector<std::vector<double>> matrix);

  bool is_matrix() const { return is_matrix_; }
  bool Knows(LocationId location) const;
  // Throws InputError for unknown locations.
  double Distance(LocationId from, LocationId to) const;

  const Point& depot() const { return depot_; }
  const std::map<int, Point>& points() const { return points_; }
  const std::vector<std::vector<double>>& matrix() const { return matrix_; }

  // Returns a copy that also knows the given customer positions. Matrix
  // providers are returned unchanged.
  DistanceProvider WithPoints(const std::map<int, Point>& extra) const;

 private:
  bool is_matrix_ = false;
  Point depot_;
  std::map<int, Point> points_;
  std::vector<std::vector<double>> matrix_;
};

// One joint realization of all package sizes. Pickups are positive, deliveries
// negative.
struct Scenario {
  std::string id;
  double probability = 0.0;
  std::map<int, double> sizes;  // customer id -> signed weight
};

struct ScenarioSet {
  std::vector<Scenario> scenarios;

  int size() const { return static_cast<int>(scenarios.size()); }
  int IndexOf(const std::string& id) const;  // -1 when absent
};

struct Instance {
  std::string name;
  std::vector<Customer> customers;  // sorted by id
  std::vector<Truck> trucks;
  DependencyRelation dependencies;
  CostModel cost;
  DistanceProvider distances;
  ScenarioSet scenarios;

  const Customer* FindCustomer(int id) const;
  const Truck* FindTruck(int id) const;
  // Size of customer `id` in scenario index `scenario`; InputError if missing.
  double Size(int id, int scenario) const;
  std::vector<int> DemandingCustomerIds() const;
};

}  // namespace pdpsd

#endif  // PDPSD_CORE_INSTANCE_H_
