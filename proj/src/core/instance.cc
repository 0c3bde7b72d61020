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

#include "pdpsd/core/instance.h"

#include <algorithm>
#include <cmath>

#include "pdpsd/core/errors.h"

namespace pdpsd {

bool DependencyRelation::Contains(int before, int after) const {
  return std::find(pairs.begin(), pairs.end(), std::pair{before, after}) !=
         pairs.end();
}

DistanceProvider DistanceProvider::FromCoordinates(
    Point depot, std::map<int, Point> customers) {
  DistanceProvider provider;
  provider.is_matrix_ = false;
  provider.depot_ = depot;
  provider.points_ = std::move(customers);
  return provider;
}

DistanceProvider DistanceProvider::FromMatrix(
    std::vector<std::vector<double>> matrix) {
  DistanceProvider provider;
  provider.is_matrix_ = true;
  provider.matrix_ = std::move(matrix);
  return provider;
}

bool DistanceProvider::Knows(LocationId location) const {
  if (location < 0) return false;
  if (is_matrix_) return location < static_cast<int>(matrix_.size());
  return location == kDepot || points_.count(location) > 0;
}

double DistanceProvider::Distance(LocationId from, LocationId to) const {
  if (!Knows(from)) {
    throw InputError("unknown location " + std::to_string(from));
  }
  if (!Knows(to)) throw InputError("unknown location " + std::to_string(to));
  if (is_matrix_) {
    const auto& row = matrix_[from];
    if (to >= static_cast<int>(row.size())) {
      throw InputError("distance matrix row " + std::to_string(from) +
                       " is too short");
    }
    return row[to];
  }
  if (from == to) return 0.0;
  const Point& a = from == kDepot ? depot_ : points_.at(from);
  const Point& b = to == kDepot ? depot_ : points_.at(to);
  return std::hypot(a.x - b.x, a.y - b.y);
}

DistanceProvider DistanceProvider::WithPoints(
    const std::map<int, Point>& extra) const {
  DistanceProvider copy = *this;
  if (!is_matrix_) {
    for (const auto& [id, point] : extra) copy.points_[id] = point;
  }
  return copy;
}

int ScenarioSet::IndexOf(const std::string& id) const {
  for (int s = 0; s < size(); ++s) {
    if (scenarios[s].id == id) return s;
  }
  return -1;
}

const Customer* Instance::FindCustomer(int id) const {
  auto it = std::lower_bound(
      customers.begin(), customers.end(), id,
      [](const Customer& c, int value) { return c.id < value; });
  if (it != customers.end() && it->id == id) return &*it;
  // Tolerate unsorted input from hand-built instances.
  for (const Customer& c : customers) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

const Truck* Instance::FindTruck(int id) const {
  for (const Truck& t : trucks) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

double Instance::Size(int id, int scenario) const {
  if (scenario < 0 || scenario >= scenarios.size()) {
    throw InputError("scenario index " + std::to_string(scenario) +
                     " out of range");
  }
  const auto& sizes = scenarios.scenarios[scenario].sizes;
  auto it = sizes.find(id);
  if (it == sizes.end()) {
    throw InputError("customer " + std::to_string(id) +
                     " has no size in scenario " +
                     scenarios.scenarios[scenario].id);
  }
  return it->second;
}

std::vector<int> Instance::DemandingCustomerIds() const {
  std::vector<int> ids;
  for (const Customer& c : customers) {
    if (c.demand_flag == 1) ids.push_back(c.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace pdpsd
