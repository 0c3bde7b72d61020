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

#include "pdpsd/planning/offline.h"

#include <set>

#include "pdpsd/core/cost.h"
#include "pdpsd/core/errors.h"

namespace pdpsd {

RouteModelInput OfflineModelInput(const Instance& instance) {
  const auto violations = ValidateInstance(instance);
  if (!violations.empty()) {
    std::string message = "invalid instance: " + violations.front();
    if (violations.size() > 1) {
      message += " (+" + std::to_string(violations.size() - 1) + " more)";
    }
    throw InputError(message);
  }
  RouteModelInput input;
  std::set<int> known;
  for (const Customer& c : instance.customers) {
    if (c.demand_flag == 1 && c.request_epoch == 0) {
      input.customers.push_back(c.id);
      known.insert(c.id);
    }
  }
  for (const Truck& t : instance.trucks) {
    input.trucks.push_back({t.id, t.capacity, t.initial_cost, kDepot, 0.0, {}});
  }
  for (int w = 0; w < instance.scenarios.size(); ++w) {
    const Scenario& s = instance.scenarios.scenarios[w];
    input.scenarios.push_back({s.id, s.probability});
    std::vector<double> sizes;
    for (int c : input.customers) sizes.push_back(instance.Size(c, w));
    input.sizes.push_back(std::move(sizes));
  }
  for (const auto& [a, b] : instance.dependencies.pairs) {
    if (known.count(a) > 0 && known.count(b) > 0) {
      input.dependencies.emplace_back(a, b);
    }
  }
  input.outsource_penalty = instance.cost.outsource_penalty;
  return input;
}

RouteModel BuildOfflineModel(const Instance& instance) {
  return BuildRouteModel(instance, OfflineModelInput(instance));
}

milp::MilpProblem BuildOfflineMilp(const Instance& instance) {
  return BuildOfflineModel(instance).problem;
}

Plan SolveOffline(const Instance& instance, const milp::MilpSettings& settings) {
  const RouteModelInput input = OfflineModelInput(instance);
  // Outsourcing everyone is always feasible and seeds the search.
  RouteChoice all_outsourced;
  for (const ModelTruck& t : input.trucks) all_outsourced.truck_used[t.truck_id] = false;
  all_outsourced.routes.assign(
      input.scenarios.size(),
      std::vector<std::vector<LocationId>>(input.trucks.size()));
  all_outsourced.outsourced = input.customers;
  return SolveRouteModel(instance, input, settings, all_outsourced);
}

Plan DecodeRoutes(const std::vector<double>& assignment,
                  const Instance& instance) {
  return PlanFromAssignment(BuildOfflineModel(instance), assignment);
}

}  // namespace pdpsd
