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

#include "pdpsd/experiments/fixtures.h"

#include <numeric>

#include "pdpsd/core/errors.h"

namespace pdpsd {

Instance StochasticComparisonInstance(const SolomonData& c101) {
  SolomonOptions options;
  options.customers = 10;
  options.capacity = 50.0;
  Instance instance = InstanceFromSolomon(c101, options);
  instance.name = "c101-stochastic-10";
  Scenario heavy{"w1", 0.5, {}};
  Scenario light{"w2", 0.5, {}};
  for (const Customer& c : instance.customers) {
    const bool delivery = c.id == 2 || c.id == 6 || c.id == 10;
    heavy.sizes[c.id] = delivery ? -15.0 : 15.0;
    light.sizes[c.id] = delivery ? -10.0 : 10.0;
  }
  instance.scenarios.scenarios = {heavy, light};
  instance.dependencies.pairs = {{1, 2}, {5, 6}, {8, 10}};
  return instance;
}

Instance KnownScenarioInstance(const Instance& instance, int w) {
  if (w < 0 || w >= instance.scenarios.size()) {
    throw InputError("scenario index " + std::to_string(w) + " out of range");
  }
  Instance out = instance;
  Scenario only = instance.scenarios.scenarios[w];
  only.probability = 1.0;
  out.scenarios.scenarios = {only};
  return out;
}

Instance RerouteEffectivenessInstance(const SolomonData& c101,
                                      const std::vector<int>& batches) {
  SolomonOptions options;
  options.customers = std::accumulate(batches.begin(), batches.end(), 0);
  options.capacity = 200.0;
  options.uniform_size = 5.0;
  Instance instance = InstanceFromSolomon(c101, options);
  instance.name = "c101-reroute";
  int index = 0;
  for (std::size_t b = 0; b < batches.size(); ++b) {
    for (int k = 0; k < batches[b]; ++k, ++index) {
      instance.customers[index].request_epoch = static_cast<int>(b);
    }
  }
  return instance;
}

Instance ReplanTraceInstance(const SolomonData& c101) {
  SolomonOptions options;
  options.customers = 20;
  options.capacity = 50.0;
  Instance instance = InstanceFromSolomon(c101, options);
  instance.name = "c101-replan-trace";
  Scenario light{"w1", 0.5, {}};
  Scenario heavy{"w2", 0.5, {}};
  for (Customer& c : instance.customers) {
    if (c.id <= 10) {
      light.sizes[c.id] = heavy.sizes[c.id] = -5.0;
    } else if (c.id <= 15) {
      c.request_epoch = 1;
      const double sign = (c.id == 12 || c.id == 14) ? -1.0 : 1.0;
      light.sizes[c.id] = 5.0 * sign;
      heavy.sizes[c.id] = 10.0 * sign;
    } else {
      c.request_epoch = 2;
      light.sizes[c.id] = heavy.sizes[c.id] = 15.0;
    }
  }
  instance.scenarios.scenarios = {light, heavy};
  instance.dependencies.pairs = {{11, 12}, {13, 14}};
  return instance;
}

}  // namespace pdpsd
