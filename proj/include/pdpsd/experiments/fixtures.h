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

// Benchmark fixtures built on Solomon C101 coordinates.

#ifndef PDPSD_EXPERIMENTS_FIXTURES_H_
#define PDPSD_EXPERIMENTS_FIXTURES_H_

#include <vector>

#include "pdpsd/core/instance.h"
#include "pdpsd/io/solomon.h"

namespace pdpsd {

// Ten C101 customers, one truck of capacity 50, two equiprobable scenarios
// (15 kg and 10 kg). Customers 2, 6 and 10 receive deliveries, the rest are
// pickups; dependencies 1->2, 5->6 and 8->10.
Instance StochasticComparisonInstance(const SolomonData& c101);

// Copy of `instance` keeping only scenario index `w`, with probability 1.
Instance KnownScenarioInstance(const Instance& instance, int w);

// First `count` C101 customers as 5 kg pickups for a single 200 kg truck in
// one scenario. Customers past the first `batches[0]` get request epochs
// 1, 2, ... in batches of the given sizes.
Instance RerouteEffectivenessInstance(const SolomonData& c101,
                                      const std::vector<int>& batches);

// Twenty C101 customers for a capacity-50 truck. Customers 1-10 are 5 kg
// deliveries known at epoch 0. Customers 11-15 arrive at epoch 1 with two
// equiprobable size scenarios (w1 at 5 kg, w2 at 10 kg; 11, 13 and 15 are
// pickups, 12 and 14 deliveries; dependencies 11->12 and 13->14). Customers
// 16-20 are 15 kg pickups arriving at epoch 2.
Instance ReplanTraceInstance(const SolomonData& c101);

}  // namespace pdpsd

#endif  // PDPSD_EXPERIMENTS_FIXTURES_H_
