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

#ifndef PDPSD_CORE_COST_H_
#define PDPSD_CORE_COST_H_

#include <span>
#include <string>
#include <vector>

#include "pdpsd/core/instance.h"

namespace pdpsd {

struct Arc {
  LocationId from = kDepot;
  LocationId to = kDepot;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// fuel consumption x fuel price x distance(u, v).
double ArcCost(const Instance& instance, LocationId from, LocationId to);

// Deterministic cost of one plan: initial cost of every used truck, the
// outsourcing penalty of every outsourced customer and the routing cost of
// every arc.
double PlanCost(const Instance& instance, std::span<const int> used_trucks,
                std::span<const Arc> arcs, std::span<const int> outsourced);

// Total distance of a walk given as a location sequence.
double WalkDistance(const Instance& instance,
                    std::span<const LocationId> stops);

// Returns one message per violated invariant; empty when the instance is
// well formed.
std::vector<std::string> ValidateInstance(const Instance& instance);

// Half-up rounding to three decimals, robust to binary representation error
// (0.105 * 95.5 prints as 10.028).
double RoundMilli(double value);
long long ToMilli(double value);

}  // namespace pdpsd

#endif  // PDPSD_CORE_COST_H_
