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

// Cheapest-insertion starting point for branch and bound.

#ifndef PDPSD_PLANNING_GREEDY_H_
#define PDPSD_PLANNING_GREEDY_H_

#include <optional>

#include "pdpsd/core/instance.h"
#include "pdpsd/planning/route_model.h"

namespace pdpsd {

// Inserts dependency groups one at a time at their cheapest position while
// the gain beats the outsourcing penalty. Every scenario gets the same
// route, so the result is feasible for all of them. Returns nullopt when the
// forced assignments cannot be placed.
std::optional<RouteChoice> GreedyChoice(const Instance& instance,
                                        const RouteModelInput& input);

}  // namespace pdpsd

#endif  // PDPSD_PLANNING_GREEDY_H_
