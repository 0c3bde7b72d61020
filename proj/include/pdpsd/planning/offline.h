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

// Offline two-stage planning: every truck starts at the depot preloaded with
// the delivery packages it is assigned.

#ifndef PDPSD_PLANNING_OFFLINE_H_
#define PDPSD_PLANNING_OFFLINE_H_

#include <vector>

#include "pdpsd/core/instance.h"
#include "pdpsd/milp/problem.h"
#include "pdpsd/planning/plan.h"
#include "pdpsd/planning/route_model.h"

namespace pdpsd {

// Model input over the demanding customers known at epoch 0.
// Throws InputError when the instance is invalid.
RouteModelInput OfflineModelInput(const Instance& instance);

// The full extensive-form model (no scenario merging).
RouteModel BuildOfflineModel(const Instance& instance);
milp::MilpProblem BuildOfflineMilp(const Instance& instance);

Plan SolveOffline(const Instance& instance,
                  const milp::MilpSettings& settings = {});

// Decodes an assignment of BuildOfflineModel(instance).
Plan DecodeRoutes(const std::vector<double>& assignment,
                  const Instance& instance);

}  // namespace pdpsd

#endif  // PDPSD_PLANNING_OFFLINE_H_
