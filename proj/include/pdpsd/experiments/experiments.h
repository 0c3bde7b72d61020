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

// Experiment runners: stochastic versus deterministic planning, and total
// cost as more request epochs are accepted.

#ifndef PDPSD_EXPERIMENTS_EXPERIMENTS_H_
#define PDPSD_EXPERIMENTS_EXPERIMENTS_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pdpsd/core/instance.h"
#include "pdpsd/milp/problem.h"
#include "pdpsd/planning/plan.h"
#include "pdpsd/planning/reroute.h"

namespace pdpsd {

// Cost of executing scenario `plan_scenario`'s routes of `plan` when the
// sizes of instance scenario `w` occur. nullopt when a route overloads or
// runs a negative load under those sizes.
std::optional<double> RealizedCost(const Instance& instance, const Plan& plan,
                                   int plan_scenario, int w);

struct ComparisonRow {
  std::string plan;      // "stochastic", "deterministic", "known"
  std::string scenario;  // instance scenario id the cost is realized in
  double probability = 0.0;
  std::optional<double> cost;
};

struct ComparisonReport {
  Plan stochastic;
  Plan deterministic;  // planned for the heavy scenario only
  Plan known_heavy;
  Plan known_light;
  std::vector<ComparisonRow> rows;
  double stochastic_expected = 0.0;
  std::optional<double> deterministic_expected;
  double known_heavy_cost = 0.0;
  double known_light_cost = 0.0;
};

// Two-scenario comparison. `heavy` and `light` are instance scenario
// indices; the deterministic plan assumes the heavy sizes and is then run in
// every scenario. The known-scenario plans each see one scenario with
// probability 1.
ComparisonReport RunStochasticComparison(const Instance& instance, int heavy,
                                         int light,
                                         const milp::MilpSettings& settings);

struct SweepRow {
  int enabled_epochs = 0;  // request epochs accepted after epoch 0
  int served = 0;
  int outsourced = 0;
  double delivery_cost = 0.0;
  double total_cost = 0.0;  // delivery cost + penalties, turned-away included
  std::vector<std::string> issues;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  SimulationResult full;  // the run with every epoch accepted
};

// Runs the simulation once per prefix of request epochs. Customers of
// epochs that are not accepted are outsourced at the penalty.
SweepReport RunEpochSweep(const Instance& instance,
                          const SimulationSettings& settings);

nlohmann::json ComparisonJson(const ComparisonReport& report);
std::string ComparisonCsv(const ComparisonReport& report);
nlohmann::json SweepJson(const SweepReport& report);
std::string SweepCsv(const SweepReport& report);

}  // namespace pdpsd

#endif  // PDPSD_EXPERIMENTS_EXPERIMENTS_H_
