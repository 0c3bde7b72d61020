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

// pdpsd: plan, simulate, validate and experiment subcommands.
//
// Exit codes: 0 optimal, 1 bad input, 2 time limit with a plan, 3 infeasible
// or time limit without a plan.

#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "pdpsd/core/cost.h"
#include "pdpsd/core/errors.h"
#include "pdpsd/experiments/experiments.h"
#include "pdpsd/experiments/fixtures.h"
#include "pdpsd/io/json_io.h"
#include "pdpsd/io/solomon.h"
#include "pdpsd/planning/offline.h"
#include "pdpsd/planning/reroute.h"

namespace {

using namespace pdpsd;

constexpr int kExitOptimal = 0;
constexpr int kExitInput = 1;
constexpr int kExitTimeLimit = 2;
constexpr int kExitInfeasible = 3;

struct Config {
  std::string instance_path;
  std::string events_path;
  std::string out_path;
  std::string format = "json";
  std::string experiment = "stochastic";
  int k = 3;
  double gap = 1e-6;
  double time_limit = 300.0;
  unsigned seed = 1;
  std::optional<double> fuel_consumption;
  std::optional<double> fuel_price;
  std::optional<double> penalty;
  std::optional<double> capacity;
};

milp::MilpSettings Settings(const Config& c) {
  milp::MilpSettings s;
  s.absolute_gap = c.gap;
  s.time_limit = c.time_limit;
  return s;
}

void Override(const Config& c, Instance& instance) {
  if (c.fuel_consumption) instance.cost.fuel_consumption = *c.fuel_consumption;
  if (c.fuel_price) instance.cost.fuel_price = *c.fuel_price;
  if (c.penalty) instance.cost.outsource_penalty = *c.penalty;
  if (c.capacity) {
    for (Truck& t : instance.trucks) t.capacity = *c.capacity;
  }
}

Instance LoadInstance(const Config& c) {
  Instance instance = LoadInstanceFile(c.instance_path);
  Override(c, instance);
  return instance;
}

void Emit(const Config& c, const std::string& text) {
  if (c.out_path.empty()) {
    std::cout << text;
  } else {
    WriteTextFile(c.out_path, text);
  }
}

int ExitFor(milp::SolveStatus status) {
  switch (status) {
    case milp::SolveStatus::kOptimal:
      return kExitOptimal;
    case milp::SolveStatus::kTimeLimitFeasible:
      return kExitTimeLimit;
    default:
      return kExitInfeasible;
  }
}

// The summary goes to stdout unless the document already does.
void Summary(const Config& c, const char* status, double objective, double gap,
             double seconds) {
  std::ostream& out = c.out_path.empty() ? std::cerr : std::cout;
  out << "status " << status << " objective " << FormatMilli(objective, false)
      << " gap " << gap << " time " << FormatMilli(seconds, false) << "s\n";
}

int CmdPlan(const Config& c) {
  const Instance instance = LoadInstance(c);
  const Plan plan = SolveOffline(instance, Settings(c));
  const auto issues = CheckPlan(instance, OfflineModelInput(instance), plan);
  if (!issues.empty()) throw StateError("plan check failed: " + issues.front());
  Emit(c, c.format == "csv" ? PlanCsv(instance, plan)
                            : DumpJson(PlanJson(instance, plan)));
  Summary(c, milp::ToString(plan.status), plan.objective, plan.gap, plan.wall_time);
  return ExitFor(plan.status);
}

int CmdSimulate(const Config& c) {
  const Instance instance = LoadInstance(c);
  SimulationSettings settings;
  settings.trigger = ReplanTrigger::KthFromRouteEnd(c.k);
  settings.milp = Settings(c);
  std::vector<RequestEvent> events;
  if (!c.events_path.empty()) {
    EventsDocument doc = LoadEventsFile(c.events_path);
    settings.realized_scenario = doc.realized_scenario;
    events = std::move(doc.events);
  }
  const SimulationResult result = RunSimulation(instance, events, settings);
  const Instance full = WithEvents(instance, events);
  const auto issues = CheckSimulation(full, result);
  if (!issues.empty()) throw StateError("simulation check failed: " + issues.front());
  Emit(c, c.format == "csv" ? SimulationCsv(result)
                            : DumpJson(SimulationJson(full, result)));
  int code = kExitOptimal;
  double seconds = 0.0;
  double gap = 0.0;
  for (const EpochRecord& e : result.epochs) {
    seconds += e.wall_time;
    gap = std::max(gap, e.gap);
    if (e.status == milp::SolveStatus::kTimeLimitFeasible) code = kExitTimeLimit;
  }
  Summary(c, code == kExitOptimal ? "Optimal" : "TimeLimitFeasible", result.total_cost,
          gap, seconds);
  return code;
}

int CmdValidate(const Config& c) {
  const Instance instance = LoadInstance(c);
  if (!c.events_path.empty()) {
    const EventsDocument doc = LoadEventsFile(c.events_path);
    const Instance full = WithEvents(instance, doc.events);
    const auto issues = ValidateInstance(full);
    if (!issues.empty()) throw InputError(issues.front());
    if (!doc.realized_scenario.empty() &&
        full.scenarios.IndexOf(doc.realized_scenario) < 0) {
      throw InputError("unknown realized scenario " + doc.realized_scenario);
    }
  }
  std::cout << "valid: " << instance.customers.size() << " customers, "
            << instance.trucks.size() << " trucks, " << instance.scenarios.size()
            << " scenarios\n";
  return kExitOptimal;
}

// A small random instance with two request epochs, for smoke runs.
Instance Synthetic(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 50.0);
  std::uniform_int_distribution<int> weight(1, 10);
  Instance instance;
  instance.name = "synthetic-" + std::to_string(seed);
  std::map<int, Point> points;
  Scenario only{"w1", 1.0, {}};
  for (int id = 1; id <= 7; ++id) {
    Customer c;
    c.id = id;
    c.position = Point{coord(rng), coord(rng)};
    c.request_epoch = id <= 4 ? 0 : 1;
    points[id] = *c.position;
    only.sizes[id] = (id % 3 == 0 ? -1.0 : 1.0) * weight(rng);
    instance.customers.push_back(c);
  }
  instance.trucks = {{1, 30.0, 0.0}};
  instance.scenarios.scenarios = {only};
  instance.distances = DistanceProvider::FromCoordinates({25.0, 25.0}, points);
  return instance;
}

int CmdExperiment(const Config& c) {
  if (c.experiment == "synthetic") {
    Instance instance = Synthetic(c.seed);
    Override(c, instance);
    SimulationSettings settings;
    settings.trigger = ReplanTrigger::KthFromRouteEnd(c.k);
    settings.milp = Settings(c);
    const SweepReport report = RunEpochSweep(instance, settings);
    Emit(c, c.format == "csv" ? SweepCsv(report) : DumpJson(SweepJson(report)));
    return kExitOptimal;
  }
  const SolomonData c101 = ReadSolomonFile(c.instance_path);
  if (c.experiment == "stochastic") {
    Instance instance = StochasticComparisonInstance(c101);
    Override(c, instance);
    const ComparisonReport report = RunStochasticComparison(instance, 0, 1, Settings(c));
    Emit(c, c.format == "csv" ? ComparisonCsv(report)
                              : DumpJson(ComparisonJson(report)));
    Summary(c, milp::ToString(report.stochastic.status), report.stochastic_expected,
            report.stochastic.gap, report.stochastic.wall_time);
    return ExitFor(report.stochastic.status);
  }
  if (c.experiment == "reroute") {
    Instance instance = RerouteEffectivenessInstance(c101, {10, 5, 5, 5});
    Override(c, instance);
    SimulationSettings settings;
    settings.trigger = ReplanTrigger::KthFromRouteEnd(c.k);
    settings.milp = Settings(c);
    const SweepReport report = RunEpochSweep(instance, settings);
    for (const SweepRow& row : report.rows) {
      if (!row.issues.empty()) throw StateError("simulation check failed: " + row.issues.front());
    }
    Emit(c, c.format == "csv" ? SweepCsv(report) : DumpJson(SweepJson(report)));
    return kExitOptimal;
  }
  throw InputError("unknown experiment " + c.experiment);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Package pickup and delivery planning with stochastic demands"};
  app.require_subcommand(1);
  Config config;

  auto common = [&](CLI::App* sub, bool needs_instance) {
    auto* opt = sub->add_option("--instance", config.instance_path,
                                "instance JSON (Solomon file for experiment)");
    if (needs_instance) opt->required();
    sub->add_option("--gap", config.gap, "absolute optimality gap")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--time-limit", config.time_limit, "seconds per solve")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--format", config.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", config.out_path, "output file (default stdout)");
    sub->add_option("--fuel-consumption", config.fuel_consumption);
    sub->add_option("--fuel-price", config.fuel_price);
    sub->add_option("--penalty", config.penalty, "outsourcing penalty");
    sub->add_option("--capacity", config.capacity, "capacity of every truck");
  };

  CLI::App* plan = app.add_subcommand("plan", "solve the offline model");
  common(plan, true);
  CLI::App* simulate = app.add_subcommand("simulate", "run the re-route loop");
  common(simulate, true);
  simulate->add_option("--events", config.events_path, "events JSON");
  simulate->add_option("--k", config.k, "re-plan at the k-th stop from the end")
      ->check(CLI::PositiveNumber);
  CLI::App* validate = app.add_subcommand("validate", "check input documents");
  common(validate, true);
  validate->add_option("--events", config.events_path, "events JSON");
  CLI::App* experiment = app.add_subcommand("experiment", "reproduce experiments");
  common(experiment, false);
  experiment->add_option("--name", config.experiment, "stochastic, reroute or synthetic")
      ->check(CLI::IsMember({"stochastic", "reroute", "synthetic"}));
  experiment->add_option("--k", config.k)->check(CLI::PositiveNumber);
  experiment->add_option("--seed", config.seed, "seed for synthetic instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*plan) return CmdPlan(config);
    if (*simulate) return CmdSimulate(config);
    if (*validate) return CmdValidate(config);
    if (*experiment) {
      if (config.experiment != "synthetic" && config.instance_path.empty()) {
        throw InputError("--instance is required for this experiment");
      }
      return CmdExperiment(config);
    }
  } catch (const ModelInfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
