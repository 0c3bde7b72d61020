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

// JSON instance and event documents, and the JSON / CSV result writers.
// Output is canonical: sorted keys, two-space indent, trailing newline.

#ifndef PDPSD_IO_JSON_IO_H_
#define PDPSD_IO_JSON_IO_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "pdpsd/core/instance.h"
#include "pdpsd/planning/plan.h"
#include "pdpsd/planning/reroute.h"

namespace pdpsd {

// Throws SchemaError ("customers[2].sizes.w1: expected a number") on
// schema violations and on broken cross references.
Instance ParseInstanceJson(const std::string& text);
std::string InstanceToJson(const Instance& instance);

struct EventsDocument {
  std::string realized_scenario;  // optional
  std::vector<RequestEvent> events;
};

EventsDocument ParseEventsJson(const std::string& text);
std::string EventsToJson(const EventsDocument& document);

// Whole-file helpers. Missing files raise InputError
// "instance not found: <path>" / "events not found: <path>".
std::string ReadTextFile(const std::string& path, const std::string& what);
void WriteTextFile(const std::string& path, const std::string& text);
Instance LoadInstanceFile(const std::string& path);
EventsDocument LoadEventsFile(const std::string& path);

nlohmann::json PlanJson(const Instance& instance, const Plan& plan);
nlohmann::json SimulationJson(const Instance& instance,
                              const SimulationResult& result);

// Result documents: any JSON object with a known "kind". Throws SchemaError.
nlohmann::json ParseResultJson(const std::string& text);
std::string DumpJson(const nlohmann::json& document);

// Three decimals, half-up; `trim` drops trailing zeros ("95.5", "50").
std::string FormatMilli(double value, bool trim);

// "Depot-c2-c4-Depot"; trucks joined by '|', empty routes skipped.
std::string RouteText(const std::vector<std::vector<LocationId>>& routes);

inline constexpr const char* kTraceCsvHeader =
    "iteration,startingWeight,scenario,routingPlan,outsourcing,objectiveCost,"
    "distance";

// One row per scenario of the plan.
std::string PlanCsv(const Instance& instance, const Plan& plan);
// One row per epoch record plus the "actual" row.
std::string SimulationCsv(const SimulationResult& result);

}  // namespace pdpsd

#endif  // PDPSD_IO_JSON_IO_H_
