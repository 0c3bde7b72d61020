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

// Reader for Solomon VRPTW benchmark files. Time windows and service times
// are parsed and kept for reference only.

#ifndef PDPSD_IO_SOLOMON_H_
#define PDPSD_IO_SOLOMON_H_

#include <optional>
#include <string>
#include <vector>

#include "pdpsd/core/instance.h"

namespace pdpsd {

struct SolomonRow {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
  double demand = 0.0;
  double ready = 0.0;
  double due = 0.0;
  double service = 0.0;
};

struct SolomonData {
  std::string name;
  int vehicles = 0;
  double capacity = 0.0;
  SolomonRow depot;
  std::vector<SolomonRow> customers;  // file order
};

// Throws ParseError("line N: ...") on malformed rows and "no depot row" when
// the CUSTOMER section is empty.
SolomonData ParseSolomon(const std::string& text);
SolomonData ReadSolomonFile(const std::string& path);

struct SolomonOptions {
  int customers = 0;  // first n customers in file order; 0 keeps all
  std::optional<double> capacity;  // overrides the VEHICLE section
  int trucks = 1;
  // Single scenario "w1" with size = demand (pickups) unless set.
  std::optional<double> uniform_size;
  CostModel cost;
};

// Coordinate instance: depot = row 0, customer ids as in the file, k = 1.
Instance InstanceFromSolomon(const SolomonData& data,
                             const SolomonOptions& options);

}  // namespace pdpsd

#endif  // PDPSD_IO_SOLOMON_H_
