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

#include "pdpsd/io/solomon.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "pdpsd/core/errors.h"

namespace pdpsd {
namespace {

std::vector<std::string> Tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

std::optional<double> Number(const std::string& token) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::string Upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

[[noreturn]] void Fail(int line, const std::string& message) {
  throw ParseError("line " + std::to_string(line) + ": " + message);
}

}  // namespace

SolomonData ParseSolomon(const std::string& text) {
  SolomonData data;
  enum class Section { kHeader, kVehicle, kCustomer } section = Section::kHeader;
  bool vehicle_read = false;
  bool depot_read = false;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto tokens = Tokens(line);
    if (tokens.empty()) continue;
    const std::string head = Upper(tokens[0]);
    if (head == "VEHICLE") {
      section = Section::kVehicle;
      continue;
    }
    if (head == "CUSTOMER") {
      section = Section::kCustomer;
      continue;
    }
    const bool numeric = Number(tokens[0]).has_value();
    switch (section) {
      case Section::kHeader:
        if (data.name.empty()) data.name = tokens[0];
        break;
      case Section::kVehicle: {
        if (!numeric) break;  // column captions
        if (tokens.size() != 2) Fail(number, "expected vehicle count and capacity");
        const auto count = Number(tokens[0]);
        const auto capacity = Number(tokens[1]);
        if (!count || !capacity) Fail(number, "non-numeric vehicle data");
        data.vehicles = static_cast<int>(*count);
        data.capacity = *capacity;
        vehicle_read = true;
        break;
      }
      case Section::kCustomer: {
        if (!numeric) {
          if (depot_read) Fail(number, "unexpected text in the customer rows");
          break;  // column captions
        }
        if (tokens.size() != 7) {
          Fail(number, "expected 7 numeric fields, found " +
                           std::to_string(tokens.size()));
        }
        double f[7];
        for (int k = 0; k < 7; ++k) {
          const auto v = Number(tokens[k]);
          if (!v) Fail(number, "field " + std::to_string(k + 1) + " is not numeric");
          f[k] = *v;
        }
        SolomonRow row{static_cast<int>(f[0]), f[1], f[2], f[3], f[4], f[5], f[6]};
        if (!depot_read) {
          if (row.id != 0) Fail(number, "the first customer row must be the depot (id 0)");
          data.depot = row;
          depot_read = true;
        } else {
          data.customers.push_back(row);
        }
        break;
      }
    }
  }
  if (!depot_read) throw ParseError("no depot row");
  if (!vehicle_read) throw ParseError("no VEHICLE section");
  return data;
}

SolomonData ReadSolomonFile(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw InputError("instance not found: " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return ParseSolomon(buffer.str());
}

Instance InstanceFromSolomon(const SolomonData& data,
                             const SolomonOptions& options) {
  const int count = options.customers == 0
                        ? static_cast<int>(data.customers.size())
                        : options.customers;
  if (count < 0 || count > static_cast<int>(data.customers.size())) {
    throw InputError("requested " + std::to_string(count) +
                     " customers, file has " +
                     std::to_string(data.customers.size()));
  }
  Instance instance;
  instance.name = data.name;
  instance.cost = options.cost;
  std::map<int, Point> points;
  Scenario scenario{"w1", 1.0, {}};
  for (int i = 0; i < count; ++i) {
    const SolomonRow& row = data.customers[i];
    instance.customers.push_back(Customer{row.id, Point{row.x, row.y}, 1, 0});
    points[row.id] = Point{row.x, row.y};
    scenario.sizes[row.id] = options.uniform_size.value_or(row.demand);
  }
  std::sort(instance.customers.begin(), instance.customers.end(),
            [](const Customer& a, const Customer& b) { return a.id < b.id; });
  instance.distances = DistanceProvider::FromCoordinates(
      Point{data.depot.x, data.depot.y}, std::move(points));
  const double capacity = options.capacity.value_or(data.capacity);
  for (int t = 0; t < options.trucks; ++t) {
    instance.trucks.push_back(Truck{t + 1, capacity, 0.0});
  }
  instance.scenarios.scenarios.push_back(std::move(scenario));
  return instance;
}

}  // namespace pdpsd
