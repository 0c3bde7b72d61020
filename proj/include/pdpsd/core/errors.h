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

#ifndef PDPSD_CORE_ERRORS_H_
#define PDPSD_CORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace pdpsd {

// Malformed or inconsistent input data (unknown ids, missing sizes, ...).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A request exceeds a hard capability limit of an algorithm.
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what)
      : std::runtime_error(what) {}
};

// Solver output that cannot be turned into routes.
class DecodeError : public std::runtime_error {
 public:
  explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

// The optimization model has no feasible point.
class ModelInfeasibleError : public std::runtime_error {
 public:
  explicit ModelInfeasibleError(const std::string& what)
      : std::runtime_error(what) {}
};

// Simulation state that contradicts the plan it is derived from.
class StateError : public std::runtime_error {
 public:
  explicit StateError(const std::string& what) : std::runtime_error(what) {}
};

// Executed route prefixes that do not chain into one walk.
class StitchError : public std::runtime_error {
 public:
  explicit StitchError(const std::string& what) : std::runtime_error(what) {}
};

// Text that does not follow a supported file format.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// JSON documents violating the documented schema. The message lists the JSON
// path and the rule that failed.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pdpsd

#endif  // PDPSD_CORE_ERRORS_H_
