// Copyright 2026 The edpm Authors
//
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

#pragma once

#include <stdexcept>
#include <string>

namespace edpm {

/// Thrown when a caller breaks an API precondition (a programming error,
/// as opposed to bad input data, which raises std::invalid_argument or
/// std::domain_error).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// Thrown for malformed command-line input, vector files or curve files;
/// the CLI maps it to a distinct exit code.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace edpm

#define EDPM_CONTRACT(cond, msg)            \
  do {                                      \
    if (!(cond)) {                          \
      throw ::edpm::ContractViolation(msg); \
    }                                       \
  } while (0)
