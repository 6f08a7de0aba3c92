// Copyright 2026 The qfridge Authors
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

namespace qfridge {

// Bad or inconsistent input parameters / configuration. CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Inputs are syntactically fine but outside the validity regime of the
// model (population out of [0,1], degenerate steady state, shallow well,
// accidental degeneracy, ...). CLI exit code 3.
class RegimeError : public std::runtime_error {
 public:
  explicit RegimeError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical routine failed to deliver a trustworthy result. CLI exit code 4.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qfridge
