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

#include <ostream>
#include <string>

#include "config.hpp"

namespace qfridge::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitRegimeError = 3;
inline constexpr int kExitNumericalError = 4;

// 12 significant digits, the fixed output precision everywhere.
std::string format_number(double value);

void run_check(const ScenarioConfig& config, std::ostream& out);
void run_steady(const ScenarioConfig& config, std::ostream& out);
void run_evolve(const ScenarioConfig& config, std::ostream& out);
void run_sweep(const ScenarioConfig& config, std::ostream& out);
void run_circuit(const ScenarioConfig& config, std::ostream& out);

// Dispatches on the command name; throws ConfigError for unknown commands.
void run_command(const std::string& command, const ScenarioConfig& config,
                 std::ostream& out);

// Exception-to-exit-code wrapper used by main(); prints one machine-parsable
// line ("error: <class>: <message>") on errors.
int run_command_guarded(const std::string& command, const ScenarioConfig& config,
                        std::ostream& out, std::ostream& err);

}  // namespace qfridge::cli
