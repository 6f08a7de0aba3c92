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

#include <array>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qfridge/circuit.hpp"
#include "qfridge/model.hpp"

namespace qfridge::cli {

struct SolverConfig {
  double dt_inv_ghz = 0.0;       // 0 = auto
  double t_final_inv_ghz = 0.0;  // 0 = auto (20 / min Gamma)
  int sample_stride = 0;         // 0 = auto
  int n_basis = 32;
  double resonance_tol_rel = 1e-3;
  double degeneracy_floor_rel = 1e-6;
};

struct SweepConfig {
  std::string path;  // e.g. "qubits[2].bath_temp" or "coupling.g_tilde"
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
  bool log_scale = false;
};

// Parsed and validated scenario. Exactly one of `dressed` / `circuit` is
// set. `resolved` echoes the full configuration with defaults filled in.
struct ScenarioConfig {
  std::optional<RefrigeratorModel> dressed;
  std::optional<CircuitParams> circuit;
  std::array<BathSpec, 3> baths{};  // circuit configs only
  SolverConfig solver;
  std::optional<SweepConfig> sweep;
  nlohmann::json resolved;
};

// Strict parser: unknown keys are rejected, every violation names the JSON
// path and the expectation. Units are fixed (GHz, mK, nH, fF) and the keys
// carry none. Throws ConfigError.
ScenarioConfig parse_config(const std::string& text);

ScenarioConfig load_config_file(const std::string& path);

// Returns the dressed model, assembling the circuit block if needed.
RefrigeratorModel resolve_model(const ScenarioConfig& config);

// Applies a sweep path to a copy of the model (dressed block only).
RefrigeratorModel apply_sweep_value(const RefrigeratorModel& base,
                                    const std::string& path, double value);

}  // namespace qfridge::cli
