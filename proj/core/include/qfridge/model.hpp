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
#include <string>
#include <vector>

#include "qfridge/linalg.hpp"

namespace qfridge {

// One qubit and its bath. Qubit 1 is the cooling target, qubit 2 the
// refrigerator, qubit 3 the heat engine.
struct QubitSpec {
  double energy_ghz = 0.0;    // two-level splitting E/h
  double gamma_ghz = 0.0;     // bath coupling rate
  double bath_temp_mk = 0.0;  // reservoir temperature
};

// Effective interaction parameters: the |010><101| exchange amplitude and
// the diagonal occupation shifts (singles, pairs, triple).
struct CouplingSpec {
  double g_tilde_ghz = 0.0;
  double d1_ghz = 0.0, d2_ghz = 0.0, d3_ghz = 0.0;
  double d12_ghz = 0.0, d13_ghz = 0.0, d23_ghz = 0.0;
  double d123_ghz = 0.0;
};

// Validated dressed model with precomputed bath occupations.
struct RefrigeratorModel {
  std::array<QubitSpec, 3> qubits;
  CouplingSpec coupling;
  std::array<double, 3> bose_n{};       // N_alpha at (E_alpha, T_alpha)
  std::array<double, 3> beta_inv_ghz{}; // 1/(k_B T_alpha / h), units 1/GHz
  std::vector<std::string> warnings;
};

inline constexpr double kResonanceRelTol = 1e-9;

// N(E,T) = 1 / (exp(theta) - 1), theta = E[GHz] / (kB/h * T).
double bose_occupation(double energy_ghz, double temp_mk);

// Thermal population of an isolated two-level system, N/(2N+1).
double bare_population(double bose_n);

// Validates positivity and the resonance condition E2 = E1 + E3 (relative
// tolerance 1e-9), precomputes N_alpha and beta_alpha. Throws ConfigError on
// violations; near-commensurate E1/E3 ratios are recorded as warnings.
RefrigeratorModel build_model(const std::array<QubitSpec, 3>& qubits,
                              const CouplingSpec& coupling);

// Effective Hamiltonian in the rotating frame: the bare sum E_alpha n_alpha
// is dropped (conserved on resonance); diagonal D shifts per occupation
// pattern plus the g~ exchange between |010> (index 2) and |101> (index 5).
Matrix build_h_eff(const RefrigeratorModel& model);

}  // namespace qfridge
