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

#include "qfridge/model.hpp"

namespace qfridge {

// Thermodynamic summary of a model. Temperature roles: T_C = T_1 (target),
// T_R = T_2 (refrigerator), T_H = T_3 (engine). Efficiency entries are
// present only in the cooling regime; effective temperatures are absent for
// inverted or empty populations (p outside (0, 1/2)).
struct ThermoReport {
  bool cooling = false;
  double cooling_margin = 0.0;            // (b2-b3) E3 - (b1-b2) E1, reduced units
  std::array<double, 3> heat_currents{};  // Q_alpha, GHz^2
  std::optional<double> efficiency;       // E1/E3
  std::optional<double> efficiency_bound; // (1 - T2/T3) / (T2/T1 - 1)
  std::array<std::optional<double>, 3> t_eff_mk;
  double entropy_rate = 0.0;              // sigma >= 0, GHz
};

struct CoolingCondition {
  bool cooling = false;
  double margin = 0.0;
  bool temperature_order_ok = true;  // T1 < T2 < T3 as the roles expect
};

// Cooling iff (b1 - b2) E1 < (b2 - b3) E3 with b = 1/(k_B T / h) per GHz.
CoolingCondition cooling_condition(const RefrigeratorModel& model);

// Q_alpha = (-1)^alpha J E_alpha; the sum vanishes exactly on resonance.
std::array<double, 3> heat_currents_analytic(const RefrigeratorModel& model);

struct Efficiency {
  double eta = 0.0;      // Q_C / Q_H = E1 / E3
  double eta_max = 0.0;  // Carnot-type bound
};

// Only meaningful in the cooling regime; throws RegimeError otherwise.
Efficiency efficiency(const RefrigeratorModel& model);

// Inverts the two-level Gibbs distribution: T = E / ((kB/h) ln((1-p)/p)).
// Requires 0 < p < 1/2; throws RegimeError otherwise (p >= 1/2 means no
// positive temperature reproduces the population).
double effective_temperature(double energy_ghz, double population);

// Same, but reports the impossible cases as nullopt instead of throwing.
std::optional<double> try_effective_temperature(double energy_ghz,
                                                double population);

// sigma = sum_alpha (-Q_alpha) beta_alpha
//       = J [(b1-b2) E1 - (b2-b3) E3] >= 0 for all parameters.
double entropy_production(const RefrigeratorModel& model);

// Full report from the analytic steady state.
ThermoReport thermo_report(const RefrigeratorModel& model);

}  // namespace qfridge
