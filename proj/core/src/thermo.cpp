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

#include "qfridge/thermo.hpp"

#include <cmath>

#include "qfridge/analytic.hpp"
#include "qfridge/constants.hpp"
#include "qfridge/errors.hpp"

namespace qfridge {

CoolingCondition cooling_condition(const RefrigeratorModel& model) {
  CoolingCondition cond;
  const auto& b = model.beta_inv_ghz;
  const double lhs = (b[0] - b[1]) * model.qubits[0].energy_ghz;
  const double rhs = (b[1] - b[2]) * model.qubits[2].energy_ghz;
  cond.margin = rhs - lhs;
  cond.cooling = cond.margin > 0.0;
  cond.temperature_order_ok =
      model.qubits[0].bath_temp_mk < model.qubits[1].bath_temp_mk &&
      model.qubits[1].bath_temp_mk < model.qubits[2].bath_temp_mk;
  return cond;
}

std::array<double, 3> heat_currents_analytic(const RefrigeratorModel& model) {
  const double j = current_j(model);
  std::array<double, 3> q{};
  for (int alpha = 0; alpha < 3; ++alpha) {
    const double sign = (alpha % 2 == 0) ? -1.0 : 1.0;  // (-1)^alpha, alpha = 1..3
    q[alpha] = sign * j * model.qubits[alpha].energy_ghz;
  }
  return q;
}

Efficiency efficiency(const RefrigeratorModel& model) {
  if (!cooling_condition(model).cooling) {
    throw RegimeError("efficiency requested outside the cooling regime: "
                      "Q_C/Q_H is not a coefficient of performance there");
  }
  Efficiency eff;
  eff.eta = model.qubits[0].energy_ghz / model.qubits[2].energy_ghz;
  const double t1 = model.qubits[0].bath_temp_mk;
  const double t2 = model.qubits[1].bath_temp_mk;
  const double t3 = model.qubits[2].bath_temp_mk;
  eff.eta_max = (1.0 - t2 / t3) / (t2 / t1 - 1.0);
  return eff;
}

double effective_temperature(double energy_ghz, double population) {
  if (!(population > 0.0)) {
    throw RegimeError("effective temperature undefined for population <= 0");
  }
  if (population >= 0.5) {
    throw RegimeError("population >= 1/2: no positive temperature "
                      "(inverted or infinite-temperature state)");
  }
  return energy_ghz /
         (kBoltzmannOverPlanckGHzPermK * std::log((1.0 - population) / population));
}

std::optional<double> try_effective_temperature(double energy_ghz,
                                                double population) {
  if (population <= 0.0 || population >= 0.5) return std::nullopt;
  return effective_temperature(energy_ghz, population);
}

double entropy_production(const RefrigeratorModel& model) {
  const std::array<double, 3> q = heat_currents_analytic(model);
  double sigma = 0.0;
  for (int alpha = 0; alpha < 3; ++alpha) {
    sigma -= q[alpha] * model.beta_inv_ghz[alpha];
  }
  return sigma;
}

ThermoReport thermo_report(const RefrigeratorModel& model) {
  ThermoReport report;
  const CoolingCondition cond = cooling_condition(model);
  report.cooling = cond.cooling;
  report.cooling_margin = cond.margin;
  report.heat_currents = heat_currents_analytic(model);
  if (cond.cooling) {
    const Efficiency eff = efficiency(model);
    report.efficiency = eff.eta;
    report.efficiency_bound = eff.eta_max;
  }
  const AnalyticSteadyState steady = steady_populations(model);
  for (int alpha = 0; alpha < 3; ++alpha) {
    report.t_eff_mk[alpha] = try_effective_temperature(
        model.qubits[alpha].energy_ghz, steady.populations[alpha]);
  }
  report.entropy_rate = entropy_production(model);
  return report;
}

}  // namespace qfridge
