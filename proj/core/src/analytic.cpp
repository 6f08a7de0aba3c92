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

#include "qfridge/analytic.hpp"

#include <cmath>
#include <string>

#include "qfridge/errors.hpp"

namespace qfridge {

ClosureRates closure_rates(const RefrigeratorModel& model) {
  ClosureRates r;
  const double g1 = model.qubits[0].gamma_ghz;
  const double g2 = model.qubits[1].gamma_ghz;
  const double g3 = model.qubits[2].gamma_ghz;
  for (int i = 0; i < 3; ++i) {
    r.m[i] = model.qubits[i].gamma_ghz * (2.0 * model.bose_n[i] + 1.0);
  }
  const double m1 = r.m[0], m2 = r.m[1], m3 = r.m[2];
  r.b_total = m1 + m2 + m3;
  const CouplingSpec& c = model.coupling;
  r.a_detuning = c.d1_ghz - c.d2_ghz + c.d3_ghz + c.d13_ghz;

  const double pair_prod = (m1 + m2) * (m1 + m3) * (m2 + m3);
  r.g_poly = 4.0 * g1 * g2 * g3 * r.b_total * pair_prod;
  const double detune = r.a_detuning / r.b_total;
  r.x1_poly = 2.0 * (1.0 + detune * detune) * m1 * m2 * m3 * r.b_total *
              r.b_total * pair_prod;
  r.x2_poly = (4.0 * m1 * m2 * m3 + m1 * m2 * (m1 + m2) +
               m1 * m3 * (m1 + m3) + m2 * m3 * (m2 + m3)) *
              pair_prod;
  r.x3_poly = -g1 * g2 * m1 * m2 * (m1 + m2) * (m1 + m2 + 2.0 * m3) +
              g1 * g3 * m1 * m3 * (m1 + m3) * (m1 + 2.0 * m2 + m3) -
              g2 * g3 * m2 * m3 * (m2 + m3) * (2.0 * m1 + m2 + m3);

  const double gt = c.g_tilde_ghz;
  const double denom = r.x1_poly + gt * gt * (r.x2_poly + r.x3_poly);
  if (!(denom > 0.0)) {
    throw NumericalError("closure denominator X1 + g~^2 (X2 + X3) is not positive");
  }
  r.xi = gt * gt * r.g_poly / denom;
  return r;
}

double current_j(const RefrigeratorModel& model) {
  const ClosureRates r = closure_rates(model);
  const double n1 = model.bose_n[0];
  const double n2 = model.bose_n[1];
  const double n3 = model.bose_n[2];
  return -r.xi * (n1 * n3 - n2 - n1 * n2 - n2 * n3);
}

AnalyticSteadyState steady_populations(const RefrigeratorModel& model) {
  AnalyticSteadyState state;
  state.rates = closure_rates(model);
  const double n1 = model.bose_n[0];
  const double n2 = model.bose_n[1];
  const double n3 = model.bose_n[2];
  state.current_j = -state.rates.xi * (n1 * n3 - n2 - n1 * n2 - n2 * n3);

  for (int alpha = 0; alpha < 3; ++alpha) {
    const double sign = (alpha % 2 == 0) ? 1.0 : -1.0;  // +, -, + for 1, 2, 3
    state.populations[alpha] = bare_population(model.bose_n[alpha]) +
                               sign * state.current_j / (2.0 * state.rates.m[alpha]);
    if (state.populations[alpha] < 0.0 || state.populations[alpha] > 1.0) {
      throw RegimeError("steady population of qubit " + std::to_string(alpha + 1) +
                        " left [0,1]: parameters outside the weak-coupling "
                        "validity of the closed form");
    }
  }
  return state;
}

}  // namespace qfridge
