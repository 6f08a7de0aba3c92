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

#include "qfridge/model.hpp"

namespace qfridge {

// Closed-form rate polynomials of the steady-state solution. With
// M_alpha = Gamma_alpha (2 N_alpha + 1) and the pair-sum product
// P = prod_{a<b} (M_a + M_b):
//   G  = 4 Gamma1 Gamma2 Gamma3 (M1+M2+M3) P
//   X1 = 2 (1 + A^2/B^2) M1 M2 M3 (M1+M2+M3)^2 P
//   X2 = [4 M1 M2 M3 + sum_{a<b} M_a M_b (M_a+M_b)] P
//   X3 = - G1 G2 M1 M2 (M1+M2)(M1+M2+2M3)
//        + G1 G3 M1 M3 (M1+M3)(M1+2M2+M3)
//        - G2 G3 M2 M3 (M2+M3)(2M1+M2+M3)
//   xi = g~^2 G / (X1 + g~^2 (X2 + X3))
// where B = M1+M2+M3 and A = D1 - D2 + D3 + D13 is the exchange detuning.
struct ClosureRates {
  std::array<double, 3> m{};  // M_alpha
  double b_total = 0.0;
  double a_detuning = 0.0;
  double g_poly = 0.0;
  double x1_poly = 0.0;
  double x2_poly = 0.0;
  double x3_poly = 0.0;  // may be negative; only the full denominator must be > 0
  double xi = 0.0;
};

struct AnalyticSteadyState {
  std::array<double, 3> populations{};
  double current_j = 0.0;  // J = i<Dv>
  ClosureRates rates;
};

ClosureRates closure_rates(const RefrigeratorModel& model);

// J = i<Dv> = -xi (N1 N3 - N2 - N1 N2 - N2 N3); cooling iff J < 0,
// equivalently N1 N3 > N2 (1 + N1 + N3).
double current_j(const RefrigeratorModel& model);

// <n_alpha> = N_alpha/(2 N_alpha + 1) + (-1)^(alpha+1) J / (2 M_alpha).
// Throws RegimeError if any population leaves [0,1]: that marks parameters
// outside the weak-coupling validity of the closed form, not a math error.
AnalyticSteadyState steady_populations(const RefrigeratorModel& model);

}  // namespace qfridge
