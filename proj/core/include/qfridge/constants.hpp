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

namespace qfridge {

// Unit convention used throughout: energies are ordinary frequencies in GHz
// (E/h), rates are GHz, temperatures are mK, time is 1/GHz, inductances nH,
// capacitances fF. The single thermal conversion constant k_B/h lives here
// and nowhere else.
inline constexpr double kBoltzmannOverPlanckGHzPerK = 20.8366;
inline constexpr double kBoltzmannOverPlanckGHzPermK =
    kBoltzmannOverPlanckGHzPerK * 1e-3;

// SI definitions (2019 exact values) feeding the circuit-parameter
// conversions below.
inline constexpr double kPlanckJs = 6.62607015e-34;
inline constexpr double kElementaryChargeC = 1.602176634e-19;
inline constexpr double kPi = 3.14159265358979323846;

// (Phi_0 / 2pi)^2 / h expressed in GHz * nH: the inductive energy of a loop
// is this constant divided by the inductance in nH.
inline constexpr double kReducedFluxQuantumSqGHzNH =
    (kPlanckJs / (2.0 * kElementaryChargeC)) *
    (kPlanckJs / (2.0 * kElementaryChargeC)) /
    (4.0 * kPi * kPi * kPlanckJs) / 1e9 / 1e-9;

// 4 e^2 / h in GHz * fF: with phase as the dimensionless coordinate the
// kinetic term is q^2 / (2 m) with 1/m = (this constant) / C[fF] in GHz.
inline constexpr double kInverseMassScaleGHzfF =
    4.0 * kElementaryChargeC * kElementaryChargeC / kPlanckJs / 1e9 / 1e-15;

}  // namespace qfridge
