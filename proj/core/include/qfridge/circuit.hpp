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

#include <Eigen/Dense>

#include "qfridge/model.hpp"

namespace qfridge {

// Raw Josephson parameters of one flux-biased phase qubit. phi_ext is the
// external flux in units of the reduced flux quantum (radians of the phase
// coordinate).
struct CircuitQubitParams {
  double c_ff = 0.0;     // junction capacitance, fF
  double ej_ghz = 0.0;   // Josephson energy E_J / h
  double l_nh = 0.0;     // loop self-inductance, nH
  double phi_ext = 0.0;  // external flux bias / reduced flux quantum
};

struct CircuitParams {
  std::array<CircuitQubitParams, 3> qubits;
  double l_m_nh = 0.0;  // self-inductance of each mutual coil
  double m_nh = 0.0;    // mutual inductance between coils
};

// Cubic-well expansion of a qubit potential around its stable point:
//   H = p^2/(2 m) + m omega^2 x^2 / 2 - lambda x^3,  x = phi - phi_sta.
// The inverse mass 1/m (in GHz, dimensionless phase coordinate) comes from
// the capacitance alone.
struct CubicWellParams {
  double mass_inv_ghz = 0.0;   // 1/m = 4 e^2 / (h C)
  double omega_ghz = 0.0;
  double lambda_ghz = 0.0;     // cubic coefficient, GHz per phase^3
  double phi_sta = 0.0;
  double barrier_ghz = 0.0;    // cubic-model barrier height U''^3 / (54 lambda^2)
  double bound_levels = 0.0;   // barrier / omega estimate
};

// Lowest levels and position matrix elements of the cubic well in its own
// eigenbasis. With anharmonicity the diagonal elements <n|x|n> are nonzero;
// they are what opens the second-order three-body exchange channel.
struct AnharmonicQubit {
  std::vector<double> levels_ghz;   // lowest 4, absolute (zero-point included)
  Eigen::MatrixXd x_elements;       // 4x4, eigenbasis of the well
  double anharmonic_ratio = 0.0;    // E_10 / omega
  double omega_ghz = 0.0;
  int n_basis_used = 0;
};

struct EffectiveCouplingOptions {
  double resonance_tol_rel = 1e-3;    // dressed-gap resonance precondition
  double degeneracy_floor_rel = 1e-6; // of the mean well frequency
};

struct BathSpec {
  double gamma_ghz = 0.0;
  double temp_mk = 0.0;
};

struct AssembleOptions {
  int n_basis = 32;
  EffectiveCouplingOptions coupling;
};

// Full derivation record: everything the `circuit` report needs, plus the
// ready-to-use dressed model.
struct AssembledModel {
  RefrigeratorModel model;
  std::array<CubicWellParams, 3> wells;
  std::array<AnharmonicQubit, 3> spectra;
  double coupling_k_ghz = 0.0;     // inductive coupling prefactor K
  double g_ghz = 0.0;              // bilinear coupling in x coordinates, -K
  double g_tilde_signed_ghz = 0.0; // raw second-order amplitude before the
                                   // basis rephasing that makes it >= 0
  double e2_nudge_ghz = 0.0;       // E2 shift applied to enforce resonance
  std::vector<std::string> warnings;
};

// K = Phi~_0^2 (L_M + M) / ((L_M + 2M)(L_M - M)) in GHz with inductances in
// nH. Errors when the denominator is non-positive or the L_M -> M pole is
// closer than 1e-6 relative.
double coupling_coefficient(double l_m_nh, double m_nh);

// Locates the stable point of
//   U(phi) = -E_J cos(phi) + (E_L/2)(phi - phi_ext)^2 + (K/2) phi^2
// nearest the bias, expands to third order and checks that the cubic well
// holds at least 3 bound levels.
CubicWellParams find_working_point(const CircuitParams& circuit, int site);

// Diagonalizes H = omega (a^dag a + 1/2) - lambda x^3 in a number basis,
// doubling n_basis until E_10 is stable to 1e-8 relative (cap 200). States
// that spill over the cubic barrier are excluded by their <x>.
AnharmonicQubit anharmonic_spectrum(const CubicWellParams& well, int n_basis);

// Second-order effective Hamiltonian on the computational states:
// g~ is the |010><101| amplitude, the D coefficients reproduce the 8
// diagonal shifts exactly. The returned g_tilde_ghz carries the raw sign;
// only its magnitude is physical (basis rephasing).
CouplingSpec effective_coupling(const std::array<AnharmonicQubit, 3>& qubits,
                                double g_ghz,
                                const EffectiveCouplingOptions& options = {});

AssembledModel assemble_model(const CircuitParams& circuit,
                              const std::array<BathSpec, 3>& baths,
                              const AssembleOptions& options = {});

}  // namespace qfridge
