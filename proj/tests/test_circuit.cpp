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

#include <cmath>

#include "circuit_fixture.hpp"
#include "doctest.h"
#include "qfridge/analytic.hpp"
#include "qfridge/circuit.hpp"
#include "qfridge/constants.hpp"
#include "qfridge/errors.hpp"

using namespace qfridge;

namespace {

// Second-order perturbation sum for the cubic well, coded directly from the
// ladder matrix elements of x^3. Independent of the diagonalizer.
double pt2_level_shift(double omega, double lambda, double inv_mass, int n) {
  const double x0c = std::sqrt(inv_mass / (2.0 * omega));
  const double c = lambda * x0c * x0c * x0c;  // |<m|(-lambda x^3)|n>| scale
  auto sq = [](double v) { return v * v; };
  double shift = 0.0;
  shift += sq(c * std::sqrt((n + 1.0) * (n + 2.0) * (n + 3.0))) / (-3.0 * omega);
  shift += sq(c * 3.0 * std::pow(n + 1.0, 1.5)) / (-1.0 * omega);
  if (n >= 1) shift += sq(c * 3.0 * std::pow(n, 1.5)) / (1.0 * omega);
  if (n >= 3) shift += sq(c * std::sqrt(n * (n - 1.0) * (n - 2.0))) / (3.0 * omega);
  return shift;
}

CubicWellParams make_well(double omega, double lambda, double inv_mass) {
  CubicWellParams w;
  w.omega_ghz = omega;
  w.lambda_ghz = lambda;
  w.mass_inv_ghz = inv_mass;
  if (lambda != 0.0) {
    const double curv = omega * omega / inv_mass;
    w.barrier_ghz = curv * curv * curv / (54.0 * lambda * lambda);
    w.bound_levels = w.barrier_ghz / omega;
  }
  return w;
}

// Harmonic AnharmonicQubit assembled by hand (exact ladder elements).
AnharmonicQubit harmonic_qubit(double omega, double inv_mass) {
  AnharmonicQubit q;
  q.omega_ghz = omega;
  q.anharmonic_ratio = 1.0;
  q.levels_ghz = {0.5 * omega, 1.5 * omega, 2.5 * omega, 3.5 * omega};
  q.x_elements = Eigen::MatrixXd::Zero(4, 4);
  const double x0c = std::sqrt(inv_mass / (2.0 * omega));
  for (int n = 0; n < 3; ++n) {
    q.x_elements(n, n + 1) = q.x_elements(n + 1, n) = x0c * std::sqrt(n + 1.0);
  }
  q.n_basis_used = 4;
  return q;
}

}  // namespace

TEST_CASE("coupling coefficient follows the printed prefactor") {
  // L_M = 2, M = 1: (L_M+M)/((L_M+2M)(L_M-M)) = 3/4 per nH
  CHECK(coupling_coefficient(2.0, 1.0) ==
        doctest::Approx(0.75 * kReducedFluxQuantumSqGHzNH).epsilon(1e-15));
  // single scalar, symmetric under any qubit relabeling by construction
  CHECK_THROWS_AS(coupling_coefficient(1.0, 1.0), ConfigError);        // pole
  CHECK_THROWS_AS(coupling_coefficient(1.0, 1.0 - 1e-9), ConfigError); // near-pole
  CHECK_THROWS_AS(coupling_coefficient(1.0, -0.1), ConfigError);
  CHECK(coupling_coefficient(1.0, 0.0) ==
        doctest::Approx(kReducedFluxQuantumSqGHzNH).epsilon(1e-15));  // M=0 does not vanish
}

TEST_CASE("working point: E_J = 0 gives the pure quadratic well") {
  CircuitParams c = testing::canonical_circuit();
  c.qubits[0].ej_ghz = 0.0;
  c.qubits[0].phi_ext = 0.7;
  const CubicWellParams w = find_working_point(c, 1);
  const double el = kReducedFluxQuantumSqGHzNH / c.qubits[0].l_nh;
  const double k = coupling_coefficient(c.l_m_nh, c.m_nh);
  CHECK(w.lambda_ghz == doctest::Approx(0.0));
  CHECK(w.phi_sta == doctest::Approx(el * 0.7 / (el + k)).epsilon(1e-12));
  CHECK(w.omega_ghz ==
        doctest::Approx(std::sqrt((el + k) * w.mass_inv_ghz)).epsilon(1e-12));
}

TEST_CASE("working point: zero bias sits at the symmetry point") {
  CircuitParams c = testing::canonical_circuit();
  c.qubits[1].phi_ext = 0.0;
  const CubicWellParams w = find_working_point(c, 2);
  CHECK(std::abs(w.phi_sta) <= 1e-12);
  CHECK(std::abs(w.lambda_ghz) <= 1e-12);
}

TEST_CASE("working point: too-shallow wells are rejected") {
  CircuitParams c = testing::canonical_circuit();
  // larger junction biased near its critical flux: about 2 bound levels
  c.qubits[2] = {100.0, 137.63, 1.0, 2.979};
  CHECK_THROWS_AS(find_working_point(c, 3), RegimeError);
}

TEST_CASE("canonical working points hold about 4.5 levels") {
  const CircuitParams c = testing::canonical_circuit();
  for (int site = 1; site <= 3; ++site) {
    const CubicWellParams w = find_working_point(c, site);
    CHECK(w.bound_levels == doctest::Approx(4.5).epsilon(0.02));
    CHECK(w.lambda_ghz > 0.0);
  }
}

TEST_CASE("harmonic spectrum is exact at lambda = 0") {
  const CubicWellParams w = make_well(10.0, 0.0, 1.5496);
  const AnharmonicQubit q = anharmonic_spectrum(w, 24);
  for (int n = 0; n < 4; ++n) {
    CHECK(q.levels_ghz[n] == doctest::Approx(10.0 * (n + 0.5)).epsilon(1e-9));
    CHECK(std::abs(q.x_elements(n, n)) <= 1e-12);
  }
  const double x0c = std::sqrt(1.5496 / 20.0);
  for (int n = 0; n < 3; ++n) {
    CHECK(q.x_elements(n, n + 1) ==
          doctest::Approx(x0c * std::sqrt(n + 1.0)).epsilon(1e-9));
  }
  CHECK(q.anharmonic_ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("small-lambda spectrum matches second-order perturbation theory") {
  const double omega = 10.0, inv_mass = 1.5496;
  const double x0_sq = inv_mass / omega;  // hbar/(m omega) convention
  for (double lambda : {0.5, 1.0}) {
    const double correction = 7.5 * lambda * lambda * x0_sq * x0_sq * x0_sq / omega;
    REQUIRE(correction <= 1e-3 * omega);
    // closed form and explicit ladder sum must agree with each other
    const double e10_sum = omega + pt2_level_shift(omega, lambda, inv_mass, 1) -
                           pt2_level_shift(omega, lambda, inv_mass, 0);
    CHECK(e10_sum == doctest::Approx(omega - correction).epsilon(1e-12));
    const AnharmonicQubit q = anharmonic_spectrum(make_well(omega, lambda, inv_mass), 24);
    const double e10 = q.levels_ghz[1] - q.levels_ghz[0];
    CHECK(e10 == doctest::Approx(omega - correction).epsilon(1e-4));
  }
}

TEST_CASE("diagonal x elements scale linearly in lambda") {
  const double omega = 10.0, inv_mass = 1.5496;
  const AnharmonicQubit qa = anharmonic_spectrum(make_well(omega, 0.1, inv_mass), 24);
  const AnharmonicQubit qb = anharmonic_spectrum(make_well(omega, 1.0, inv_mass), 24);
  for (int n = 0; n < 2; ++n) {
    const double ratio = qb.x_elements(n, n) / qa.x_elements(n, n);
    CHECK(ratio == doctest::Approx(10.0).epsilon(0.02));
  }
}

TEST_CASE("anharmonic spectrum rejects bad input and hopeless wells") {
  CHECK_THROWS_AS(anharmonic_spectrum(make_well(10.0, 0.0, 1.5), 10), ConfigError);
  // about one bound level: no stable E_10 at any basis size
  const double curv = 100.0 / 1.5;
  const double lambda = std::sqrt(curv * curv * curv / (54.0 * 1.0 * 10.0));
  CHECK_THROWS_AS(anharmonic_spectrum(make_well(10.0, lambda, 1.5), 24), RegimeError);
}

TEST_CASE("effective coupling vanishes for g = 0 and for harmonic wells") {
  const CircuitParams c = testing::canonical_circuit();
  std::array<AnharmonicQubit, 3> qs;
  for (int s = 1; s <= 3; ++s) {
    qs[s - 1] = anharmonic_spectrum(find_working_point(c, s), 32);
  }
  const CouplingSpec zero = effective_coupling(qs, 0.0);
  CHECK(zero.g_tilde_ghz == 0.0);
  CHECK(zero.d1_ghz == 0.0);
  CHECK(zero.d123_ghz == 0.0);

  // harmonic wells with the resonance intact: the exchange path needs the
  // anharmonic diagonal x elements and closes exactly
  std::array<AnharmonicQubit, 3> hq = {harmonic_qubit(4.137, 1.2),
                                       harmonic_qubit(10.551, 0.8),
                                       harmonic_qubit(6.414, 1.5)};
  const CouplingSpec harm = effective_coupling(hq, -0.5);
  CHECK(harm.g_tilde_ghz == 0.0);
}

TEST_CASE("effective coupling is quadratic in g") {
  const CircuitParams c = testing::canonical_circuit();
  std::array<AnharmonicQubit, 3> qs;
  for (int s = 1; s <= 3; ++s) {
    qs[s - 1] = anharmonic_spectrum(find_working_point(c, s), 32);
  }
  const double g = -coupling_coefficient(c.l_m_nh, c.m_nh) / 10.0;
  const double gt1 = effective_coupling(qs, g).g_tilde_ghz;
  const double gt2 = effective_coupling(qs, 2.0 * g).g_tilde_ghz;
  CHECK(gt2 / (4.0 * gt1) == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("two-state block is symmetric: both summation directions agree") {
  const CircuitParams c = testing::canonical_circuit();
  std::array<AnharmonicQubit, 3> qs;
  for (int s = 1; s <= 3; ++s) {
    qs[s - 1] = anharmonic_spectrum(find_working_point(c, s), 32);
  }
  const double g = -coupling_coefficient(c.l_m_nh, c.m_nh);
  const double gt = effective_coupling(qs, g).g_tilde_ghz;

  // independent evaluation: assemble V elementwise on the fly and run the
  // sum in the reversed direction <101| ... |010>
  auto x = [&](int q, int i, int j) { return qs[q].x_elements(i, j); };
  auto energy = [&](int i1, int i2, int i3) {
    return qs[0].levels_ghz[i1] + qs[1].levels_ghz[i2] + qs[2].levels_ghz[i3];
  };
  auto v = [&](int i1, int i2, int i3, int j1, int j2, int j3) {
    double val = 0.0;
    if (i3 == j3) val += x(0, i1, j1) * x(1, i2, j2);
    if (i2 == j2) val += x(0, i1, j1) * x(2, i3, j3);
    if (i1 == j1) val += x(1, i2, j2) * x(2, i3, j3);
    return g * val;
  };
  const double e_pair = 0.5 * (energy(0, 1, 0) + energy(1, 0, 1));
  double reversed = 0.0;
  for (int k1 = 0; k1 < 4; ++k1)
    for (int k2 = 0; k2 < 4; ++k2)
      for (int k3 = 0; k3 < 4; ++k3) {
        const bool is010 = (k1 == 0 && k2 == 1 && k3 == 0);
        const bool is101 = (k1 == 1 && k2 == 0 && k3 == 1);
        if (is010 || is101) continue;
        reversed += v(1, 0, 1, k1, k2, k3) * v(k1, k2, k3, 0, 1, 0) /
                    (e_pair - energy(k1, k2, k3));
      }
  CHECK(std::abs(reversed - gt) <= 1e-12 * std::max(1.0, std::abs(gt)));
}

TEST_CASE("accidental degeneracy with a coupled state is an error") {
  // qubits 1 and 3 identical: |100> and |001> are degenerate and exchange
  // excitation through x1 x3, so the shift sums must refuse
  const CircuitParams c = testing::canonical_circuit();
  const CubicWellParams w1 = find_working_point(c, 1);
  const AnharmonicQubit q1 = anharmonic_spectrum(w1, 32);
  const double gap1 = q1.levels_ghz[1] - q1.levels_ghz[0];
  // middle qubit harmonic at twice the gap keeps E2 = E1 + E3 resonance
  std::array<AnharmonicQubit, 3> qs = {q1, harmonic_qubit(2.0 * gap1, 1.0), q1};
  CHECK_THROWS_AS(effective_coupling(qs, -0.3), RegimeError);
}

TEST_CASE("assemble_model rejects three identical qubits") {
  CircuitParams c = testing::canonical_circuit();
  c.qubits[1] = c.qubits[0];
  c.qubits[2] = c.qubits[0];
  CHECK_THROWS_AS(assemble_model(c, testing::canonical_baths()), RegimeError);
}

TEST_CASE("harmonic circuit assembles into a current-free model") {
  CircuitParams c;
  const double k = coupling_coefficient(150.0, 6.0);
  c.l_m_nh = 150.0;
  c.m_nh = 6.0;
  // E_J = 0 wells with incommensurate-looking frequencies on resonance
  const double el = kReducedFluxQuantumSqGHzNH;  // L = 1 nH
  const std::array<double, 3> omegas = {4.137, 4.137 + 6.414, 6.414};
  for (int s = 0; s < 3; ++s) {
    c.qubits[s].ej_ghz = 0.0;
    c.qubits[s].l_nh = 1.0;
    c.qubits[s].phi_ext = 0.0;
    c.qubits[s].c_ff = kInverseMassScaleGHzfF * (el + k) / (omegas[s] * omegas[s]);
  }
  const AssembledModel am = assemble_model(c, testing::canonical_baths());
  CHECK(am.model.coupling.g_tilde_ghz == 0.0);
  CHECK(current_j(am.model) == 0.0);
  for (int s = 0; s < 3; ++s) {
    CHECK(am.model.qubits[s].energy_ghz == doctest::Approx(omegas[s]).epsilon(1e-9));
  }
}

TEST_CASE("canonical circuit assembles into a valid cooling model") {
  const AssembledModel am =
      assemble_model(testing::canonical_circuit(), testing::canonical_baths());
  // E3 near 10 GHz, anharmonic ratios in the phase-qubit window
  CHECK(am.model.qubits[2].energy_ghz > 9.5);
  CHECK(am.model.qubits[2].energy_ghz < 10.7);
  for (int s = 0; s < 3; ++s) {
    CHECK(am.spectra[s].anharmonic_ratio > 0.93);
    CHECK(am.spectra[s].anharmonic_ratio < 0.97);
  }
  // resonance nudge is tiny and recorded
  CHECK(std::abs(am.e2_nudge_ghz) < 1e-3 * am.model.qubits[1].energy_ghz);
  CHECK(am.model.coupling.g_tilde_ghz > 0.0);
  CHECK(am.g_tilde_signed_ghz != 0.0);
  // the derived model actually cools
  CHECK(current_j(am.model) < 0.0);
}

TEST_CASE("spectra are stable under basis doubling at the working point") {
  const CircuitParams c = testing::canonical_circuit();
  const CubicWellParams w = find_working_point(c, 3);
  const AnharmonicQubit a = anharmonic_spectrum(w, 24);
  const AnharmonicQubit b = anharmonic_spectrum(w, 2 * a.n_basis_used);
  const double e10a = a.levels_ghz[1] - a.levels_ghz[0];
  const double e10b = b.levels_ghz[1] - b.levels_ghz[0];
  CHECK(std::abs(e10b - e10a) <= 1e-8 * e10a);
  // qubit-subspace x elements share that stability
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CHECK(a.x_elements(i, j) ==
            doctest::Approx(b.x_elements(i, j)).epsilon(1e-7));
    }
  }
}
