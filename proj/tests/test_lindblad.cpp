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
#include <random>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "qfridge/errors.hpp"
#include "qfridge/lindblad.hpp"
#include "qfridge/model.hpp"
#include "test_helpers.hpp"

using namespace qfridge;

namespace {

Matrix random_density(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m(i, j) = Complex(u(rng), u(rng));
  Matrix rho = m * m.adjoint();
  rho /= rho.trace();
  return rho;
}

Matrix gibbs_product(const RefrigeratorModel& model) {
  Matrix rho = Matrix::Zero(1, 1);
  rho(0, 0) = 1.0;
  for (int s = 0; s < 3; ++s) {
    const double p = bare_population(model.bose_n[s]);
    Matrix q = Matrix::Zero(2, 2);
    q(0, 0) = 1.0 - p;
    q(1, 1) = p;
    rho = kron(rho, q);
  }
  return rho;
}

RefrigeratorModel equal_temperature_model(double g_tilde) {
  std::array<QubitSpec, 3> qubits = {QubitSpec{2.0, 1e-3, 200.0},
                                     QubitSpec{12.0, 2e-3, 200.0},
                                     QubitSpec{10.0, 5e-4, 200.0}};
  CouplingSpec c;
  c.g_tilde_ghz = g_tilde;
  return build_model(qubits, c);
}

}  // namespace

TEST_CASE("the trace functional annihilates the superoperator") {
  std::mt19937_64 rng(301);
  for (int trial = 0; trial < 10; ++trial) {
    const RefrigeratorModel m = testing::random_model(rng);
    const Liouvillian liou = build_liouvillian(m);
    // Tr(rho) = vec(I)^T vec(rho), so vec(I)^T L must vanish.
    const Vector tr_vec = vectorize(Matrix::Identity(8, 8));
    const Vector left = liou.matrix.transpose() * tr_vec;
    CHECK(left.cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("matrix-form evaluation matches the vectorized superoperator") {
  std::mt19937_64 rng(302);
  for (int trial = 0; trial < 10; ++trial) {
    const RefrigeratorModel m = testing::random_model(rng);
    const Liouvillian liou = build_liouvillian(m);
    const Matrix rho = random_density(rng);
    const Matrix via_kron = unvectorize(liou.matrix * vectorize(rho), 8, 8);
    const Matrix direct = liou.apply(rho);
    CHECK(approx_equal(via_kron, direct, 1e-12));
  }
}

TEST_CASE("decoupled qubits relax at rate 2 Gamma (2N+1) toward N/(2N+1)") {
  RefrigeratorModel m = testing::canonical_model();
  m.coupling = CouplingSpec{};  // g~ = 0, D = 0
  const Liouvillian liou = build_liouvillian(m);
  std::mt19937_64 rng(303);
  const Matrix rho = random_density(rng);
  for (int s = 0; s < 3; ++s) {
    const Matrix nop = embed_single(number_op(), s + 1);
    const double n_mean = (rho * nop).trace().real();
    const double n_dot = (nop * liou.apply(rho)).trace().real();
    const double gamma = m.qubits[s].gamma_ghz;
    const double big_n = m.bose_n[s];
    const double expect = -2.0 * gamma * (2.0 * big_n + 1.0) * n_mean +
                          2.0 * gamma * big_n;
    CHECK(n_dot == doctest::Approx(expect).epsilon(1e-12));
  }
  // the product of bare Gibbs states is the fixed point
  CHECK(liou.apply(gibbs_product(m)).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("equal temperatures with g~ = 0: the Gibbs product is stationary") {
  RefrigeratorModel m = equal_temperature_model(0.0);
  const Liouvillian liou = build_liouvillian(m);
  CHECK(liou.apply(gibbs_product(m)).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("evolve keeps a null generator constant") {
  Liouvillian null_gen;
  null_gen.matrix = Matrix::Zero(64, 64);
  null_gen.h_eff = Matrix::Zero(8, 8);
  for (int s = 0; s < 3; ++s) {
    null_gen.lower[s] = embed_single(lowering_op(), s + 1);
    null_gen.raise[s] = embed_single(raising_op(), s + 1);
    null_gen.rate_down[s] = 0.0;
    null_gen.rate_up[s] = 0.0;
  }
  for (auto& j : null_gen.scaled_jumps) j = Matrix::Zero(8, 8);
  null_gen.damping_diag = Eigen::VectorXd::Zero(8);

  std::mt19937_64 rng(304);
  const Matrix rho0 = random_density(rng);
  EvolveOptions opts;
  opts.t_final_inv_ghz = 10.0;
  opts.dt_inv_ghz = 0.1;
  const EvolutionResult res = evolve(null_gen, rho0, opts, &rho0);
  CHECK(approx_equal(res.final_state, rho0, 1e-13));
  CHECK(res.converged);
}

TEST_CASE("evolve rejects an oversized step") {
  const RefrigeratorModel m = testing::canonical_model();
  const Liouvillian liou = build_liouvillian(m);
  EvolveOptions opts;
  opts.t_final_inv_ghz = 10.0;
  opts.dt_inv_ghz = 1.0 / liou.max_row_sum_norm();  // 10x the allowed bound
  CHECK_THROWS_AS(evolve(liou, gibbs_product(m), opts), ConfigError);
}

TEST_CASE("decoupled populations decay monotonically from |111>") {
  RefrigeratorModel m = testing::canonical_model();
  m.coupling = CouplingSpec{};
  const Liouvillian liou = build_liouvillian(m);
  Matrix rho0 = Matrix::Zero(8, 8);
  rho0(7, 7) = 1.0;
  EvolveOptions opts;
  opts.t_final_inv_ghz = 3.0 / m.qubits[0].gamma_ghz;
  opts.sample_stride = 50;
  const EvolutionResult res = evolve(liou, rho0, opts);
  for (int s = 0; s < 3; ++s) {
    const double fixed_point = bare_population(m.bose_n[s]);
    double prev = 1.0;
    for (const TrajectoryPoint& pt : res.samples) {
      CHECK(pt.populations[s] <= prev + 1e-12);
      CHECK(pt.populations[s] >= fixed_point - 1e-9);
      prev = pt.populations[s];
    }
  }
}

TEST_CASE("canonical evolution reaches the nullspace steady state") {
  const RefrigeratorModel m = testing::canonical_model();
  const Liouvillian liou = build_liouvillian(m);
  Matrix rho0 = Matrix::Zero(8, 8);
  rho0(0, 0) = 1.0;  // |000><000|
  EvolveOptions opts;
  opts.t_final_inv_ghz = 20.0 / 1e-3;
  const EvolutionResult res = evolve(liou, rho0, opts);
  CHECK(res.converged);
  CHECK(res.distance_to_steady <= 1e-6);
  for (const TrajectoryPoint& pt : res.samples) {
    CHECK(pt.trace_deviation <= 1e-9);
    CHECK(pt.min_eigenvalue >= -1e-9);
  }
}

TEST_CASE("nullspace steady state: decoupled gives the Gibbs product") {
  RefrigeratorModel m = testing::canonical_model();
  m.coupling = CouplingSpec{};
  const Liouvillian liou = build_liouvillian(m);
  const Matrix rho = steady_state_nullspace(liou);
  CHECK(approx_equal(rho, gibbs_product(m), 1e-12));
  // moments factorize on the product state
  const Observables obs = numeric_observables(m, rho);
  CHECK(obs.pair_moments[0] ==
        doctest::Approx(obs.populations[0] * obs.populations[1]).epsilon(1e-10));
  CHECK(obs.pair_moments[1] ==
        doctest::Approx(obs.populations[0] * obs.populations[2]).epsilon(1e-10));
  CHECK(obs.pair_moments[2] ==
        doctest::Approx(obs.populations[1] * obs.populations[2]).epsilon(1e-10));
  CHECK(obs.triple_moment ==
        doctest::Approx(obs.populations[0] * obs.populations[1] *
                        obs.populations[2]).epsilon(1e-10));
}

TEST_CASE("nullspace steady state: equal temperatures keep bare Gibbs") {
  const RefrigeratorModel m = equal_temperature_model(0.02);
  const Liouvillian liou = build_liouvillian(m);
  const Matrix rho = steady_state_nullspace(liou);
  const Observables obs = numeric_observables(m, rho);
  for (int s = 0; s < 3; ++s) {
    CHECK(std::abs(obs.populations[s] - bare_population(m.bose_n[s])) <= 1e-10);
  }
  CHECK(std::abs(obs.current_j) <= 1e-10);
}

TEST_CASE("a degenerate steady manifold is detected and refused") {
  // Freeze qubit 1 (no dissipator, no exchange): any mixture of its two
  // levels is stationary, so the nullspace is two-dimensional.
  RefrigeratorModel m = testing::canonical_model();
  m.coupling = CouplingSpec{};
  Liouvillian liou = build_liouvillian(m);
  liou.rate_down[0] = liou.rate_up[0] = 0.0;
  liou.scaled_jumps[0] = Matrix::Zero(8, 8);
  liou.scaled_jumps[1] = Matrix::Zero(8, 8);
  const Matrix id = Matrix::Identity(kHilbertDim, kHilbertDim);
  Matrix sup = Matrix::Zero(kLiouvilleDim, kLiouvilleDim);
  for (int s = 1; s < 3; ++s) {
    for (const bool up : {false, true}) {
      const Matrix jump = up ? liou.raise[s] : liou.lower[s];
      const double rate = up ? liou.rate_up[s] : liou.rate_down[s];
      const Matrix jd = jump.adjoint();
      const Matrix jdj = jd * jump;
      sup += rate * (2.0 * kron(jd.transpose(), jump) - kron(id, jdj) -
                     kron(jdj.transpose(), id));
    }
  }
  liou.matrix = sup;
  CHECK_THROWS_AS(steady_state_nullspace(liou), RegimeError);
}

TEST_CASE("canonical steady state cools the target qubit") {
  const RefrigeratorModel m = testing::canonical_model();
  const Liouvillian liou = build_liouvillian(m);
  const Matrix rho = steady_state_nullspace(liou);
  const Observables obs = numeric_observables(m, rho);
  CHECK(obs.populations[0] < bare_population(m.bose_n[0]));
  // frozen from the nullspace oracle itself (regression anchor)
  CHECK(obs.populations[0] == doctest::Approx(0.124630924755).epsilon(1e-9));
  CHECK(obs.current_j == doctest::Approx(-8.7722898418e-06).epsilon(1e-9));
  CHECK(obs.current_j < 0.0);
}

TEST_CASE("numeric current vanishes without exchange coupling") {
  RefrigeratorModel m = testing::canonical_model();
  m.coupling.g_tilde_ghz = 0.0;
  const Liouvillian liou = build_liouvillian(m);
  const Matrix rho = steady_state_nullspace(liou);
  CHECK(numeric_observables(m, rho).current_j == 0.0);
}

TEST_CASE("heat currents: equilibrium null, first law, cooling signs") {
  const RefrigeratorModel eq = equal_temperature_model(0.02);
  const Liouvillian liou_eq = build_liouvillian(eq);
  const Matrix rho_eq = steady_state_nullspace(liou_eq);
  for (int s = 1; s <= 3; ++s) {
    CHECK(std::abs(heat_current_numeric(eq, liou_eq, rho_eq, s)) <= 1e-12);
  }

  const RefrigeratorModel m = testing::canonical_model();
  const Liouvillian liou = build_liouvillian(m);
  const Matrix rho = steady_state_nullspace(liou);
  const double q1 = heat_current_numeric(m, liou, rho, 1);
  const double q2 = heat_current_numeric(m, liou, rho, 2);
  const double q3 = heat_current_numeric(m, liou, rho, 3);
  const double qmax = std::max({std::abs(q1), std::abs(q2), std::abs(q3)});
  CHECK(std::abs(q1 + q2 + q3) <= 1e-12 * qmax);
  CHECK(q1 > 0.0);
  CHECK(q2 < 0.0);
  CHECK(q3 > 0.0);
}

TEST_CASE("numeric heat currents equal (-1)^alpha J E_alpha") {
  std::mt19937_64 rng(305);
  for (int trial = 0; trial < 20; ++trial) {
    const RefrigeratorModel m = testing::random_model(rng);
    const Liouvillian liou = build_liouvillian(m);
    const Matrix rho = steady_state_nullspace(liou);
    const double j = numeric_observables(m, rho).current_j;
    for (int alpha = 1; alpha <= 3; ++alpha) {
      const double q = heat_current_numeric(m, liou, rho, alpha);
      const double closed = (alpha % 2 == 0 ? 1.0 : -1.0) * j *
                            m.qubits[alpha - 1].energy_ghz;
      CHECK(q == doctest::Approx(closed).epsilon(1e-9));
    }
  }
}

TEST_CASE("nonzero Liouvillian spectrum has negative real parts") {
  std::mt19937_64 rng(306);
  for (int trial = 0; trial < 5; ++trial) {
    const RefrigeratorModel m = testing::random_model(rng);
    const Liouvillian liou = build_liouvillian(m);
    Eigen::ComplexEigenSolver<Matrix> solver(liou.matrix);
    const Vector evals = solver.eigenvalues();
    const double scale = evals.cwiseAbs().maxCoeff();
    int near_zero = 0;
    for (int i = 0; i < evals.size(); ++i) {
      if (std::abs(evals(i)) <= 1e-12 * scale) {
        ++near_zero;
      } else {
        CHECK(evals(i).real() < 0.0);
      }
    }
    CHECK(near_zero == 1);
  }
}

TEST_CASE("trajectories from random initial states stay physical") {
  std::mt19937_64 rng(308);
  const RefrigeratorModel m = testing::canonical_model();
  const Liouvillian liou = build_liouvillian(m);
  const Matrix steady = steady_state_nullspace(liou);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix rho0 = random_density(rng);
    EvolveOptions opts;
    opts.t_final_inv_ghz = 2000.0;
    opts.sample_stride = 20;
    const EvolutionResult res = evolve(liou, rho0, opts, &steady);
    for (const TrajectoryPoint& pt : res.samples) {
      CHECK(pt.trace_deviation <= 1e-9);
      CHECK(pt.min_eigenvalue >= -1e-9);
      for (double n : pt.populations) {
        CHECK(n >= -1e-9);
        CHECK(n <= 1.0 + 1e-9);
      }
    }
  }
}

TEST_CASE("long-time evolution agrees with the nullspace for random draws") {
  std::mt19937_64 rng(307);
  testing::DrawOptions opts;
  opts.gamma_lo = 2e-3;  // keeps 20/min(Gamma) integrations affordable
  for (int trial = 0; trial < 50; ++trial) {
    const RefrigeratorModel m = testing::random_model(rng, opts);
    const Liouvillian liou = build_liouvillian(m);
    const Matrix steady = steady_state_nullspace(liou);
    double gamma_min = 1.0;
    for (const QubitSpec& q : m.qubits) gamma_min = std::min(gamma_min, q.gamma_ghz);
    Matrix rho0 = Matrix::Zero(8, 8);
    rho0(0, 0) = 1.0;
    EvolveOptions eopts;
    eopts.t_final_inv_ghz = 20.0 / gamma_min;
    eopts.sample_stride = 1 << 30;  // endpoints only
    const EvolutionResult res = evolve(liou, rho0, eopts, &steady);
    CHECK(res.distance_to_steady <= 1e-6);
  }
}
