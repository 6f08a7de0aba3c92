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
#include <vector>

#include "qfridge/linalg.hpp"
#include "qfridge/model.hpp"

namespace qfridge {

// Generator of the master equation
//   d rho / dt = -i [H_eff, rho]
//     + sum_a Gamma_a (N_a + 1) (2 a rho a^dag - {a^dag a, rho})
//     + sum_a Gamma_a  N_a      (2 a^dag rho a - {a a^dag, rho}).
//
// `matrix` is the 64x64 superoperator acting on column-major vec(rho),
// assembled with the identity vec(A rho B) = (B^T kron A) vec(rho).
// `apply` evaluates the same generator directly in matrix form; the two
// routes agree entrywise (tested to 1e-12) and apply() is what the
// integrator uses, being an order of magnitude cheaper at 8x8.
struct Liouvillian {
  Matrix matrix;  // 64x64
  Matrix h_eff;   // 8x8
  std::array<Matrix, 3> lower;      // a_alpha embedded
  std::array<Matrix, 3> raise;      // a_alpha^dag embedded
  std::array<double, 3> rate_down;  // Gamma_alpha (N_alpha + 1)
  std::array<double, 3> rate_up;    // Gamma_alpha N_alpha
  // Precomputed pieces for the fast matrix-form evaluation: jumps scaled by
  // sqrt(2 rate) and the diagonal of the summed anticommutator term.
  std::array<Matrix, 6> scaled_jumps;
  Eigen::VectorXd damping_diag;

  Matrix apply(const Matrix& rho) const;
  // Only the site-th dissipator (site in 1..3), no Hamiltonian part.
  Matrix apply_dissipator(const Matrix& rho, int site) const;
  // max_i sum_j |L_ij|, the step-size control scale for the integrator.
  double max_row_sum_norm() const;
};

Liouvillian build_liouvillian(const RefrigeratorModel& model);

struct TrajectoryPoint {
  double time_inv_ghz = 0.0;
  std::array<double, 3> populations{};
  double trace_deviation = 0.0;
  double min_eigenvalue = 0.0;
};

struct EvolutionResult {
  Matrix final_state;
  std::vector<TrajectoryPoint> samples;
  bool converged = false;               // trace distance below tolerance
  double distance_to_steady = 0.0;      // vs the nullspace steady state
};

struct EvolveOptions {
  double t_final_inv_ghz = 0.0;
  double dt_inv_ghz = 0.0;      // <= 0: auto, 0.05 / max_row_sum_norm
  int sample_stride = 0;        // <= 0: auto, about 1000 samples
  double convergence_tol = 1e-6;
};

// Fixed-step RK4 with re-Hermitization rho <- (rho + rho^dag)/2 after every
// step. Requires dt <= 0.1 / max_row_sum_norm; aborts with NumericalError if
// the trace drifts by more than 1e-6 mid-run. Deterministic given
// (dt, stride). The convergence metric compares against steady_reference
// when given, otherwise against the nullspace steady state.
EvolutionResult evolve(const Liouvillian& liou, const Matrix& rho0,
                       const EvolveOptions& options,
                       const Matrix* steady_reference = nullptr);

// Steady state as the nullspace of the superoperator: right singular vector
// of the smallest singular value, reshaped, Hermitized and trace-normalized.
// Throws RegimeError if the nullspace is degenerate (second singular value
// below 1e-10 relative) and NumericalError if the result fails the
// density-matrix invariants.
Matrix steady_state_nullspace(const Liouvillian& liou);

struct Observables {
  std::array<double, 3> populations{};   // <n_alpha>
  std::array<double, 3> pair_moments{};  // <n1 n2>, <n1 n3>, <n2 n3>
  double triple_moment = 0.0;            // <n1 n2 n3>
  double current_j = 0.0;                // J = i<Dv>, real by construction
};

// <Dv> = g~ <a1 a2^dag a3> - h.c. is purely imaginary; J = i <Dv> is the
// real number whose sign decides cooling (J < 0).
Observables numeric_observables(const RefrigeratorModel& model, const Matrix& rho);

// Q_alpha = E_alpha Tr[n_alpha D_alpha rho], power in GHz^2.
double heat_current_numeric(const RefrigeratorModel& model,
                            const Liouvillian& liou, const Matrix& rho,
                            int site);

}  // namespace qfridge
