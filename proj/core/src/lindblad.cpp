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

#include "qfridge/lindblad.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qfridge/errors.hpp"

namespace qfridge {

namespace {

constexpr Complex kImag(0.0, 1.0);

Matrix dissipator_matrix(const Matrix& rho, const Matrix& jump, double rate) {
  // rate * (2 J rho J^dag - {J^dag J, rho})
  const Matrix jd = jump.adjoint();
  const Matrix jdj = jd * jump;
  return rate * (2.0 * jump * rho * jd - jdj * rho - rho * jdj);
}

}  // namespace

Matrix Liouvillian::apply(const Matrix& rho) const {
  Matrix out = -kImag * (h_eff * rho - rho * h_eff);
  out -= damping_diag.asDiagonal() * rho;
  out -= rho * damping_diag.asDiagonal();
  for (const Matrix& j : scaled_jumps) {
    out.noalias() += j * rho * j.adjoint();
  }
  return out;
}

Matrix Liouvillian::apply_dissipator(const Matrix& rho, int site) const {
  if (site < 1 || site > 3) throw ConfigError("dissipator site must be 1..3");
  return dissipator_matrix(rho, lower[site - 1], rate_down[site - 1]) +
         dissipator_matrix(rho, raise[site - 1], rate_up[site - 1]);
}

double Liouvillian::max_row_sum_norm() const {
  return matrix.cwiseAbs().rowwise().sum().maxCoeff();
}

Liouvillian build_liouvillian(const RefrigeratorModel& model) {
  Liouvillian liou;
  liou.h_eff = build_h_eff(model);
  liou.damping_diag = Eigen::VectorXd::Zero(kHilbertDim);
  for (int s = 0; s < 3; ++s) {
    liou.lower[s] = embed_single(lowering_op(), s + 1);
    liou.raise[s] = embed_single(raising_op(), s + 1);
    liou.rate_down[s] = model.qubits[s].gamma_ghz * (model.bose_n[s] + 1.0);
    liou.rate_up[s] = model.qubits[s].gamma_ghz * model.bose_n[s];
    liou.scaled_jumps[2 * s] = std::sqrt(2.0 * liou.rate_down[s]) * liou.lower[s];
    liou.scaled_jumps[2 * s + 1] = std::sqrt(2.0 * liou.rate_up[s]) * liou.raise[s];
    liou.damping_diag +=
        (liou.rate_down[s] * (liou.raise[s] * liou.lower[s]).diagonal().real() +
         liou.rate_up[s] * (liou.lower[s] * liou.raise[s]).diagonal().real());
  }

  const Matrix id = Matrix::Identity(kHilbertDim, kHilbertDim);
  // vec(A rho B) = (B^T kron A) vec(rho), column-major vec.
  auto left = [&](const Matrix& a) { return kron(id, a); };
  auto right = [&](const Matrix& b) { return kron(b.transpose(), id); };
  auto lindblad_term = [&](const Matrix& jump, double rate) -> Matrix {
    const Matrix jd = jump.adjoint();
    const Matrix jdj = jd * jump;
    return rate * (2.0 * kron(jd.transpose(), jump) - left(jdj) - right(jdj));
  };

  Matrix sup = -kImag * (left(liou.h_eff) - right(liou.h_eff));
  for (int s = 0; s < 3; ++s) {
    sup += lindblad_term(liou.lower[s], liou.rate_down[s]);
    sup += lindblad_term(liou.raise[s], liou.rate_up[s]);
  }
  liou.matrix = sup;
  return liou;
}

EvolutionResult evolve(const Liouvillian& liou, const Matrix& rho0,
                       const EvolveOptions& options,
                       const Matrix* steady_reference) {
  if (rho0.rows() != kHilbertDim || rho0.cols() != kHilbertDim) {
    throw ConfigError("evolve: initial state must be 8x8");
  }
  const DensityDiagnostics init = validate_density_matrix(rho0);
  if (!init.valid) {
    throw ConfigError("evolve: initial state is not a valid density matrix");
  }
  if (options.t_final_inv_ghz <= 0.0) {
    throw ConfigError("evolve: t_final must be positive");
  }
  const double norm = liou.max_row_sum_norm();
  double dt = options.dt_inv_ghz;
  if (dt <= 0.0) {
    dt = (norm > 0.0) ? 0.05 / norm : options.t_final_inv_ghz / 100.0;
  } else if (norm > 0.0 && dt > 0.1 / norm) {
    throw ConfigError("evolve: dt exceeds the 0.1 / max_row_sum_norm bound");
  }
  const long nsteps =
      std::max(1L, static_cast<long>(std::ceil(options.t_final_inv_ghz / dt)));
  dt = options.t_final_inv_ghz / static_cast<double>(nsteps);
  long stride = options.sample_stride;
  if (stride <= 0) stride = std::max(1L, nsteps / 1000);

  // Fixed-size, allocation-free right-hand side. H_eff is diagonal plus the
  // single |010><101| exchange pair and every jump is an embedded two-level
  // ladder operator, so the generator reduces to index arithmetic. Verified
  // against the vectorized superoperator by the build_liouvillian tests.
  using Matrix8 = Eigen::Matrix<Complex, kHilbertDim, kHilbertDim>;
  constexpr int i010 = 2, i101 = 5;
  Eigen::Matrix<double, kHilbertDim, 1> h_diag;
  for (int i = 0; i < kHilbertDim; ++i) h_diag(i) = liou.h_eff(i, i).real();
  const double g_exch = liou.h_eff(i010, i101).real();
  {
    Matrix structured = Matrix::Zero(kHilbertDim, kHilbertDim);
    structured.diagonal() = h_diag.cast<Complex>();
    structured(i010, i101) = g_exch;
    structured(i101, i010) = g_exch;
    if ((structured - liou.h_eff).cwiseAbs().maxCoeff() != 0.0) {
      throw NumericalError("evolve: Hamiltonian deviates from the expected structure");
    }
  }
  const Eigen::Matrix<double, kHilbertDim, 1> damping = liou.damping_diag;
  const std::array<double, 3> down2 = {2.0 * liou.rate_down[0],
                                       2.0 * liou.rate_down[1],
                                       2.0 * liou.rate_down[2]};
  const std::array<double, 3> up2 = {2.0 * liou.rate_up[0],
                                     2.0 * liou.rate_up[1],
                                     2.0 * liou.rate_up[2]};
  constexpr std::array<int, 3> site_bit = {4, 2, 1};
  const Complex minus_i(0.0, -1.0);

  auto rhs = [&](const Matrix8& r) -> Matrix8 {
    Matrix8 out;
    for (int i = 0; i < kHilbertDim; ++i) {
      for (int j = 0; j < kHilbertDim; ++j) {
        Complex h_comm = (h_diag(i) - h_diag(j)) * r(i, j);
        if (i == i010) h_comm += g_exch * r(i101, j);
        if (i == i101) h_comm += g_exch * r(i010, j);
        if (j == i010) h_comm -= g_exch * r(i, i101);
        if (j == i101) h_comm -= g_exch * r(i, i010);
        Complex val = minus_i * h_comm - (damping(i) + damping(j)) * r(i, j);
        for (int s = 0; s < 3; ++s) {
          const int m = site_bit[s];
          if (((i | j) & m) == 0) {
            val += down2[s] * r(i | m, j | m);
          } else if (((i & j) & m) == m) {
            val += up2[s] * r(i & ~m, j & ~m);
          }
        }
        out(i, j) = val;
      }
    }
    return out;
  };

  std::array<Matrix, 3> nops;
  for (int s = 0; s < 3; ++s) nops[s] = embed_single(number_op(), s + 1);

  EvolutionResult result;
  Matrix8 rho = rho0;
  auto record = [&](double t) {
    TrajectoryPoint pt;
    pt.time_inv_ghz = t;
    for (int s = 0; s < 3; ++s) {
      pt.populations[s] = (rho * nops[s]).trace().real();
    }
    const DensityDiagnostics d = validate_density_matrix(rho);
    pt.trace_deviation = d.trace_deviation;
    pt.min_eigenvalue = d.min_eigenvalue;
    result.samples.push_back(pt);
  };

  record(0.0);
  for (long step = 1; step <= nsteps; ++step) {
    const Matrix8 k1 = rhs(rho);
    const Matrix8 k2 = rhs(rho + (0.5 * dt) * k1);
    const Matrix8 k3 = rhs(rho + (0.5 * dt) * k2);
    const Matrix8 k4 = rhs(rho + dt * k3);
    rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = (0.5 * (rho + rho.adjoint())).eval();
    const double trace_dev = std::abs(rho.trace() - Complex(1.0, 0.0));
    if (trace_dev > 1e-6) {
      throw NumericalError("evolve: trace drifted by " +
                           std::to_string(trace_dev) +
                           "; reduce the step size");
    }
    if (step % stride == 0 || step == nsteps) {
      record(static_cast<double>(step) * dt);
    }
  }

  result.final_state = rho;
  const Matrix steady =
      steady_reference ? *steady_reference : steady_state_nullspace(liou);
  result.distance_to_steady = trace_distance(rho, steady);
  result.converged = result.distance_to_steady <= options.convergence_tol;
  return result;
}

Matrix steady_state_nullspace(const Liouvillian& liou) {
  Eigen::BDCSVD<Matrix> svd(liou.matrix, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const int n = static_cast<int>(sv.size());
  const double scale = sv(0);
  if (sv(n - 2) < 1e-10 * scale) {
    throw RegimeError(
        "steady state is not unique: second-smallest singular value " +
        std::to_string(sv(n - 2)) + " is below the 1e-10 relative gap");
  }
  const Vector null_vec = svd.matrixV().col(n - 1);
  Matrix rho = unvectorize(null_vec, kHilbertDim, kHilbertDim);
  rho = 0.5 * (rho + rho.adjoint()).eval();
  const Complex tr = rho.trace();
  if (std::abs(tr) < 1e-12) {
    throw NumericalError("steady state has (near-)zero trace");
  }
  rho /= tr;
  const DensityDiagnostics diag = validate_density_matrix(rho);
  if (!diag.valid) {
    throw NumericalError(
        "nullspace steady state violates density-matrix invariants "
        "(min eigenvalue " + std::to_string(diag.min_eigenvalue) + ")");
  }
  return rho;
}

Observables numeric_observables(const RefrigeratorModel& model, const Matrix& rho) {
  std::array<Matrix, 3> nops;
  for (int s = 0; s < 3; ++s) nops[s] = embed_single(number_op(), s + 1);

  Observables obs;
  for (int s = 0; s < 3; ++s) {
    obs.populations[s] = (rho * nops[s]).trace().real();
  }
  obs.pair_moments[0] = (rho * nops[0] * nops[1]).trace().real();
  obs.pair_moments[1] = (rho * nops[0] * nops[2]).trace().real();
  obs.pair_moments[2] = (rho * nops[1] * nops[2]).trace().real();
  obs.triple_moment = (rho * nops[0] * nops[1] * nops[2]).trace().real();

  const Matrix exchange = embed_single(lowering_op(), 1) *
                          embed_single(raising_op(), 2) *
                          embed_single(lowering_op(), 3);
  const Complex expect = model.coupling.g_tilde_ghz * (rho * exchange).trace();
  const Complex j = kImag * (expect - std::conj(expect));
  if (std::abs(j.imag()) > 1e-10) {
    throw NumericalError("current J acquired an imaginary part");
  }
  obs.current_j = j.real();
  return obs;
}

double heat_current_numeric(const RefrigeratorModel& model,
                            const Liouvillian& liou, const Matrix& rho,
                            int site) {
  if (site < 1 || site > 3) throw ConfigError("heat current site must be 1..3");
  const Matrix nop = embed_single(number_op(), site);
  const Matrix drho = liou.apply_dissipator(rho, site);
  return model.qubits[site - 1].energy_ghz * (nop * drho).trace().real();
}

}  // namespace qfridge
