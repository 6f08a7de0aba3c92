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

#include "qfridge/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <Eigen/Eigenvalues>

#include "qfridge/constants.hpp"
#include "qfridge/errors.hpp"

namespace qfridge {

namespace {

constexpr int kLevels = 4;       // tracked levels per well
constexpr int kProductDim = kLevels * kLevels * kLevels;

int product_index(int i1, int i2, int i3) {
  return kLevels * kLevels * i1 + kLevels * i2 + i3;
}

struct Potential {
  double ej, el, k, phi_ext;
  double value(double p) const {
    return -ej * std::cos(p) + 0.5 * el * (p - phi_ext) * (p - phi_ext) +
           0.5 * k * p * p;
  }
  double d1(double p) const { return ej * std::sin(p) + el * (p - phi_ext) + k * p; }
  double d2(double p) const { return ej * std::cos(p) + el + k; }
  double d3(double p) const { return -ej * std::sin(p); }
};

// Bisection on U' within a sign-changing bracket; the scan guarantees one.
double refine_root(const Potential& u, double lo, double hi) {
  double flo = u.d1(lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = u.d1(mid);
    if (fmid == 0.0) return mid;
    if ((flo < 0.0) == (fmid < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-15 * std::max(1.0, std::abs(mid))) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double coupling_coefficient(double l_m_nh, double m_nh) {
  if (m_nh < 0.0) throw ConfigError("mutual inductance M must be >= 0");
  if (l_m_nh <= 0.0) throw ConfigError("coil self-inductance L_M must be positive");
  if (l_m_nh - m_nh < 1e-6 * l_m_nh) {
    throw ConfigError("coupling prefactor diverges as M -> L_M; "
                      "|L_M - M| must exceed 1e-6 L_M");
  }
  return kReducedFluxQuantumSqGHzNH * (l_m_nh + m_nh) /
         ((l_m_nh + 2.0 * m_nh) * (l_m_nh - m_nh));
}

CubicWellParams find_working_point(const CircuitParams& circuit, int site) {
  if (site < 1 || site > 3) throw ConfigError("qubit site must be 1..3");
  const CircuitQubitParams& q = circuit.qubits[site - 1];
  // E_J = 0 is allowed: it is the exactly harmonic limit.
  if (q.c_ff <= 0.0 || q.ej_ghz < 0.0 || q.l_nh <= 0.0) {
    throw ConfigError("circuit qubit parameters must be positive");
  }
  const double k = coupling_coefficient(circuit.l_m_nh, circuit.m_nh);
  const Potential u{q.ej_ghz, kReducedFluxQuantumSqGHzNH / q.l_nh, k, q.phi_ext};

  // Scan one flux period around the bias for minima of U.
  const double lo = q.phi_ext - kPi;
  const double hi = q.phi_ext + kPi;
  constexpr int kScan = 4096;
  double best = 0.0;
  bool found = false;
  double prev_p = lo;
  double prev_f = u.d1(lo);
  for (int i = 1; i <= kScan; ++i) {
    const double p = lo + (hi - lo) * i / kScan;
    const double f = u.d1(p);
    if (prev_f == 0.0 || (prev_f < 0.0) != (f < 0.0)) {
      const double root = refine_root(u, prev_p, p);
      if (u.d2(root) > 0.0) {  // minimum, not barrier top
        if (!found || std::abs(root - q.phi_ext) < std::abs(best - q.phi_ext)) {
          best = root;
          found = true;
        }
      }
    }
    prev_p = p;
    prev_f = f;
  }
  if (!found) {
    throw RegimeError("no potential minimum found within one flux period of the bias");
  }

  const double force_scale = q.ej_ghz + u.el + k;
  if (std::abs(u.d1(best)) > 1e-12 * force_scale) {
    throw NumericalError("working point refinement left a residual gradient");
  }

  CubicWellParams well;
  well.phi_sta = best;
  well.mass_inv_ghz = kInverseMassScaleGHzfF / q.c_ff;
  const double curv = u.d2(best);
  well.omega_ghz = std::sqrt(well.mass_inv_ghz * curv);
  well.lambda_ghz = -u.d3(best) / 6.0;
  if (well.lambda_ghz != 0.0) {
    well.barrier_ghz =
        curv * curv * curv / (54.0 * well.lambda_ghz * well.lambda_ghz);
    well.bound_levels = well.barrier_ghz / well.omega_ghz;
    if (well.bound_levels < 3.0) {
      throw RegimeError("cubic well of qubit " + std::to_string(site) +
                        " holds fewer than 3 bound levels (estimate " +
                        std::to_string(well.bound_levels) + ")");
    }
  } else {
    well.barrier_ghz = std::numeric_limits<double>::infinity();
    well.bound_levels = std::numeric_limits<double>::infinity();
  }
  return well;
}

namespace {

struct RawSpectrum {
  std::vector<double> levels;
  Eigen::MatrixXd x_elements;
};

// One diagonalization at fixed basis size. Keeps the eigenstates living on
// the well side of the cubic barrier; beyond it the truncated x^3 term
// produces spurious low-lying states once the basis reaches that far.
RawSpectrum diagonalize_well(const CubicWellParams& well, int n_basis) {
  const double x0c = std::sqrt(well.mass_inv_ghz / (2.0 * well.omega_ghz));
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n_basis, n_basis);
  for (int n = 0; n + 1 < n_basis; ++n) {
    x(n, n + 1) = x(n + 1, n) = x0c * std::sqrt(n + 1.0);
  }
  Eigen::MatrixXd h = (x * x * x) * (-well.lambda_ghz);
  for (int n = 0; n < n_basis; ++n) {
    h(n, n) += well.omega_ghz * (n + 0.5);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("well diagonalization failed");
  }

  std::vector<int> kept;
  if (well.lambda_ghz == 0.0) {
    for (int i = 0; i < n_basis; ++i) kept.push_back(i);
  } else {
    const double curv = well.omega_ghz * well.omega_ghz / well.mass_inv_ghz;
    const double x_barrier = curv / (3.0 * well.lambda_ghz);  // same sign as lambda
    for (int i = 0; i < n_basis; ++i) {
      const Eigen::VectorXd v = solver.eigenvectors().col(i);
      const double x_mean = v.dot(x * v);
      if (x_mean / x_barrier < 1.0) kept.push_back(i);
    }
  }
  if (static_cast<int>(kept.size()) < kLevels) {
    throw RegimeError("fewer than 4 well-localized states; well too anharmonic");
  }

  RawSpectrum raw;
  raw.levels.resize(kLevels);
  Eigen::MatrixXd vecs(n_basis, kLevels);
  for (int i = 0; i < kLevels; ++i) {
    raw.levels[i] = solver.eigenvalues()(kept[i]);
    vecs.col(i) = solver.eigenvectors().col(kept[i]);
    // fix the arbitrary eigenvector sign: largest component positive
    int imax = 0;
    vecs.col(i).cwiseAbs().maxCoeff(&imax);
    if (vecs(imax, i) < 0.0) vecs.col(i) = -vecs.col(i);
  }
  raw.x_elements = vecs.transpose() * x * vecs;
  return raw;
}

}  // namespace

AnharmonicQubit anharmonic_spectrum(const CubicWellParams& well, int n_basis) {
  if (n_basis < 20) throw ConfigError("n_basis must be at least 20");
  if (well.omega_ghz <= 0.0) throw ConfigError("well frequency must be positive");

  RawSpectrum prev = diagonalize_well(well, n_basis);
  int nb = n_basis;
  while (2 * nb <= 200) {
    RawSpectrum cur = diagonalize_well(well, 2 * nb);
    const double e10_prev = prev.levels[1] - prev.levels[0];
    const double e10_cur = cur.levels[1] - cur.levels[0];
    if (std::abs(e10_cur - e10_prev) < 1e-8 * std::abs(e10_cur)) {
      AnharmonicQubit result;
      result.levels_ghz = cur.levels;
      result.x_elements = cur.x_elements;
      result.omega_ghz = well.omega_ghz;
      result.anharmonic_ratio = e10_cur / well.omega_ghz;
      result.n_basis_used = 2 * nb;
      return result;
    }
    prev = std::move(cur);
    nb *= 2;
  }
  throw RegimeError("anharmonic spectrum not converged at n_basis <= 200; "
                    "well too anharmonic for the cubic model");
}

CouplingSpec effective_coupling(const std::array<AnharmonicQubit, 3>& qubits,
                                double g_ghz,
                                const EffectiveCouplingOptions& options) {
  std::array<double, 3> gap{};
  double omega_bar = 0.0;
  for (int s = 0; s < 3; ++s) {
    if (qubits[s].levels_ghz.size() < kLevels) {
      throw ConfigError("effective_coupling needs 4 levels per qubit");
    }
    gap[s] = qubits[s].levels_ghz[1] - qubits[s].levels_ghz[0];
    omega_bar += qubits[s].omega_ghz / 3.0;
  }
  const double mismatch = std::abs(gap[1] - (gap[0] + gap[2]));
  if (mismatch > options.resonance_tol_rel * gap[1]) {
    throw RegimeError("dressed gaps violate E2 = E1 + E3 beyond " +
                      std::to_string(options.resonance_tol_rel) +
                      " relative (mismatch " + std::to_string(mismatch) + " GHz)");
  }
  const double floor = options.degeneracy_floor_rel * omega_bar;

  // Product-basis energies and V = g (x1 x2 + x1 x3 + x2 x3).
  Eigen::VectorXd energy(kProductDim);
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(kProductDim, kProductDim);
  for (int i1 = 0; i1 < kLevels; ++i1) {
    for (int i2 = 0; i2 < kLevels; ++i2) {
      for (int i3 = 0; i3 < kLevels; ++i3) {
        const int row = product_index(i1, i2, i3);
        energy(row) = qubits[0].levels_ghz[i1] + qubits[1].levels_ghz[i2] +
                      qubits[2].levels_ghz[i3];
        for (int j1 = 0; j1 < kLevels; ++j1) {
          for (int j2 = 0; j2 < kLevels; ++j2) {
            for (int j3 = 0; j3 < kLevels; ++j3) {
              const int col = product_index(j1, j2, j3);
              double val = 0.0;
              if (i3 == j3) val += qubits[0].x_elements(i1, j1) * qubits[1].x_elements(i2, j2);
              if (i2 == j2) val += qubits[0].x_elements(i1, j1) * qubits[2].x_elements(i3, j3);
              if (i1 == j1) val += qubits[1].x_elements(i2, j2) * qubits[2].x_elements(i3, j3);
              v(row, col) = g_ghz * val;
            }
          }
        }
      }
    }
  }

  const int s010 = product_index(0, 1, 0);
  const int s101 = product_index(1, 0, 1);
  const double e_pair = 0.5 * (energy(s010) + energy(s101));

  // Second-order transition amplitude between the degenerate pair. At first
  // order <101|V|010> = 0: V is two-body and the patterns differ on all
  // three qubits.
  double g_tilde = 0.0;
  for (int k = 0; k < kProductDim; ++k) {
    if (k == s010 || k == s101) continue;
    const double denom = e_pair - energy(k);
    if (std::abs(denom) < floor) {
      // An uncoupled degenerate state is harmless (harmonic spectra are
      // commensurate but exactly selection-rule-decoupled).
      if (v(s010, k) == 0.0 && v(k, s101) == 0.0) continue;
      throw RegimeError("accidental degeneracy: intermediate product state " +
                        std::to_string(k) + " sits within the energy floor "
                        "of the qubit pair");
    }
    g_tilde += v(s010, k) * v(k, s101) / denom;
  }

  // Diagonal shifts of the 8 computational states, first plus second order;
  // the degenerate pair excludes each other (that block is g~'s job).
  std::array<double, 8> shift{};
  for (int n1 = 0; n1 < 2; ++n1) {
    for (int n2 = 0; n2 < 2; ++n2) {
      for (int n3 = 0; n3 < 2; ++n3) {
        const int s = product_index(n1, n2, n3);
        double sh = v(s, s);
        for (int k = 0; k < kProductDim; ++k) {
          if (k == s) continue;
          if ((s == s010 || s == s101) && (k == s010 || k == s101)) continue;
          const double denom = energy(s) - energy(k);
          if (std::abs(denom) < floor) {
            if (v(s, k) == 0.0) continue;
            throw RegimeError("accidental degeneracy while shifting state |" +
                              std::to_string(n1) + std::to_string(n2) +
                              std::to_string(n3) + ">");
          }
          sh += v(s, k) * v(k, s) / denom;
        }
        shift[4 * n1 + 2 * n2 + n3] = sh;
      }
    }
  }

  // Moebius inversion: 8 shifts determine the 7 D's and a global constant.
  CouplingSpec c;
  const double c0 = shift[0];
  c.d1_ghz = shift[4] - c0;
  c.d2_ghz = shift[2] - c0;
  c.d3_ghz = shift[1] - c0;
  c.d12_ghz = shift[6] - c0 - c.d1_ghz - c.d2_ghz;
  c.d13_ghz = shift[5] - c0 - c.d1_ghz - c.d3_ghz;
  c.d23_ghz = shift[3] - c0 - c.d2_ghz - c.d3_ghz;
  c.d123_ghz = shift[7] - c0 - c.d1_ghz - c.d2_ghz - c.d3_ghz - c.d12_ghz -
               c.d13_ghz - c.d23_ghz;
  c.g_tilde_ghz = g_tilde;  // raw sign, caller rephases
  return c;
}

AssembledModel assemble_model(const CircuitParams& circuit,
                              const std::array<BathSpec, 3>& baths,
                              const AssembleOptions& options) {
  AssembledModel assembled;
  assembled.coupling_k_ghz = coupling_coefficient(circuit.l_m_nh, circuit.m_nh);
  assembled.g_ghz = -assembled.coupling_k_ghz;
  if (circuit.m_nh < 0.01 * circuit.l_m_nh) {
    assembled.warnings.push_back(
        "M < 0.01 L_M: the coupling prefactor does not vanish with M; "
        "check that the mutual coils are really this weakly coupled");
  }

  for (int s = 1; s <= 3; ++s) {
    assembled.wells[s - 1] = find_working_point(circuit, s);
    assembled.spectra[s - 1] =
        anharmonic_spectrum(assembled.wells[s - 1], options.n_basis);
  }

  CouplingSpec coupling =
      effective_coupling(assembled.spectra, assembled.g_ghz, options.coupling);
  assembled.g_tilde_signed_ghz = coupling.g_tilde_ghz;
  coupling.g_tilde_ghz = std::abs(coupling.g_tilde_ghz);

  std::array<QubitSpec, 3> qubits;
  for (int s = 0; s < 3; ++s) {
    qubits[s].energy_ghz =
        assembled.spectra[s].levels_ghz[1] - assembled.spectra[s].levels_ghz[0];
    qubits[s].gamma_ghz = baths[s].gamma_ghz;
    qubits[s].bath_temp_mk = baths[s].temp_mk;
  }
  // The circuit never lands exactly on resonance; nudge E2 and record it.
  const double e2_exact = qubits[0].energy_ghz + qubits[2].energy_ghz;
  assembled.e2_nudge_ghz = e2_exact - qubits[1].energy_ghz;
  if (assembled.e2_nudge_ghz != 0.0) {
    char note[96];
    std::snprintf(note, sizeof(note), "E2 nudged by %.3e GHz onto exact resonance",
                  assembled.e2_nudge_ghz);
    assembled.warnings.emplace_back(note);
    qubits[1].energy_ghz = e2_exact;
  }

  assembled.model = build_model(qubits, coupling);
  assembled.model.warnings.insert(assembled.model.warnings.begin(),
                                  assembled.warnings.begin(),
                                  assembled.warnings.end());
  assembled.warnings = assembled.model.warnings;
  return assembled;
}

}  // namespace qfridge
