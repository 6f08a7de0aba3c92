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

#include "qfridge/model.hpp"

#include <cmath>

#include "qfridge/constants.hpp"
#include "qfridge/errors.hpp"

namespace qfridge {

double bose_occupation(double energy_ghz, double temp_mk) {
  if (energy_ghz <= 0.0) {
    throw ConfigError("bose_occupation: energy must be positive");
  }
  if (temp_mk <= 0.0) {
    throw ConfigError("bose_occupation: temperature must be positive");
  }
  const double theta = energy_ghz / (kBoltzmannOverPlanckGHzPermK * temp_mk);
  return 1.0 / std::expm1(theta);
}

double bare_population(double bose_n) {
  if (bose_n < 0.0) {
    throw ConfigError("bare_population: occupation must be non-negative");
  }
  return bose_n / (2.0 * bose_n + 1.0);
}

namespace {

// E1/E3 equal to a ratio of small integers only justifies a warning: it
// voids the rotating-wave argument, not any implemented equation.
void warn_if_commensurate(const std::array<QubitSpec, 3>& qubits,
                          std::vector<std::string>& warnings) {
  const double r = qubits[0].energy_ghz / qubits[2].energy_ghz;
  for (int p = 1; p <= 10; ++p) {
    for (int q = 1; q <= 10; ++q) {
      if (std::abs(r - static_cast<double>(p) / q) < 1e-9) {
        warnings.push_back(
            "E1/E3 = " + std::to_string(p) + "/" + std::to_string(q) +
            " is a ratio of small integers; the energies should be "
            "incommensurable for the rotating-wave filtering to be clean");
        return;
      }
    }
  }
}

}  // namespace

RefrigeratorModel build_model(const std::array<QubitSpec, 3>& qubits,
                              const CouplingSpec& coupling) {
  for (int i = 0; i < 3; ++i) {
    if (qubits[i].energy_ghz <= 0.0 || qubits[i].gamma_ghz <= 0.0 ||
        qubits[i].bath_temp_mk <= 0.0) {
      throw ConfigError("qubit " + std::to_string(i + 1) +
                        ": energy, gamma and bath_temp must be positive");
    }
  }
  if (!(coupling.g_tilde_ghz >= 0.0) || !std::isfinite(coupling.g_tilde_ghz)) {
    throw ConfigError("g_tilde must be finite and >= 0 (phase absorbed into the basis)");
  }
  for (double d : {coupling.d1_ghz, coupling.d2_ghz, coupling.d3_ghz,
                   coupling.d12_ghz, coupling.d13_ghz, coupling.d23_ghz,
                   coupling.d123_ghz}) {
    if (!std::isfinite(d)) throw ConfigError("D coefficients must be finite");
  }
  const double e2 = qubits[1].energy_ghz;
  const double mismatch = std::abs(e2 - (qubits[0].energy_ghz + qubits[2].energy_ghz));
  if (mismatch > kResonanceRelTol * e2) {
    throw ConfigError("resonance violated: |E2 - (E1+E3)| = " +
                      std::to_string(mismatch) + " GHz exceeds tolerance");
  }

  RefrigeratorModel model;
  model.qubits = qubits;
  model.coupling = coupling;
  for (int i = 0; i < 3; ++i) {
    model.bose_n[i] = bose_occupation(qubits[i].energy_ghz, qubits[i].bath_temp_mk);
    model.beta_inv_ghz[i] =
        1.0 / (kBoltzmannOverPlanckGHzPermK * qubits[i].bath_temp_mk);
  }
  warn_if_commensurate(qubits, model.warnings);
  return model;
}

Matrix build_h_eff(const RefrigeratorModel& model) {
  const CouplingSpec& c = model.coupling;
  Matrix h = Matrix::Zero(kHilbertDim, kHilbertDim);
  for (int idx = 0; idx < kHilbertDim; ++idx) {
    const BasisLabel l = basis_label(idx);
    h(idx, idx) = c.d1_ghz * l.n1 + c.d2_ghz * l.n2 + c.d3_ghz * l.n3 +
                  c.d12_ghz * l.n1 * l.n2 + c.d13_ghz * l.n1 * l.n3 +
                  c.d23_ghz * l.n2 * l.n3 + c.d123_ghz * l.n1 * l.n2 * l.n3;
  }
  const int i010 = basis_index({0, 1, 0});
  const int i101 = basis_index({1, 0, 1});
  h(i010, i101) = c.g_tilde_ghz;
  h(i101, i010) = c.g_tilde_ghz;
  return h;
}

}  // namespace qfridge
