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

#include "runner.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "qfridge/analytic.hpp"
#include "qfridge/errors.hpp"
#include "qfridge/lindblad.hpp"
#include "qfridge/thermo.hpp"

namespace qfridge::cli {

namespace {

using nlohmann::json;

// Effective-temperature sentinel for populations outside (0, 1/2): the value
// -1 is impossible for a physical temperature and keeps every column finite.
constexpr double kNoTemperature = -1.0;

double min_gamma(const RefrigeratorModel& model) {
  double g = model.qubits[0].gamma_ghz;
  for (const QubitSpec& q : model.qubits) g = std::min(g, q.gamma_ghz);
  return g;
}

void check_finite(double value, const char* column) {
  if (!std::isfinite(value)) {
    throw NumericalError(std::string("non-finite value in output column ") + column);
  }
}

json json_number(double value) {
  return json::parse(format_number(value));
}

void write_config_echo(const ScenarioConfig& config, const std::string& command,
                       std::ostream& out) {
  out << "# qfridge " << command << "\n";
  out << "# config " << config.resolved.dump() << "\n";
}

struct SteadyRow {
  double param_value = 0.0;
  std::array<double, 3> n{};
  double j = 0.0;
  std::array<double, 3> q{};
  std::array<double, 3> teff{};
  bool cooling = false;
  double eta = 0.0;
  double eta_max = 0.0;
  double n1_delta = 0.0;
  double j_delta = 0.0;
};

SteadyRow evaluate_steady_point(const RefrigeratorModel& model, double param_value) {
  SteadyRow row;
  row.param_value = param_value;

  const AnalyticSteadyState analytic = steady_populations(model);
  const Liouvillian liou = build_liouvillian(model);
  const Matrix rho = steady_state_nullspace(liou);
  const Observables numeric = numeric_observables(model, rho);

  row.n = numeric.populations;
  row.j = numeric.current_j;
  for (int alpha = 1; alpha <= 3; ++alpha) {
    row.q[alpha - 1] = heat_current_numeric(model, liou, rho, alpha);
    row.teff[alpha - 1] =
        try_effective_temperature(model.qubits[alpha - 1].energy_ghz,
                                  numeric.populations[alpha - 1])
            .value_or(kNoTemperature);
  }
  const CoolingCondition cond = cooling_condition(model);
  row.cooling = cond.cooling;
  if (cond.cooling) {
    const Efficiency eff = efficiency(model);
    row.eta = eff.eta;
    row.eta_max = eff.eta_max;
  }
  row.n1_delta = analytic.populations[0] - numeric.populations[0];
  row.j_delta = analytic.current_j - numeric.current_j;
  return row;
}

const char* kSteadyColumns =
    "param_value,n1,n2,n3,j_current,q1,q2,q3,teff1_mk,teff2_mk,teff3_mk,"
    "cooling,eta,eta_max,n1_analytic_minus_numeric,j_analytic_minus_numeric";

void write_steady_row(const SteadyRow& row, std::ostream& out) {
  const double cols[] = {row.param_value, row.n[0],    row.n[1],
                         row.n[2],        row.j,       row.q[0],
                         row.q[1],        row.q[2],    row.teff[0],
                         row.teff[1],     row.teff[2], row.cooling ? 1.0 : 0.0,
                         row.eta,         row.eta_max, row.n1_delta,
                         row.j_delta};
  bool first = true;
  for (double v : cols) {
    check_finite(v, kSteadyColumns);
    if (!first) out << ",";
    out << format_number(v);
    first = false;
  }
  out << "\n";
}

}  // namespace

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

void run_check(const ScenarioConfig& config, std::ostream& out) {
  const RefrigeratorModel model = resolve_model(config);
  const ThermoReport report = thermo_report(model);
  const AnalyticSteadyState steady = steady_populations(model);

  out << "cooling=" << (report.cooling ? 1 : 0) << "\n";
  out << "cooling_margin=" << format_number(report.cooling_margin) << "\n";
  out << "j_current=" << format_number(steady.current_j) << "\n";
  for (int i = 0; i < 3; ++i) {
    out << "n" << (i + 1) << "=" << format_number(steady.populations[i]) << "\n";
  }
  for (int i = 0; i < 3; ++i) {
    out << "q" << (i + 1) << "=" << format_number(report.heat_currents[i]) << "\n";
  }
  for (int i = 0; i < 3; ++i) {
    out << "teff" << (i + 1) << "_mk="
        << format_number(report.t_eff_mk[i].value_or(kNoTemperature)) << "\n";
  }
  if (report.efficiency) {
    out << "eta=" << format_number(*report.efficiency) << "\n";
    out << "eta_max=" << format_number(*report.efficiency_bound) << "\n";
  }
  out << "entropy_rate=" << format_number(report.entropy_rate) << "\n";
  out << "xi=" << format_number(steady.rates.xi) << "\n";
  if (!cooling_condition(model).temperature_order_ok) {
    out << "warning=bath temperatures are not ordered T1 < T2 < T3; the "
           "machine cannot act as a refrigerator for qubit 1\n";
  }
  for (const std::string& warning : model.warnings) {
    out << "warning=" << warning << "\n";
  }
}

void run_steady(const ScenarioConfig& config, std::ostream& out) {
  const RefrigeratorModel model = resolve_model(config);
  write_config_echo(config, "steady", out);
  out << kSteadyColumns << "\n";
  write_steady_row(evaluate_steady_point(model, 0.0), out);
}

void run_evolve(const ScenarioConfig& config, std::ostream& out) {
  const RefrigeratorModel model = resolve_model(config);
  const Liouvillian liou = build_liouvillian(model);
  Matrix rho0 = Matrix::Zero(kHilbertDim, kHilbertDim);
  rho0(0, 0) = 1.0;  // |000><000|

  EvolveOptions options;
  options.t_final_inv_ghz = config.solver.t_final_inv_ghz > 0.0
                                ? config.solver.t_final_inv_ghz
                                : 20.0 / min_gamma(model);
  options.dt_inv_ghz = config.solver.dt_inv_ghz;
  options.sample_stride = config.solver.sample_stride;
  const EvolutionResult result = evolve(liou, rho0, options);

  write_config_echo(config, "evolve", out);
  out << "# converged " << (result.converged ? 1 : 0) << " distance_to_steady "
      << format_number(result.distance_to_steady) << "\n";
  out << "time_inv_ghz,n1,n2,n3,trace_dev,min_eig\n";
  for (const TrajectoryPoint& pt : result.samples) {
    const double cols[] = {pt.time_inv_ghz,    pt.populations[0],
                           pt.populations[1],  pt.populations[2],
                           pt.trace_deviation, pt.min_eigenvalue};
    bool first = true;
    for (double v : cols) {
      check_finite(v, "evolve");
      if (!first) out << ",";
      out << format_number(v);
      first = false;
    }
    out << "\n";
  }
}

void run_sweep(const ScenarioConfig& config, std::ostream& out) {
  if (!config.sweep) throw ConfigError("sweep command needs a $.sweep block");
  if (!config.dressed) throw ConfigError("sweep command needs a dressed model");
  const SweepConfig& sweep = *config.sweep;

  write_config_echo(config, "sweep", out);
  out << kSteadyColumns << "\n";
  for (int i = 0; i < sweep.steps; ++i) {
    const double t = static_cast<double>(i) / (sweep.steps - 1);
    const double value = sweep.log_scale
                             ? std::exp(std::log(sweep.from) +
                                        t * (std::log(sweep.to) - std::log(sweep.from)))
                             : sweep.from + t * (sweep.to - sweep.from);
    const RefrigeratorModel model =
        apply_sweep_value(*config.dressed, sweep.path, value);
    write_steady_row(evaluate_steady_point(model, value), out);
  }
}

void run_circuit(const ScenarioConfig& config, std::ostream& out) {
  if (!config.circuit) throw ConfigError("circuit command needs a $.circuit block");
  AssembleOptions options;
  options.n_basis = config.solver.n_basis;
  options.coupling.resonance_tol_rel = config.solver.resonance_tol_rel;
  options.coupling.degeneracy_floor_rel = config.solver.degeneracy_floor_rel;
  const AssembledModel assembled =
      assemble_model(*config.circuit, config.baths, options);

  json report;
  json qubits = json::array();
  for (int s = 0; s < 3; ++s) {
    const CubicWellParams& w = assembled.wells[s];
    const AnharmonicQubit& a = assembled.spectra[s];
    json levels = json::array();
    for (double e : a.levels_ghz) levels.push_back(json_number(e));
    qubits.push_back({{"phi_sta", json_number(w.phi_sta)},
                      {"omega_ghz", json_number(w.omega_ghz)},
                      {"lambda", json_number(w.lambda_ghz)},
                      {"barrier_levels", json_number(w.bound_levels)},
                      {"levels", levels},
                      {"anharmonic_ratio", json_number(a.anharmonic_ratio)},
                      {"n_basis_used", a.n_basis_used}});
  }
  report["qubits"] = qubits;
  const CouplingSpec& c = assembled.model.coupling;
  report["shared"] = {{"k", json_number(assembled.coupling_k_ghz)},
                      {"g", json_number(assembled.g_ghz)},
                      {"g_tilde", json_number(c.g_tilde_ghz)},
                      {"g_tilde_signed", json_number(assembled.g_tilde_signed_ghz)},
                      {"d_coeffs",
                       {{"d1", json_number(c.d1_ghz)},
                        {"d2", json_number(c.d2_ghz)},
                        {"d3", json_number(c.d3_ghz)},
                        {"d12", json_number(c.d12_ghz)},
                        {"d13", json_number(c.d13_ghz)},
                        {"d23", json_number(c.d23_ghz)},
                        {"d123", json_number(c.d123_ghz)}}}};
  report["e2_nudge_ghz"] = json_number(assembled.e2_nudge_ghz);

  // Assembled model block, directly reusable as a $.model input.
  json model_qubits = json::array();
  for (const QubitSpec& q : assembled.model.qubits) {
    model_qubits.push_back({{"energy", json_number(q.energy_ghz)},
                            {"gamma", json_number(q.gamma_ghz)},
                            {"bath_temp", json_number(q.bath_temp_mk)}});
  }
  report["model"] = {{"qubits", model_qubits},
                     {"coupling",
                      {{"g_tilde", json_number(c.g_tilde_ghz)},
                       {"d1", json_number(c.d1_ghz)},
                       {"d2", json_number(c.d2_ghz)},
                       {"d3", json_number(c.d3_ghz)},
                       {"d12", json_number(c.d12_ghz)},
                       {"d13", json_number(c.d13_ghz)},
                       {"d23", json_number(c.d23_ghz)},
                       {"d123", json_number(c.d123_ghz)}}}};
  json warnings = json::array();
  for (const std::string& w : assembled.warnings) warnings.push_back(w);
  report["warnings"] = warnings;

  out << report.dump(2) << "\n";
}

void run_command(const std::string& command, const ScenarioConfig& config,
                 std::ostream& out) {
  if (command == "check") {
    run_check(config, out);
  } else if (command == "steady") {
    run_steady(config, out);
  } else if (command == "evolve") {
    run_evolve(config, out);
  } else if (command == "sweep") {
    run_sweep(config, out);
  } else if (command == "circuit") {
    run_circuit(config, out);
  } else {
    throw ConfigError("unknown command: " + command);
  }
}

int run_command_guarded(const std::string& command, const ScenarioConfig& config,
                        std::ostream& out, std::ostream& err) {
  try {
    run_command(command, config, out);
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "error: config: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const RegimeError& e) {
    err << "error: regime: " << e.what() << "\n";
    return kExitRegimeError;
  } catch (const NumericalError& e) {
    err << "error: numeric: " << e.what() << "\n";
    return kExitNumericalError;
  }
}

}  // namespace qfridge::cli
