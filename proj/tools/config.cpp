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

#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "qfridge/errors.hpp"

namespace qfridge::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

void reject_unknown_keys(const json& j, const std::string& path,
                         const std::set<std::string>& known) {
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) {
      fail(path + "." + key, "unknown key (strict mode)");
    }
  }
}

double require_number(const json& j, const std::string& path,
                      const std::string& key) {
  if (!j.contains(key)) fail(path + "." + key, "missing required number");
  if (!j.at(key).is_number()) fail(path + "." + key, "expected a number");
  return j.at(key).get<double>();
}

double optional_number(const json& j, const std::string& path,
                       const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) fail(path + "." + key, "expected a number");
  return j.at(key).get<double>();
}

int optional_int(const json& j, const std::string& path, const std::string& key,
                 int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) fail(path + "." + key, "expected an integer");
  return j.at(key).get<int>();
}

std::array<QubitSpec, 3> parse_qubits(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) fail(path, "expected an array of 3 qubits");
  std::array<QubitSpec, 3> qubits;
  for (int i = 0; i < 3; ++i) {
    const std::string qpath = path + "[" + std::to_string(i) + "]";
    const json& q = j.at(i);
    expect_object(q, qpath);
    reject_unknown_keys(q, qpath, {"energy", "gamma", "bath_temp"});
    qubits[i].energy_ghz = require_number(q, qpath, "energy");
    qubits[i].gamma_ghz = require_number(q, qpath, "gamma");
    qubits[i].bath_temp_mk = require_number(q, qpath, "bath_temp");
  }
  return qubits;
}

CouplingSpec parse_coupling(const json& j, const std::string& path) {
  expect_object(j, path);
  reject_unknown_keys(j, path,
                      {"g_tilde", "d1", "d2", "d3", "d12", "d13", "d23", "d123"});
  CouplingSpec c;
  c.g_tilde_ghz = optional_number(j, path, "g_tilde", 0.0);
  c.d1_ghz = optional_number(j, path, "d1", 0.0);
  c.d2_ghz = optional_number(j, path, "d2", 0.0);
  c.d3_ghz = optional_number(j, path, "d3", 0.0);
  c.d12_ghz = optional_number(j, path, "d12", 0.0);
  c.d13_ghz = optional_number(j, path, "d13", 0.0);
  c.d23_ghz = optional_number(j, path, "d23", 0.0);
  c.d123_ghz = optional_number(j, path, "d123", 0.0);
  return c;
}

json coupling_to_json(const CouplingSpec& c) {
  return json{{"g_tilde", c.g_tilde_ghz}, {"d1", c.d1_ghz},  {"d2", c.d2_ghz},
              {"d3", c.d3_ghz},           {"d12", c.d12_ghz}, {"d13", c.d13_ghz},
              {"d23", c.d23_ghz},         {"d123", c.d123_ghz}};
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  expect_object(root, "$");
  reject_unknown_keys(root, "$", {"model", "circuit", "solver", "sweep"});

  ScenarioConfig config;
  const bool has_model = root.contains("model");
  const bool has_circuit = root.contains("circuit");
  if (has_model == has_circuit) {
    fail("$", has_model ? "both $.model and $.circuit present; give exactly one"
                        : "one of $.model or $.circuit is required");
  }

  if (has_model) {
    const json& m = root.at("model");
    expect_object(m, "$.model");
    reject_unknown_keys(m, "$.model", {"qubits", "coupling"});
    if (!m.contains("qubits")) fail("$.model.qubits", "missing required array");
    const std::array<QubitSpec, 3> qubits = parse_qubits(m.at("qubits"), "$.model.qubits");
    CouplingSpec coupling;
    if (m.contains("coupling")) {
      coupling = parse_coupling(m.at("coupling"), "$.model.coupling");
    }
    config.dressed = build_model(qubits, coupling);
  } else {
    const json& c = root.at("circuit");
    expect_object(c, "$.circuit");
    reject_unknown_keys(c, "$.circuit", {"qubits", "l_m", "m", "baths"});
    if (!c.contains("qubits") || !c.at("qubits").is_array() ||
        c.at("qubits").size() != 3) {
      fail("$.circuit.qubits", "expected an array of 3 qubit blocks");
    }
    CircuitParams circuit;
    for (int i = 0; i < 3; ++i) {
      const std::string qpath = "$.circuit.qubits[" + std::to_string(i) + "]";
      const json& q = c.at("qubits").at(i);
      expect_object(q, qpath);
      reject_unknown_keys(q, qpath, {"c", "ej", "l", "phi_ext"});
      circuit.qubits[i].c_ff = require_number(q, qpath, "c");
      circuit.qubits[i].ej_ghz = require_number(q, qpath, "ej");
      circuit.qubits[i].l_nh = require_number(q, qpath, "l");
      circuit.qubits[i].phi_ext = require_number(q, qpath, "phi_ext");
    }
    circuit.l_m_nh = require_number(c, "$.circuit", "l_m");
    circuit.m_nh = require_number(c, "$.circuit", "m");
    if (!c.contains("baths") || !c.at("baths").is_array() ||
        c.at("baths").size() != 3) {
      fail("$.circuit.baths", "expected an array of 3 bath blocks");
    }
    for (int i = 0; i < 3; ++i) {
      const std::string bpath = "$.circuit.baths[" + std::to_string(i) + "]";
      const json& b = c.at("baths").at(i);
      expect_object(b, bpath);
      reject_unknown_keys(b, bpath, {"gamma", "temp"});
      config.baths[i].gamma_ghz = require_number(b, bpath, "gamma");
      config.baths[i].temp_mk = require_number(b, bpath, "temp");
      if (config.baths[i].gamma_ghz <= 0.0 || config.baths[i].temp_mk <= 0.0) {
        fail(bpath, "gamma and temp must be positive");
      }
    }
    config.circuit = circuit;
  }

  if (root.contains("solver")) {
    const json& s = root.at("solver");
    expect_object(s, "$.solver");
    reject_unknown_keys(s, "$.solver",
                        {"dt", "t_final", "sample_stride", "n_basis",
                         "resonance_tol_rel", "degeneracy_floor_rel"});
    config.solver.dt_inv_ghz = optional_number(s, "$.solver", "dt", 0.0);
    config.solver.t_final_inv_ghz = optional_number(s, "$.solver", "t_final", 0.0);
    config.solver.sample_stride = optional_int(s, "$.solver", "sample_stride", 0);
    config.solver.n_basis = optional_int(s, "$.solver", "n_basis", 32);
    config.solver.resonance_tol_rel =
        optional_number(s, "$.solver", "resonance_tol_rel", 1e-3);
    config.solver.degeneracy_floor_rel =
        optional_number(s, "$.solver", "degeneracy_floor_rel", 1e-6);
    if (config.solver.n_basis < 20) fail("$.solver.n_basis", "must be >= 20");
    if (config.solver.dt_inv_ghz < 0.0) fail("$.solver.dt", "must be >= 0");
    if (config.solver.t_final_inv_ghz < 0.0) fail("$.solver.t_final", "must be >= 0");
  }

  if (root.contains("sweep")) {
    const json& s = root.at("sweep");
    expect_object(s, "$.sweep");
    reject_unknown_keys(s, "$.sweep", {"path", "from", "to", "steps", "scale"});
    SweepConfig sweep;
    if (!s.contains("path") || !s.at("path").is_string()) {
      fail("$.sweep.path", "expected a string parameter path");
    }
    sweep.path = s.at("path").get<std::string>();
    sweep.from = require_number(s, "$.sweep", "from");
    sweep.to = require_number(s, "$.sweep", "to");
    sweep.steps = optional_int(s, "$.sweep", "steps", 0);
    if (sweep.steps < 2) fail("$.sweep.steps", "must be an integer >= 2");
    if (!std::isfinite(sweep.from) || !std::isfinite(sweep.to)) {
      fail("$.sweep", "bounds must be finite");
    }
    std::string scale = "linear";
    if (s.contains("scale")) {
      if (!s.at("scale").is_string()) fail("$.sweep.scale", "expected a string");
      scale = s.at("scale").get<std::string>();
    }
    if (scale == "log") {
      if (sweep.from <= 0.0 || sweep.to <= 0.0) {
        fail("$.sweep", "log scale requires positive bounds");
      }
      sweep.log_scale = true;
    } else if (scale != "linear") {
      fail("$.sweep.scale", "expected \"linear\" or \"log\"");
    }
    if (config.circuit) {
      fail("$.sweep", "sweeps need a dressed model block; run the circuit "
                      "command first and reuse its assembled model");
    }
    // validate the path once up front
    apply_sweep_value(*config.dressed, sweep.path, sweep.from);
    config.sweep = sweep;
  }

  // Echo of the fully resolved configuration.
  json resolved;
  if (config.dressed) {
    json qubits = json::array();
    for (const QubitSpec& q : config.dressed->qubits) {
      qubits.push_back({{"energy", q.energy_ghz},
                        {"gamma", q.gamma_ghz},
                        {"bath_temp", q.bath_temp_mk}});
    }
    resolved["model"] = {{"qubits", qubits},
                         {"coupling", coupling_to_json(config.dressed->coupling)}};
  } else {
    json qubits = json::array();
    for (const CircuitQubitParams& q : config.circuit->qubits) {
      qubits.push_back({{"c", q.c_ff},
                        {"ej", q.ej_ghz},
                        {"l", q.l_nh},
                        {"phi_ext", q.phi_ext}});
    }
    json baths = json::array();
    for (const BathSpec& b : config.baths) {
      baths.push_back({{"gamma", b.gamma_ghz}, {"temp", b.temp_mk}});
    }
    resolved["circuit"] = {{"qubits", qubits},
                           {"l_m", config.circuit->l_m_nh},
                           {"m", config.circuit->m_nh},
                           {"baths", baths}};
  }
  resolved["solver"] = {{"dt", config.solver.dt_inv_ghz},
                        {"t_final", config.solver.t_final_inv_ghz},
                        {"sample_stride", config.solver.sample_stride},
                        {"n_basis", config.solver.n_basis},
                        {"resonance_tol_rel", config.solver.resonance_tol_rel},
                        {"degeneracy_floor_rel", config.solver.degeneracy_floor_rel}};
  if (config.sweep) {
    resolved["sweep"] = {{"path", config.sweep->path},
                         {"from", config.sweep->from},
                         {"to", config.sweep->to},
                         {"steps", config.sweep->steps},
                         {"scale", config.sweep->log_scale ? "log" : "linear"}};
  }
  config.resolved = resolved;
  return config;
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

RefrigeratorModel resolve_model(const ScenarioConfig& config) {
  if (config.dressed) return *config.dressed;
  AssembleOptions options;
  options.n_basis = config.solver.n_basis;
  options.coupling.resonance_tol_rel = config.solver.resonance_tol_rel;
  options.coupling.degeneracy_floor_rel = config.solver.degeneracy_floor_rel;
  return assemble_model(*config.circuit, config.baths, options).model;
}

RefrigeratorModel apply_sweep_value(const RefrigeratorModel& base,
                                    const std::string& path, double value) {
  std::array<QubitSpec, 3> qubits = base.qubits;
  CouplingSpec coupling = base.coupling;

  bool matched = false;
  if (path.rfind("qubits[", 0) == 0 && path.size() > 9 && path[8] == ']' &&
      path[9] == '.') {
    const char idx_char = path[7];
    if (idx_char < '0' || idx_char > '2') {
      throw ConfigError("sweep path qubit index must be 0, 1 or 2: " + path);
    }
    const int idx = idx_char - '0';
    const std::string field = path.substr(10);
    if (field == "energy") {
      qubits[idx].energy_ghz = value;
      matched = true;
    } else if (field == "gamma") {
      qubits[idx].gamma_ghz = value;
      matched = true;
    } else if (field == "bath_temp") {
      qubits[idx].bath_temp_mk = value;
      matched = true;
    }
  } else if (path.rfind("coupling.", 0) == 0) {
    const std::string field = path.substr(9);
    auto set = [&](double& target) {
      target = value;
      matched = true;
    };
    if (field == "g_tilde") set(coupling.g_tilde_ghz);
    else if (field == "d1") set(coupling.d1_ghz);
    else if (field == "d2") set(coupling.d2_ghz);
    else if (field == "d3") set(coupling.d3_ghz);
    else if (field == "d12") set(coupling.d12_ghz);
    else if (field == "d13") set(coupling.d13_ghz);
    else if (field == "d23") set(coupling.d23_ghz);
    else if (field == "d123") set(coupling.d123_ghz);
  }
  if (!matched) {
    throw ConfigError(
        "unsupported sweep path: " + path +
        " (expected qubits[i].energy|gamma|bath_temp or coupling.<name>)");
  }
  return build_model(qubits, coupling);
}

}  // namespace qfridge::cli
