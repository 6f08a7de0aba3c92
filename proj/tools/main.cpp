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

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "config.hpp"
#include "qfridge/errors.hpp"
#include "runner.hpp"

namespace {

struct CommandArgs {
  std::string config_path;
  std::string output_path;  // empty = stdout
};

int execute(const std::string& command, const CommandArgs& args) {
  using namespace qfridge;
  cli::ScenarioConfig config;
  try {
    config = cli::load_config_file(args.config_path);
  } catch (const ConfigError& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return cli::kExitConfigError;
  }

  if (args.output_path.empty()) {
    return cli::run_command_guarded(command, config, std::cout, std::cerr);
  }
  std::ofstream out(args.output_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: config: cannot open output file " << args.output_path << "\n";
    return cli::kExitConfigError;
  }
  return cli::run_command_guarded(command, config, out, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-qubit noise-driven refrigerator simulator"};
  app.require_subcommand(1);

  const std::pair<const char*, const char*> commands[] = {
      {"check", "cooling condition, efficiency and currents (analytic)"},
      {"steady", "analytic vs numeric steady state, CSV"},
      {"evolve", "master-equation trajectory from |000>, CSV"},
      {"sweep", "one-parameter scan of the steady state, CSV"},
      {"circuit", "derive the dressed model from Josephson parameters, JSON"},
  };

  CommandArgs args;
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("-c,--config", args.config_path, "scenario JSON file")
        ->required();
    sub->add_option("-o,--output", args.output_path,
                    "output file (default: stdout)");
  }

  CLI11_PARSE(app, argc, argv);
  return execute(app.get_subcommands().front()->get_name(), args);
}
