// Copyright 2026 The netfp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netfp/cli_config.hpp"
#include "netfp/commands.hpp"

namespace {

// Overrides layer in order: config file, NETFP_* environment variables, then
// command-line flags.
void apply_env_overrides(netfp::CliConfig& cfg) {
  static const char* kKeys[] = {"command", "topology", "algo",  "n",
                                "scenario", "scenario_seed", "alpha", "rho",
                                "runs",    "t_max",    "seed",  "out",
                                "jobs",    "alpha_grid", "rho_grid", "weights"};
  for (const char* key : kKeys) {
    std::string env_name = "NETFP_";
    for (const char* c = key; *c; ++c) {
      env_name += static_cast<char>(*c == '-' ? '_' : std::toupper(*c));
    }
    if (const char* value = std::getenv(env_name.c_str())) {
      netfp::apply_override(cfg, key, value);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "netfp: pure-equilibrium search by inertial best-response play over "
      "sparse communication networks"};
  app.footer(
      "Commands: run (one ensemble), sweep (alpha x rho grid),\n"
      "verify-weights (build and check the mixing matrices),\n"
      "reproduce (four-network comparison against the reference table).\n"
      "Precedence: --config file < NETFP_* environment < flags.");

  std::string config_path;
  std::vector<std::pair<std::string, std::string>> flag_overrides;
  auto track = [&flag_overrides](const std::string& key) {
    return [key, &flag_overrides](const std::string& value) {
      flag_overrides.emplace_back(key, value);
    };
  };

  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option_function<std::string>("cmd", track("command"),
                                       "run | sweep | verify-weights | reproduce");
  app.add_option_function<std::string>("--command", track("command"),
                                       "same as the positional command");
  app.add_option_function<std::string>("--topology", track("topology"),
                                       "complete | line | star | ring");
  app.add_option_function<std::string>(
      "--algo", track("algo"), "central-jsfp | djsfp | central-fp | dfp");
  app.add_option_function<std::string>("--n", track("n"), "vehicle/object count");
  app.add_option_function<std::string>("--scenario", track("scenario"),
                                       "scenario JSON file");
  app.add_option_function<std::string>("--scenario-seed", track("scenario_seed"),
                                       "generate scenario positions from this seed");
  app.add_option_function<std::string>("--alpha", track("alpha"), "fading-memory step");
  app.add_option_function<std::string>("--rho", track("rho"), "inertia probability");
  app.add_option_function<std::string>("--runs", track("runs"), "runs per ensemble");
  app.add_option_function<std::string>("--t-max", track("t_max"), "round limit per run");
  app.add_option_function<std::string>("--seed", track("seed"), "base RNG seed");
  app.add_option_function<std::string>("--out", track("out"), "output directory");
  app.add_option_function<std::string>("--jobs", track("jobs"), "parallel runs");
  app.add_option_function<std::string>("--alpha-grid", track("alpha_grid"),
                                       "sweep grid: a,b,c or lo:hi:step");
  app.add_option_function<std::string>("--rho-grid", track("rho_grid"),
                                       "sweep grid: a,b,c or lo:hi:step");
  app.add_option_function<std::string>("--weights", track("weights"),
                                       "verify a weight-matrix JSON file");

  CLI11_PARSE(app, argc, argv);

  try {
    netfp::CliConfig cfg;
    if (!config_path.empty()) cfg = netfp::parse_config_file(config_path);
    apply_env_overrides(cfg);
    for (const auto& [key, value] : flag_overrides) {
      netfp::apply_override(cfg, key, value);
    }
    if (cfg.command.empty()) {
      std::cerr << "error: no command given (run, sweep, verify-weights, reproduce)\n";
      return 2;
    }
    return netfp::dispatch_command(cfg, std::cout);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}
