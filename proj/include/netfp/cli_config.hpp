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

#ifndef NETFP_CLI_CONFIG_HPP_
#define NETFP_CLI_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace netfp {

// Batch configuration. Defaults reproduce the reference study setup: five
// vehicles, alpha = rho = 0.2, 50 runs. Sources are layered in the order
// config file, then NETFP_* environment variables, then command-line flags.
struct CliConfig {
  std::string command;  // run | sweep | verify-weights | reproduce
  std::string topology = "complete";
  std::string algo = "djsfp";
  int n = 5;
  std::optional<std::uint64_t> scenario_seed;  // unset: shipped reference scenario
  std::string scenario_file;                   // overrides scenario_seed
  double alpha = 0.2;
  double rho = 0.2;
  int runs = 50;
  int t_max = 100000;
  std::uint64_t seed = 1;
  std::string out = "out";
  int jobs = 1;
  std::vector<double> alpha_grid;  // sweep; empty means 0.1..0.9 step 0.1
  std::vector<double> rho_grid;
  std::string weights_file;  // verify-weights: check a matrix file instead

  void validate() const;  // throws std::invalid_argument naming the field
};

// Config file: one "key=value" per line, '#' comments, blank lines ignored.
// Unknown keys are rejected. Keys: command, topology, algo, n, scenario,
// scenario_seed, alpha, rho, runs, t_max, seed, out, jobs, alpha_grid,
// rho_grid, weights.
CliConfig parse_config_file(const std::string& path);

// Applies one key=value override; throws std::invalid_argument naming the
// key on unknown keys or unparsable values.
void apply_override(CliConfig& cfg, const std::string& key, const std::string& value);

// Grid syntax: "0.1,0.2,0.5" or "lo:hi:step" (inclusive endpoints).
std::vector<double> parse_grid(const std::string& text);

}  // namespace netfp

#endif  // NETFP_CLI_CONFIG_HPP_
