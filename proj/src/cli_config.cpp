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

#include "netfp/cli_config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

namespace netfp {
namespace {

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(key + ": cannot parse number \"" + value + "\"");
  }
}

long long parse_int(const std::string& key, const std::string& value) {
  long long v = 0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
  if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
    throw std::invalid_argument(key + ": cannot parse integer \"" + value + "\"");
  }
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) {
      throw std::invalid_argument("grid: expected lo:hi:step");
    }
    const double lo = parse_double("grid", text.substr(0, c1));
    const double hi = parse_double("grid", text.substr(c1 + 1, c2 - c1 - 1));
    const double step = parse_double("grid", text.substr(c2 + 1));
    if (step <= 0.0 || hi < lo) throw std::invalid_argument("grid: bad range");
    for (double v = lo; v <= hi + 1e-12; v += step) grid.push_back(v);
    return grid;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string item =
        trim(comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos));
    if (item.empty()) throw std::invalid_argument("grid: empty entry");
    grid.push_back(parse_double("grid", item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (grid.empty()) throw std::invalid_argument("grid: no entries");
  return grid;
}

void apply_override(CliConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "command") {
    cfg.command = value;
  } else if (key == "topology") {
    cfg.topology = value;
  } else if (key == "algo") {
    cfg.algo = value;
  } else if (key == "n") {
    cfg.n = static_cast<int>(parse_int(key, value));
  } else if (key == "scenario") {
    cfg.scenario_file = value;
  } else if (key == "scenario_seed") {
    cfg.scenario_seed = static_cast<std::uint64_t>(parse_int(key, value));
  } else if (key == "alpha") {
    cfg.alpha = parse_double(key, value);
  } else if (key == "rho") {
    cfg.rho = parse_double(key, value);
  } else if (key == "runs") {
    cfg.runs = static_cast<int>(parse_int(key, value));
  } else if (key == "t_max") {
    cfg.t_max = static_cast<int>(parse_int(key, value));
  } else if (key == "seed") {
    cfg.seed = static_cast<std::uint64_t>(parse_int(key, value));
  } else if (key == "out") {
    cfg.out = value;
  } else if (key == "jobs") {
    cfg.jobs = static_cast<int>(parse_int(key, value));
  } else if (key == "alpha_grid") {
    cfg.alpha_grid = parse_grid(value);
  } else if (key == "rho_grid") {
    cfg.rho_grid = parse_grid(value);
  } else if (key == "weights") {
    cfg.weights_file = value;
  } else {
    throw std::invalid_argument("unknown configuration key: " + key);
  }
}

CliConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  CliConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected key=value");
    }
    apply_override(cfg, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
  }
  return cfg;
}

void CliConfig::validate() const {
  static const char* kCommands[] = {"run", "sweep", "verify-weights", "reproduce"};
  if (std::find(std::begin(kCommands), std::end(kCommands), command) ==
      std::end(kCommands)) {
    throw std::invalid_argument("command: expected run, sweep, verify-weights or reproduce");
  }
  static const char* kTopologies[] = {"complete", "line", "star", "ring"};
  if (std::find(std::begin(kTopologies), std::end(kTopologies), topology) ==
      std::end(kTopologies)) {
    throw std::invalid_argument("topology: expected complete, line, star or ring");
  }
  static const char* kAlgos[] = {"central-jsfp", "djsfp", "central-fp", "dfp"};
  if (std::find(std::begin(kAlgos), std::end(kAlgos), algo) == std::end(kAlgos)) {
    throw std::invalid_argument("algo: expected central-jsfp, djsfp, central-fp or dfp");
  }
  if (n < 1) throw std::invalid_argument("n: must be at least 1");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha: must lie in (0,1]");
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("rho: must lie in (0,1)");
  if (runs < 1) throw std::invalid_argument("runs: must be at least 1");
  if (t_max < 1) throw std::invalid_argument("t_max: must be at least 1");
  if (jobs < 1) throw std::invalid_argument("jobs: must be at least 1");
  for (double a : alpha_grid) {
    if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("alpha_grid: values must lie in (0,1)");
  }
  for (double r : rho_grid) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("rho_grid: values must lie in (0,1)");
  }
}

}  // namespace netfp
