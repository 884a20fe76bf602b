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

#ifndef NETFP_COMMANDS_HPP_
#define NETFP_COMMANDS_HPP_

#include <iosfwd>
#include <string>

#include "netfp/cli_config.hpp"

namespace netfp {

// Batch commands behind the CLI. Each returns a process exit code: zero iff
// all requested work completed and every validation passed. Artifacts land
// in cfg.out (created if missing):
//   run        -> welfare_trace.csv, summary.csv, trace.csv
//   sweep      -> sweep.csv
//   reproduce  -> welfare_trace.csv, summary.csv, report.json
//   verify-weights -> report on stdout only
int cmd_run(const CliConfig& cfg, std::ostream& log);
int cmd_sweep(const CliConfig& cfg, std::ostream& log);
int cmd_verify_weights(const CliConfig& cfg, std::ostream& log);
int cmd_reproduce(const CliConfig& cfg, std::ostream& log);

int dispatch_command(const CliConfig& cfg, std::ostream& log);

}  // namespace netfp

#endif  // NETFP_COMMANDS_HPP_
