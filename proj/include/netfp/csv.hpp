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

#ifndef NETFP_CSV_HPP_
#define NETFP_CSV_HPP_

#include <string>
#include <vector>

#include "netfp/dynamics.hpp"
#include "netfp/experiments.hpp"

// CSV artifacts. Every file starts with a "# config: ..." comment recording
// the exact configuration and seed, then a header row. Numbers are printed
// with shortest round-trip formatting, so identical configurations produce
// byte-identical files.

namespace netfp {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

// "key=value key=value ..." stamp used in the CSV comment line.
std::string config_stamp(const DynamicsConfig& cfg,
                         const std::vector<std::pair<std::string, std::string>>& extra);

// welfare_trace.csv: topology, run_id, t, welfare, normalized_welfare
void write_welfare_trace(const std::string& path,
                         const std::vector<EnsembleResult>& ensembles,
                         const std::string& stamp);

// summary.csv: topology, algo, alpha, rho, runs, mean_convergence_time, sd,
// absorbed_fraction
void write_summary(const std::string& path,
                   const std::vector<EnsembleResult>& ensembles,
                   const std::string& stamp);

// sweep.csv: alpha, rho, mean_convergence_time
void write_sweep(const std::string& path, const std::vector<SweepCell>& cells,
                 const std::string& stamp);

// trace.csv: run_id, t, joint action ('-' delimited), max estimate error,
// absorbed flag
void write_run_trace(const std::string& path, const std::vector<RunTrace>& traces,
                     const std::string& stamp);

}  // namespace netfp

#endif  // NETFP_CSV_HPP_
