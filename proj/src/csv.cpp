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

#include "netfp/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace netfp {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string config_stamp(const DynamicsConfig& cfg,
                         const std::vector<std::pair<std::string, std::string>>& extra) {
  std::string s = "alpha=" + format_double(cfg.alpha) + " rho=" + format_double(cfg.rho) +
                  " t_max=" + std::to_string(cfg.t_max) +
                  " seed=" + std::to_string(cfg.seed) +
                  " absorption_window=" + std::to_string(cfg.absorption_window);
  for (const auto& [k, v] : extra) s += " " + k + "=" + v;
  return s;
}

namespace {

std::ofstream open_csv(const std::string& path, const std::string& stamp) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << "# config: " << stamp << "\n";
  return out;
}

}  // namespace

void write_welfare_trace(const std::string& path,
                         const std::vector<EnsembleResult>& ensembles,
                         const std::string& stamp) {
  std::ofstream out = open_csv(path, stamp);
  out << "topology,run_id,t,welfare,normalized_welfare\n";
  for (const auto& e : ensembles) {
    for (std::size_t r = 0; r < e.welfare.size(); ++r) {
      for (std::size_t t = 0; t < e.welfare[r].size(); ++t) {
        out << topology_name(e.topology) << ',' << r << ',' << (t + 1) << ','
            << format_double(e.welfare[r][t]) << ','
            << format_double(e.welfare[r][t] / e.optimal_welfare) << '\n';
      }
    }
  }
}

void write_summary(const std::string& path,
                   const std::vector<EnsembleResult>& ensembles,
                   const std::string& stamp) {
  std::ofstream out = open_csv(path, stamp);
  out << "topology,algo,alpha,rho,runs,mean_convergence_time,sd_convergence_time,"
         "absorbed_fraction\n";
  for (const auto& e : ensembles) {
    out << topology_name(e.topology) << ',' << algo_name(e.algo) << ','
        << format_double(e.alpha) << ',' << format_double(e.rho) << ','
        << e.runs.size() << ',' << format_double(e.mean_convergence_time) << ','
        << format_double(e.sd_convergence_time) << ','
        << format_double(e.absorbed_fraction) << '\n';
  }
}

void write_sweep(const std::string& path, const std::vector<SweepCell>& cells,
                 const std::string& stamp) {
  std::ofstream out = open_csv(path, stamp);
  out << "alpha,rho,mean_convergence_time\n";
  for (const auto& c : cells) {
    out << format_double(c.alpha) << ',' << format_double(c.rho) << ','
        << format_double(c.mean_convergence_time) << '\n';
  }
}

void write_run_trace(const std::string& path, const std::vector<RunTrace>& traces,
                     const std::string& stamp) {
  std::ofstream out = open_csv(path, stamp);
  out << "run_id,t,joint_action,max_estimate_error,absorbed\n";
  for (std::size_t r = 0; r < traces.size(); ++r) {
    const RunTrace& trace = traces[r];
    for (int t = 0; t < trace.rounds(); ++t) {
      out << r << ',' << (t + 1) << ',';
      const ActionProfile& a = trace.actions[t];
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out << '-';
        out << a[i];
      }
      const bool absorbed =
          trace.absorbed_at.has_value() && (t + 1) >= *trace.absorbed_at;
      out << ',' << format_double(trace.estimate_error[t]) << ','
          << (absorbed ? 1 : 0) << '\n';
    }
  }
}

}  // namespace netfp
