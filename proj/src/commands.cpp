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

#include "netfp/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "netfp/csv.hpp"
#include "netfp/errors.hpp"
#include "netfp/experiments.hpp"
#include "netfp/serialization.hpp"
#include "netfp/weights.hpp"

namespace netfp {
namespace {

using nlohmann::json;

DynamicsConfig dynamics_config(const CliConfig& cfg) {
  DynamicsConfig dyn;
  dyn.alpha = cfg.alpha;
  dyn.rho = cfg.rho;
  dyn.t_max = cfg.t_max;
  dyn.seed = cfg.seed;
  return dyn;
}

UavScenario resolve_scenario(const CliConfig& cfg) {
  if (!cfg.scenario_file.empty()) return load_scenario(cfg.scenario_file);
  if (cfg.scenario_seed.has_value()) return make_uav_game(cfg.n, *cfg.scenario_seed);
  if (cfg.n == 5) return reference_scenario();
  return make_uav_game(cfg.n, 1);
}

std::string out_path(const CliConfig& cfg, const char* name) {
  std::filesystem::create_directories(cfg.out);
  return (std::filesystem::path(cfg.out) / name).string();
}

std::vector<std::pair<std::string, std::string>> stamp_extra(const CliConfig& cfg) {
  return {{"command", cfg.command},
          {"topology", cfg.topology},
          {"algo", cfg.algo},
          {"runs", std::to_string(cfg.runs)},
          {"n", std::to_string(cfg.n)},
          {"scenario", cfg.scenario_file.empty()
                           ? (cfg.scenario_seed ? "seed:" + std::to_string(*cfg.scenario_seed)
                                                : "reference")
                           : cfg.scenario_file}};
}

void log_ensemble(std::ostream& log, const EnsembleResult& e) {
  log << topology_name(e.topology) << " " << algo_name(e.algo)
      << ": absorbed " << e.absorbed_count << "/" << e.runs.size()
      << ", mean convergence " << format_double(e.mean_convergence_time)
      << " (sd " << format_double(e.sd_convergence_time) << ")\n";
}

void print_report(std::ostream& log, const std::string& label,
                  const ValidationReport& report) {
  for (const auto& c : report.conditions) {
    log << label << " " << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.witness.empty()) log << " (" << c.witness << ")";
    log << "\n";
  }
}

}  // namespace

int cmd_run(const CliConfig& cfg, std::ostream& log) {
  const UavScenario scenario = resolve_scenario(cfg);
  const DynamicsConfig dyn = dynamics_config(cfg);
  std::vector<RunTrace> traces;
  const EnsembleResult e =
      run_ensemble(scenario, topology_from_name(cfg.topology),
                   algo_from_name(cfg.algo), dyn, cfg.runs, cfg.jobs, &traces);
  const std::string stamp = config_stamp(dyn, stamp_extra(cfg));
  write_welfare_trace(out_path(cfg, "welfare_trace.csv"), {e}, stamp);
  write_summary(out_path(cfg, "summary.csv"), {e}, stamp);
  write_run_trace(out_path(cfg, "trace.csv"), traces, stamp);
  log_ensemble(log, e);
  return 0;
}

int cmd_sweep(const CliConfig& cfg, std::ostream& log) {
  const UavScenario scenario = resolve_scenario(cfg);
  const DynamicsConfig dyn = dynamics_config(cfg);
  std::vector<double> alpha_grid = cfg.alpha_grid;
  std::vector<double> rho_grid = cfg.rho_grid;
  if (alpha_grid.empty()) alpha_grid = parse_grid("0.1:0.9:0.1");
  if (rho_grid.empty()) rho_grid = parse_grid("0.1:0.9:0.1");

  const std::vector<SweepCell> cells =
      parameter_sweep(scenario, topology_from_name(cfg.topology), alpha_grid,
                      rho_grid, dyn, cfg.runs, cfg.jobs);
  write_sweep(out_path(cfg, "sweep.csv"), cells, config_stamp(dyn, stamp_extra(cfg)));
  for (const auto& c : cells) {
    if (c.slow_regime) {
      log << "slow regime alpha=" << format_double(c.alpha)
          << " rho=" << format_double(c.rho)
          << ": mean convergence " << format_double(c.mean_convergence_time) << "\n";
    }
  }
  log << "sweep: " << cells.size() << " cells -> sweep.csv\n";
  return 0;
}

int cmd_verify_weights(const CliConfig& cfg, std::ostream& log) {
  bool all_pass = true;

  if (!cfg.weights_file.empty()) {
    const WeightFile wf = load_weight_file(cfg.weights_file);
    const int n = wf.matrices.front().rows();
    const CommGraph graph = CommGraph::make(topology_from_name(cfg.topology), n);
    if (wf.type == "ds") {
      const ValidationReport report = verify_ds_conditions(wf.matrices.front(), graph);
      print_report(log, "ds", report);
      all_pass = report.all_pass();
    } else {
      for (int j = 0; j < static_cast<int>(wf.matrices.size()); ++j) {
        const ValidationReport report =
            verify_fp_weight_matrix(wf.matrices[j], j, graph);
        print_report(log, "fp source" + std::to_string(j), report);
        all_pass = all_pass && report.all_pass();
      }
    }
    return all_pass ? 0 : 1;
  }

  const CommGraph graph = CommGraph::make(topology_from_name(cfg.topology), cfg.n);
  try {
    const FpWeightSet ws = build_fp_weights(graph);
    const ValidationReport report = verify_fp_weight_conditions(ws, graph);
    print_report(log, "fp", report);
    for (int j = 0; j < graph.num_nodes(); ++j) {
      log << "fp source" << j << " lambda=" << format_double(ws.contraction(j)) << "\n";
    }
    all_pass = all_pass && report.all_pass();
  } catch (const ConstructionFailedError& err) {
    log << "fp construction failed: " << err.condition() << ": " << err.what() << "\n";
    all_pass = false;
  }
  try {
    const DsMatrix ds = build_doubly_stochastic(graph);
    const ValidationReport report = verify_ds_conditions(ds.w, graph);
    print_report(log, "ds", report);
    log << "ds lambda=" << format_double(ds.slem) << "\n";
    all_pass = all_pass && report.all_pass();
  } catch (const ConstructionFailedError& err) {
    log << "ds construction failed: " << err.condition() << ": " << err.what() << "\n";
    all_pass = false;
  }
  return all_pass ? 0 : 1;
}

int cmd_reproduce(const CliConfig& cfg, std::ostream& log) {
  const UavScenario scenario = resolve_scenario(cfg);
  DynamicsConfig dyn = dynamics_config(cfg);

  // Welfare curves for the four networks at the configured alpha/rho.
  const TopologyComparison comparison =
      topology_comparison(scenario, dyn, cfg.runs, cfg.jobs);
  const std::string stamp = config_stamp(dyn, stamp_extra(cfg));
  write_welfare_trace(out_path(cfg, "welfare_trace.csv"), comparison.per_topology, stamp);

  // Convergence-time grid: every network over the reference inertia values
  // at the study's step size.
  std::vector<EnsembleResult> summary_rows;
  for (const EnsembleResult& base : comparison.per_topology) {
    for (double rho : kReferenceRhoGrid) {
      DynamicsConfig cell = dyn;
      cell.alpha = 0.2;
      cell.rho = rho;
      summary_rows.push_back(run_ensemble(scenario, base.topology, base.algo, cell,
                                          cfg.runs, cfg.jobs));
    }
  }
  write_summary(out_path(cfg, "summary.csv"), summary_rows, stamp);

  // Compare the rho = 0.2 column against the published values.
  json cells = json::array();
  double measured_rho02[4] = {0, 0, 0, 0};
  for (std::size_t row = 0; row < summary_rows.size(); ++row) {
    const EnsembleResult& e = summary_rows[row];
    const std::array<double, 4> ref = reference_convergence_times(e.topology);
    const std::size_t col = row % kReferenceRhoGrid.size();
    const double lo = ref[col] / 2.0, hi = ref[col] * 2.0;
    if (col == 0) measured_rho02[row / kReferenceRhoGrid.size()] = e.mean_convergence_time;
    cells.push_back({{"topology", topology_name(e.topology)},
                     {"algo", algo_name(e.algo)},
                     {"rho", kReferenceRhoGrid[col]},
                     {"measured_mean", e.mean_convergence_time},
                     {"reference_mean", ref[col]},
                     {"band", {lo, hi}},
                     {"within_band", e.mean_convergence_time >= lo &&
                                         e.mean_convergence_time <= hi},
                     {"absorbed_fraction", e.absorbed_fraction}});
  }

  const double central = measured_rho02[0], line = measured_rho02[1],
               star = measured_rho02[2], ring = measured_rho02[3];
  const bool ordering_ok = central < ring && ring < line && line < star;
  const bool central_in_band = central >= 11.0 && central <= 44.0;

  json report;
  report["cells"] = std::move(cells);
  report["ordering"] = {{"expected", "complete < ring < line < star"},
                        {"measured", {central, ring, line, star}},
                        {"ok", ordering_ok}};
  report["central_band"] = {{"band", {11.0, 44.0}},
                            {"measured", central},
                            {"ok", central_in_band}};

  // Welfare similarity across networks at the end of the horizon.
  json terminal = json::object();
  double lo_w = 1.0, hi_w = 0.0;
  for (const EnsembleResult& e : comparison.per_topology) {
    const double w = e.mean_normalized_welfare.back();
    terminal[topology_name(e.topology)] = w;
    lo_w = std::min(lo_w, w);
    hi_w = std::max(hi_w, w);
  }
  report["terminal_normalized_welfare"] = std::move(terminal);
  report["terminal_welfare_spread"] = hi_w - lo_w;

  std::ofstream report_file(out_path(cfg, "report.json"));
  report_file << report.dump(2) << '\n';

  for (const EnsembleResult& e : summary_rows) log_ensemble(log, e);
  log << "ordering " << (ordering_ok ? "ok" : "VIOLATED") << "; central mean "
      << format_double(central) << (central_in_band ? " within" : " OUTSIDE")
      << " [11,44]\n";
  return (ordering_ok && central_in_band) ? 0 : 1;
}

int dispatch_command(const CliConfig& cfg, std::ostream& log) {
  cfg.validate();
  if (cfg.command == "run") return cmd_run(cfg, log);
  if (cfg.command == "sweep") return cmd_sweep(cfg, log);
  if (cfg.command == "verify-weights") return cmd_verify_weights(cfg, log);
  return cmd_reproduce(cfg, log);
}

}  // namespace netfp
