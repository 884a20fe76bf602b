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

#include "netfp/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "netfp/errors.hpp"
#include "netfp/rng.hpp"

namespace netfp {
namespace {

CongestionFormGame build_coverage_game(const std::vector<std::vector<double>>& d) {
  const int n = static_cast<int>(d.size());
  std::vector<std::vector<std::vector<int>>> actions(n);
  std::vector<std::vector<std::vector<double>>> values(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(d[i].size()) != n) {
      throw std::invalid_argument("distance matrix must be square");
    }
    actions[i].resize(n);
    values[i].resize(n);
    for (int k = 0; k < n; ++k) {
      if (!(d[i][k] > 0.0)) {
        throw std::invalid_argument("distances must be positive");
      }
      actions[i][k] = {k};
      // Paid the inverse distance only when covering the object alone.
      values[i][k].assign(n + 1, 0.0);
      values[i][k][1] = 1.0 / d[i][k];
    }
  }
  return CongestionFormGame(n, std::move(actions), std::move(values));
}

}  // namespace

UavScenario make_uav_game(const std::vector<std::array<double, 2>>& uav_positions,
                          const std::vector<std::array<double, 2>>& object_positions) {
  const int n = static_cast<int>(uav_positions.size());
  if (n < 1 || object_positions.size() != uav_positions.size()) {
    throw std::invalid_argument("need equally many vehicles and objects");
  }
  std::vector<std::vector<double>> d(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double dx = uav_positions[i][0] - object_positions[k][0];
      const double dy = uav_positions[i][1] - object_positions[k][1];
      d[i][k] = std::sqrt(dx * dx + dy * dy);
      if (!(d[i][k] > 0.0)) {
        throw std::invalid_argument("coincident vehicle/object positions");
      }
    }
  }
  return UavScenario{n, uav_positions, object_positions, d, build_coverage_game(d)};
}

UavScenario make_uav_game(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need at least one vehicle");
  CounterRng rng(seed, 0xA110C8EDULL);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<std::array<double, 2>> uavs(n), objects(n);
    for (auto& p : uavs) p = {rng.next_unit(), rng.next_unit()};
    for (auto& p : objects) p = {rng.next_unit(), rng.next_unit()};
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int k = 0; k < n; ++k) {
        const double dx = uavs[i][0] - objects[k][0];
        const double dy = uavs[i][1] - objects[k][1];
        if (dx * dx + dy * dy <= 0.0) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return make_uav_game(uavs, objects);
  }
  throw ConstructionFailedError("distinct_positions",
                                "coincident positions after 100 resamples");
}

UavScenario make_uav_game_from_distances(const std::vector<std::vector<double>>& d) {
  return UavScenario{static_cast<int>(d.size()), {}, {}, d, build_coverage_game(d)};
}

double welfare(const CongestionFormGame& game, const ActionProfile& a) {
  const std::vector<int> loads = congestion_of_profile(game, a);
  double total = 0.0;
  for (int i = 0; i < game.num_players(); ++i) {
    for (int r : game.action_resources(i, a[i])) {
      total += game.resource_value(i, r, loads[r]);
    }
  }
  return total;
}

double welfare(const NormalFormGame& game, const ActionProfile& a) {
  double total = 0.0;
  for (int i = 0; i < game.num_players(); ++i) total += game.payoff(i, a);
  return total;
}

double optimal_welfare(const CongestionFormGame& game, long long cap) {
  long long joint = 1;
  for (int c : game.action_counts()) {
    if (joint > cap / c) {
      throw EnumerationCapError("optimal_welfare: joint action space exceeds cap");
    }
    joint *= c;
  }
  double best = -HUGE_VAL;
  ActionProfile a(game.num_players(), 0);
  do {
    best = std::max(best, welfare(game, a));
  } while (next_profile(a, game.action_counts()));
  return best;
}

const char* algo_name(Algo a) {
  switch (a) {
    case Algo::kCentralJsfp: return "central-jsfp";
    case Algo::kDjsfp: return "djsfp";
    case Algo::kCentralFp: return "central-fp";
    case Algo::kDfp: return "dfp";
  }
  return "unknown";
}

Algo algo_from_name(const std::string& name) {
  if (name == "central-jsfp") return Algo::kCentralJsfp;
  if (name == "djsfp") return Algo::kDjsfp;
  if (name == "central-fp") return Algo::kCentralFp;
  if (name == "dfp") return Algo::kDfp;
  throw std::invalid_argument("unknown algorithm: " + name);
}

double stable_mean(std::vector<double> values) {
  if (values.empty()) return std::nan("");
  std::sort(values.begin(), values.end());
  double acc = 0.0;
  for (double v : values) acc += v;
  return acc / static_cast<double>(values.size());
}

namespace {

struct EnsembleContext {
  const UavScenario* scenario = nullptr;
  const NormalFormGame* normal = nullptr;  // only for the FP algorithms
  const CommGraph* graph = nullptr;
  const FpWeightSet* fp_weights = nullptr;
  const DsMatrix* ds = nullptr;
  Algo algo = Algo::kDjsfp;
};

RunTrace run_once(const EnsembleContext& ctx, const DynamicsConfig& cfg) {
  switch (ctx.algo) {
    case Algo::kCentralJsfp: return run_jsfp_central(ctx.scenario->game, cfg);
    case Algo::kDjsfp: return run_djsfp(ctx.scenario->game, *ctx.graph, *ctx.ds, cfg);
    case Algo::kCentralFp: return run_fp_inertia(*ctx.normal, cfg);
    case Algo::kDfp: return run_dfp(*ctx.normal, *ctx.graph, *ctx.fp_weights, cfg);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace

EnsembleResult run_ensemble(const UavScenario& scenario, Topology topology,
                            Algo algo, const DynamicsConfig& cfg, int runs,
                            int jobs, std::vector<RunTrace>* traces_out) {
  if (runs < 1) throw std::invalid_argument("need at least one run");
  cfg.validate();

  EnsembleContext ctx;
  ctx.scenario = &scenario;
  ctx.algo = algo;

  CommGraph graph = CommGraph::make(topology, scenario.n);
  std::optional<NormalFormGame> normal;
  std::optional<FpWeightSet> fp_weights;
  std::optional<DsMatrix> ds;
  if (algo == Algo::kCentralFp || algo == Algo::kDfp) {
    normal.emplace(to_normal_form(scenario.game));
    ctx.normal = &*normal;
  }
  if (algo == Algo::kDfp) {
    fp_weights.emplace(build_fp_weights(graph));
    ctx.fp_weights = &*fp_weights;
  }
  if (algo == Algo::kDjsfp) {
    ds.emplace(build_doubly_stochastic(graph));
    ctx.ds = &*ds;
  }
  ctx.graph = &graph;

  std::vector<RunTrace> traces(runs);
  const int workers = std::max(1, std::min(jobs, runs));
  if (workers == 1) {
    for (int r = 0; r < runs; ++r) {
      DynamicsConfig run_cfg = cfg;
      run_cfg.seed = cfg.seed + static_cast<std::uint64_t>(r);
      traces[r] = run_once(ctx, run_cfg);
    }
  } else {
    std::atomic<int> cursor{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int r = cursor.fetch_add(1); r < runs; r = cursor.fetch_add(1)) {
          DynamicsConfig run_cfg = cfg;
          run_cfg.seed = cfg.seed + static_cast<std::uint64_t>(r);
          traces[r] = run_once(ctx, run_cfg);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  EnsembleResult result;
  result.algo = algo;
  result.topology = topology;
  result.alpha = cfg.alpha;
  result.rho = cfg.rho;
  result.optimal_welfare = optimal_welfare(scenario.game);

  int horizon = 0;
  for (auto& trace : traces) {
    trace.welfare.resize(trace.rounds());
    for (int t = 0; t < trace.rounds(); ++t) {
      trace.welfare[t] = welfare(scenario.game, trace.actions[t]);
    }
    horizon = std::max(horizon, trace.rounds());

    RunSummary s;
    s.seed = trace.seed;
    s.rounds = trace.rounds();
    s.absorbed_at = trace.absorbed_at;
    s.terminal_welfare = trace.welfare.back();
    s.terminal_normalized_welfare = s.terminal_welfare / result.optimal_welfare;
    result.runs.push_back(s);
    result.welfare.push_back(trace.welfare);
  }

  result.mean_normalized_welfare.resize(horizon);
  std::vector<double> column(runs);
  for (int t = 0; t < horizon; ++t) {
    for (int r = 0; r < runs; ++r) {
      const auto& w = result.welfare[r];
      column[r] = (t < static_cast<int>(w.size()) ? w[t] : w.back()) /
                  result.optimal_welfare;
    }
    result.mean_normalized_welfare[t] = stable_mean(column);
  }

  std::vector<double> convergence;
  for (const auto& s : result.runs) {
    if (s.absorbed_at.has_value()) convergence.push_back(*s.absorbed_at);
  }
  result.absorbed_count = static_cast<int>(convergence.size());
  result.absorbed_fraction = static_cast<double>(result.absorbed_count) / runs;
  result.mean_convergence_time = stable_mean(convergence);
  if (convergence.size() > 1) {
    double sq = 0.0;
    for (double c : convergence) {
      const double d = c - result.mean_convergence_time;
      sq += d * d;
    }
    result.sd_convergence_time = std::sqrt(sq / (convergence.size() - 1.0));
  } else {
    result.sd_convergence_time = 0.0;
  }
  if (traces_out != nullptr) *traces_out = std::move(traces);
  return result;
}

TopologyComparison topology_comparison(const UavScenario& scenario,
                                       const DynamicsConfig& cfg, int runs,
                                       int jobs) {
  TopologyComparison out;
  for (Topology t : {Topology::kComplete, Topology::kLine, Topology::kStar,
                     Topology::kRing}) {
    const Algo algo = t == Topology::kComplete ? Algo::kCentralJsfp : Algo::kDjsfp;
    out.per_topology.push_back(run_ensemble(scenario, t, algo, cfg, runs, jobs));
  }
  return out;
}

std::vector<SweepCell> parameter_sweep(const UavScenario& scenario,
                                       Topology topology,
                                       const std::vector<double>& alpha_grid,
                                       const std::vector<double>& rho_grid,
                                       const DynamicsConfig& cfg, int runs,
                                       int jobs) {
  for (double a : alpha_grid) {
    if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("alpha grid must lie in (0,1)");
  }
  for (double r : rho_grid) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("rho grid must lie in (0,1)");
  }
  const Algo algo =
      topology == Topology::kComplete ? Algo::kCentralJsfp : Algo::kDjsfp;
  std::vector<SweepCell> cells;
  for (double alpha : alpha_grid) {
    for (double rho : rho_grid) {
      DynamicsConfig cell_cfg = cfg;
      cell_cfg.alpha = alpha;
      cell_cfg.rho = rho;
      const EnsembleResult r =
          run_ensemble(scenario, topology, algo, cell_cfg, runs, jobs);
      SweepCell cell;
      cell.alpha = alpha;
      cell.rho = rho;
      cell.mean_convergence_time = r.mean_convergence_time;
      cell.absorbed_fraction = r.absorbed_fraction;
      cell.slow_regime = alpha > 0.7 && rho < 0.3;
      cells.push_back(cell);
    }
  }
  return cells;
}

std::array<double, 4> reference_convergence_times(Topology t) {
  switch (t) {
    case Topology::kComplete: return {22, 22, 25, 38};
    case Topology::kLine: return {146, 148, 162, 104};
    case Topology::kStar: return {404, 430, 364, 245};
    case Topology::kRing: return {30, 33, 34, 37};
  }
  throw std::invalid_argument("unknown topology");
}

const UavScenario& reference_scenario() {
  // Frozen positions for regression artifacts; the JSON copy in data/ is
  // generated from these.
  static const UavScenario scenario = make_uav_game(
      {{0.6682196600044612, 0.36541297260576677},
       {0.84012151083927378, 0.010943942635515125},
       {0.5231995109856038, 0.36059822170573941},
       {0.4766684391480952, 0.27570218233475763},
       {0.61630085093630171, 0.38589085175847893}},
      {{0.77799672893951177, 0.5290003414628921},
       {0.093520729208329434, 0.86247384076743028},
       {0.034374096080128425, 0.0074229631356561576},
       {0.10437386765004386, 0.24973436594167397},
       {0.98085948501483922, 0.35964340118161109}});
  return scenario;
}

}  // namespace netfp
