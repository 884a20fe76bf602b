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

#ifndef NETFP_EXPERIMENTS_HPP_
#define NETFP_EXPERIMENTS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netfp/congestion.hpp"
#include "netfp/dynamics.hpp"
#include "netfp/game.hpp"
#include "netfp/graph.hpp"

namespace netfp {

// Target-coverage scenario: equally many vehicles and objects on the unit
// square; each vehicle picks one object per round and is paid the inverse of
// its distance to the object if it covers it alone, zero otherwise. Covering
// all objects is exactly the set of pure equilibria.
struct UavScenario {
  int n = 0;
  std::vector<std::array<double, 2>> uav_positions;     // empty if synthetic
  std::vector<std::array<double, 2>> object_positions;  // empty if synthetic
  std::vector<std::vector<double>> distance;            // distance[i][k] > 0
  CongestionFormGame game;
};

// Random scenario: positions uniform on the unit square from the seed.
// Throws ConstructionFailedError if coincident positions persist across 100
// resamples.
UavScenario make_uav_game(int n, std::uint64_t seed);

// Scenario from explicit positions.
UavScenario make_uav_game(const std::vector<std::array<double, 2>>& uav_positions,
                          const std::vector<std::array<double, 2>>& object_positions);

// Scenario from an explicit distance matrix (no geometry).
UavScenario make_uav_game_from_distances(const std::vector<std::vector<double>>& d);

// The fixed scenario used by the regression artifacts; also shipped as
// data/reference_scenario.json.
const UavScenario& reference_scenario();

double welfare(const CongestionFormGame& game, const ActionProfile& a);
double welfare(const NormalFormGame& game, const ActionProfile& a);
double optimal_welfare(const CongestionFormGame& game,
                       long long cap = kDefaultEnumerationCap);

enum class Algo { kCentralJsfp, kDjsfp, kCentralFp, kDfp };
const char* algo_name(Algo a);
Algo algo_from_name(const std::string& name);

struct RunSummary {
  std::uint64_t seed = 0;
  int rounds = 0;
  std::optional<int> absorbed_at;
  double terminal_welfare = 0.0;
  double terminal_normalized_welfare = 0.0;

  bool operator==(const RunSummary&) const = default;
};

struct EnsembleResult {
  Algo algo = Algo::kDjsfp;
  Topology topology = Topology::kComplete;
  double alpha = 0.0, rho = 0.0;
  double optimal_welfare = 0.0;
  std::vector<RunSummary> runs;
  std::vector<std::vector<double>> welfare;  // per run, per round
  // Mean normalized welfare per round over runs; finished runs hold their
  // terminal value until the ensemble horizon.
  std::vector<double> mean_normalized_welfare;
  double absorbed_fraction = 0.0;
  int absorbed_count = 0;
  // Over absorbed runs; NaN when none absorbed.
  double mean_convergence_time = 0.0;
  double sd_convergence_time = 0.0;

  bool operator==(const EnsembleResult&) const = default;
};

// `runs` independent runs with seeds cfg.seed, cfg.seed+1, ...; deterministic
// for a fixed base seed regardless of jobs. The central algorithms ignore the
// topology's graph; the complete topology is the conventional pairing for
// them. When `traces_out` is given it receives the full per-run traces
// (welfare filled in), in run order.
EnsembleResult run_ensemble(const UavScenario& scenario, Topology topology,
                            Algo algo, const DynamicsConfig& cfg, int runs,
                            int jobs = 1, std::vector<RunTrace>* traces_out = nullptr);

// The four networks of the coverage study: the complete network runs the
// central joint-strategy algorithm, the sparse ones its distributed variant.
struct TopologyComparison {
  std::vector<EnsembleResult> per_topology;  // complete, line, star, ring
};
TopologyComparison topology_comparison(const UavScenario& scenario,
                                       const DynamicsConfig& cfg, int runs,
                                       int jobs = 1);

struct SweepCell {
  double alpha = 0.0, rho = 0.0;
  double mean_convergence_time = 0.0;
  double absorbed_fraction = 0.0;
  // Marks the regime (alpha > 0.7, rho < 0.3) where convergence degrades:
  // statistics chase current play and everyone best-responds at once.
  bool slow_regime = false;

  bool operator==(const SweepCell&) const = default;
};
std::vector<SweepCell> parameter_sweep(const UavScenario& scenario,
                                       Topology topology,
                                       const std::vector<double>& alpha_grid,
                                       const std::vector<double>& rho_grid,
                                       const DynamicsConfig& cfg, int runs,
                                       int jobs = 1);

// Published mean convergence times for the coverage study at alpha = 0.2,
// rho in {0.2, 0.4, 0.6, 0.8}; comparisons carry a +/-100% band since the
// study's geometry is not part of the published record.
inline constexpr std::array<double, 4> kReferenceRhoGrid{0.2, 0.4, 0.6, 0.8};
std::array<double, 4> reference_convergence_times(Topology t);

// Mean whose value depends only on the multiset of inputs (summands are
// sorted first), so ensemble aggregation is permutation invariant exactly.
double stable_mean(std::vector<double> values);

}  // namespace netfp

#endif  // NETFP_EXPERIMENTS_HPP_
