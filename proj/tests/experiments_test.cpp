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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "netfp/errors.hpp"
#include "netfp/experiments.hpp"
#include "netfp/serialization.hpp"

using namespace netfp;

namespace {

DynamicsConfig study_cfg() {
  DynamicsConfig cfg;
  cfg.alpha = 0.2;
  cfg.rho = 0.2;
  cfg.t_max = 100000;
  cfg.seed = 1;
  return cfg;
}

}  // namespace

TEST_CASE("single-vehicle scenario: one equilibrium worth the inverse distance") {
  const UavScenario s = make_uav_game_from_distances({{0.5}});
  const NormalFormGame nf = to_normal_form(s.game);
  CHECK(find_pure_nash(nf) == std::vector<ActionProfile>{{0}});
  CHECK(nf.payoff(0, {0}) == doctest::Approx(2.0));
}

TEST_CASE("two-vehicle scenario: both assignments are strict equilibria") {
  const UavScenario s = make_uav_game_from_distances({{1.0, 2.0}, {2.0, 1.0}});
  const NormalFormGame nf = to_normal_form(s.game);
  const std::vector<ActionProfile> ne = find_pure_nash(nf);
  CHECK(ne == std::vector<ActionProfile>{{0, 1}, {1, 0}});
  for (const auto& a : ne) CHECK(is_strict_pure_nash(nf, a));
  CHECK(welfare(s.game, {0, 1}) == doctest::Approx(2.0));
  CHECK(welfare(s.game, {1, 0}) == doctest::Approx(1.0));
  CHECK(optimal_welfare(s.game) == doctest::Approx(2.0));
}

TEST_CASE("five-vehicle scenario: equilibria are exactly the covering assignments") {
  const UavScenario s = make_uav_game(5, 123);
  const NormalFormGame nf = to_normal_form(s.game);
  const std::vector<ActionProfile> ne = find_pure_nash(nf);
  CHECK(ne.size() == 120);
  for (const auto& a : ne) {
    const std::set<Action> targets(a.begin(), a.end());
    CHECK(targets.size() == 5);
    CHECK(is_strict_pure_nash(nf, a));  // distinct random distances
  }
  // congestion evaluation agrees with the dense tensor everywhere
  ActionProfile a(5, 0);
  do {
    std::vector<int> loads = congestion_of_profile(s.game, a);
    for (int i = 0; i < 5; ++i) {
      std::vector<int> others = loads;
      --others[a[i]];
      CHECK(nf.payoff(i, a) == s.game.utility(i, a[i], others));
    }
  } while (next_profile(a, s.game.action_counts()));
}

TEST_CASE("equilibrium structure holds for smaller scenario sizes") {
  for (int n = 2; n <= 4; ++n) {
    const UavScenario s = make_uav_game(n, 300 + n);
    const NormalFormGame nf = to_normal_form(s.game);
    int factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    const std::vector<ActionProfile> ne = find_pure_nash(nf);
    CHECK(static_cast<int>(ne.size()) == factorial);
    for (const auto& a : ne) {
      const std::set<Action> targets(a.begin(), a.end());
      CHECK(static_cast<int>(targets.size()) == n);
    }
  }
}

TEST_CASE("welfare: piling onto one object earns nothing") {
  const UavScenario s = make_uav_game(5, 124);
  CHECK(welfare(s.game, {2, 2, 2, 2, 2}) == 0.0);
}

TEST_CASE("welfare overloads agree across game representations") {
  const UavScenario s = make_uav_game(3, 128);
  const NormalFormGame nf = to_normal_form(s.game);
  ActionProfile a(3, 0);
  do {
    CHECK(welfare(nf, a) == welfare(s.game, a));
  } while (next_profile(a, s.game.action_counts()));
}

TEST_CASE("optimal welfare dominates every profile") {
  const UavScenario s = make_uav_game(4, 125);
  const double opt = optimal_welfare(s.game);
  ActionProfile a(4, 0);
  do {
    CHECK(welfare(s.game, a) <= opt + 1e-12);
  } while (next_profile(a, s.game.action_counts()));
}

TEST_CASE("scenario geometry: distances positive, utilities follow the inverse law") {
  const UavScenario s = make_uav_game(5, 126);
  for (int i = 0; i < 5; ++i) {
    for (int k = 0; k < 5; ++k) {
      CHECK(s.distance[i][k] > 0.0);
      CHECK(s.game.resource_value(i, k, 1) == doctest::Approx(1.0 / s.distance[i][k]));
      for (int load = 2; load <= 5; ++load) {
        CHECK(s.game.resource_value(i, k, load) == 0.0);
      }
    }
  }
}

TEST_CASE("coverage utility: alone at distance two pays a half, contested pays zero") {
  const UavScenario s = make_uav_game_from_distances({{2.0, 1.0}, {1.0, 4.0}});
  const std::vector<int> uncontested{0, 0};
  CHECK(congestion_utility(s.game, 0, {0}, uncontested) == 0.5);
  const std::vector<int> contested{1, 0};
  CHECK(congestion_utility(s.game, 0, {0}, contested) == 0.0);
}

TEST_CASE("scenario serialization round-trips") {
  const UavScenario s = make_uav_game(4, 127);
  const std::string path = "scenario_roundtrip_test.json";
  save_scenario(s, path);
  const UavScenario loaded = load_scenario(path);
  CHECK(loaded.n == 4);
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      CHECK(loaded.distance[i][k] == s.distance[i][k]);  // bit exact
    }
  }
  std::remove(path.c_str());
}

TEST_CASE("ensembles are deterministic and normalized welfare stays in range") {
  const UavScenario& s = reference_scenario();
  DynamicsConfig cfg = study_cfg();
  const EnsembleResult a = run_ensemble(s, Topology::kRing, Algo::kDjsfp, cfg, 12, 1);
  const EnsembleResult b = run_ensemble(s, Topology::kRing, Algo::kDjsfp, cfg, 12, 2);
  CHECK(a == b);  // jobs must not affect results

  CHECK(a.absorbed_fraction == 1.0);
  for (const auto& run : a.runs) {
    CHECK(run.terminal_normalized_welfare <= 1.0 + 1e-12);
    CHECK(run.terminal_normalized_welfare >= 0.0);
  }
  for (double w : a.mean_normalized_welfare) {
    CHECK(w <= 1.0 + 1e-12);
    CHECK(w >= 0.0);
  }
  // the ensemble improves on its round-1 welfare
  CHECK(a.mean_normalized_welfare.back() > a.mean_normalized_welfare.front());
}

TEST_CASE("ensemble seeds are consecutive and traces reproducible run by run") {
  const UavScenario& s = reference_scenario();
  DynamicsConfig cfg = study_cfg();
  const EnsembleResult e = run_ensemble(s, Topology::kComplete, Algo::kCentralJsfp, cfg, 5, 1);
  REQUIRE(e.runs.size() == 5);
  for (int r = 0; r < 5; ++r) {
    CHECK(e.runs[r].seed == cfg.seed + static_cast<std::uint64_t>(r));
  }
  DynamicsConfig cfg3 = cfg;
  cfg3.seed = cfg.seed + 3;
  const RunTrace solo = run_jsfp_central(s.game, cfg3);
  CHECK(solo.absorbed_at == e.runs[3].absorbed_at);
  CHECK(solo.rounds() == e.runs[3].rounds);
}

TEST_CASE("stable mean ignores input order") {
  std::vector<double> values{0.1, 0.7, 1.0 / 3.0, 0.25, 1e-9, 5.5};
  std::vector<double> shuffled{5.5, 1e-9, 0.25, 0.1, 1.0 / 3.0, 0.7};
  CHECK(stable_mean(values) == stable_mean(shuffled));  // bit exact
}

TEST_CASE("central and distributed joint-strategy play agree on the complete network") {
  const UavScenario& s = reference_scenario();
  DynamicsConfig cfg = study_cfg();
  const EnsembleResult central =
      run_ensemble(s, Topology::kComplete, Algo::kCentralJsfp, cfg, 25, 2);
  const EnsembleResult dist =
      run_ensemble(s, Topology::kComplete, Algo::kDjsfp, cfg, 25, 2);
  REQUIRE(central.absorbed_count == 25);
  REQUIRE(dist.absorbed_count == 25);
  // matched seeds, same information content: means track each other closely
  const double diff =
      std::fabs(central.mean_convergence_time - dist.mean_convergence_time);
  CHECK(diff <= 0.6 * std::max(central.sd_convergence_time, dist.sd_convergence_time) + 3.0);
}

TEST_CASE("parameter sweep: a single cell reproduces the ensemble") {
  const UavScenario& s = reference_scenario();
  DynamicsConfig cfg = study_cfg();
  const std::vector<SweepCell> cells =
      parameter_sweep(s, Topology::kRing, {0.2}, {0.4}, cfg, 8, 2);
  REQUIRE(cells.size() == 1);
  DynamicsConfig cell_cfg = cfg;
  cell_cfg.alpha = 0.2;
  cell_cfg.rho = 0.4;
  const EnsembleResult e = run_ensemble(s, Topology::kRing, Algo::kDjsfp, cell_cfg, 8, 1);
  CHECK(cells[0].mean_convergence_time == e.mean_convergence_time);
  CHECK(cells[0].absorbed_fraction == e.absorbed_fraction);
  CHECK_FALSE(cells[0].slow_regime);
}

TEST_CASE("high step size with low inertia slows the networked dynamics") {
  // On sparse networks the statistics chase noisy estimates when alpha is
  // large and nobody sticks to their action; the effect is dramatic on the
  // ring. (Exact central statistics do not show it: with perfect information
  // a fast step just adapts faster.)
  const UavScenario& s = reference_scenario();
  DynamicsConfig cfg = study_cfg();
  const std::vector<SweepCell> cells =
      parameter_sweep(s, Topology::kRing, {0.2, 0.8}, {0.2, 0.4}, cfg, 50, 2);
  double slow_corner = 0.0, benign = 0.0;
  for (const auto& c : cells) {
    if (c.alpha == 0.8 && c.rho == 0.2) slow_corner = c.mean_convergence_time;
    if (c.alpha == 0.2 && c.rho == 0.4) benign = c.mean_convergence_time;
  }
  CHECK(slow_corner > 2.0 * benign);
}

TEST_CASE("the ring row varies mildly across inertia values at a low step size") {
  const UavScenario& s = reference_scenario();
  DynamicsConfig cfg = study_cfg();
  const std::vector<SweepCell> row =
      parameter_sweep(s, Topology::kRing, {0.2}, {0.2, 0.4, 0.6, 0.8}, cfg, 50, 2);
  REQUIRE(row.size() == 4);
  double lo = HUGE_VAL, hi = 0.0;
  for (const auto& c : row) {
    CHECK(c.absorbed_fraction == 1.0);
    lo = std::min(lo, c.mean_convergence_time);
    hi = std::max(hi, c.mean_convergence_time);
  }
  CHECK(hi < 2.0 * lo);
}

TEST_CASE("parameter sweep flags the fragile corner and validates grids") {
  const UavScenario& s = reference_scenario();
  DynamicsConfig cfg = study_cfg();
  const std::vector<SweepCell> cells =
      parameter_sweep(s, Topology::kComplete, {0.8}, {0.2}, cfg, 4, 2);
  CHECK(cells[0].slow_regime);
  CHECK_THROWS_AS(parameter_sweep(s, Topology::kRing, {0.0}, {0.2}, cfg, 2, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(parameter_sweep(s, Topology::kRing, {0.2}, {1.0}, cfg, 2, 1),
                  std::invalid_argument);
}

TEST_CASE("high inertia still reaches equilibrium in the central mode") {
  // coordination game, strong stickiness: every seeded run locks in
  const NormalFormGame g({2, 2}, {{1, 0, 0, 1}, {1, 0, 0, 1}});
  DynamicsConfig cfg;
  cfg.alpha = 0.2;
  cfg.rho = 0.9;
  cfg.t_max = 10000;
  int absorbed = 0;
  for (int sd = 0; sd < 1000; ++sd) {
    cfg.seed = 40000 + sd;
    const RunTrace trace = run_fp_inertia(g, cfg);
    if (trace.absorbed_at.has_value()) ++absorbed;
  }
  CHECK(absorbed == 1000);
}

TEST_CASE("every absorbed ensemble run ends at a verified equilibrium") {
  const UavScenario& s = reference_scenario();
  DynamicsConfig cfg = study_cfg();
  for (Topology t : {Topology::kLine, Topology::kStar}) {
    const EnsembleResult e = run_ensemble(s, t, Algo::kDjsfp, cfg, 10, 2);
    for (int r = 0; r < 10; ++r) {
      if (!e.runs[r].absorbed_at.has_value()) continue;
      // terminal welfare of a covering assignment is the sum of the five
      // inverse distances, strictly positive
      CHECK(e.runs[r].terminal_welfare > 0.0);
      CHECK(e.runs[r].terminal_normalized_welfare <= 1.0 + 1e-12);
    }
    CHECK(e.absorbed_fraction == 1.0);
  }
}

TEST_CASE("reference tables carry the published study shape") {
  CHECK(reference_convergence_times(Topology::kComplete)[0] == 22);
  CHECK(reference_convergence_times(Topology::kRing)[0] == 30);
  CHECK(reference_convergence_times(Topology::kLine)[0] == 146);
  CHECK(reference_convergence_times(Topology::kStar)[0] == 404);
  CHECK(kReferenceRhoGrid == std::array<double, 4>{0.2, 0.4, 0.6, 0.8});
}
