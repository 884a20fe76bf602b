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
#include <vector>

#include "netfp/congestion.hpp"
#include "netfp/errors.hpp"
#include "netfp/game.hpp"
#include "netfp/rng.hpp"
#include "netfp/serialization.hpp"

using namespace netfp;

namespace {

// u_1 = +1 on match, -1 otherwise; u_2 = -u_1. Joint order: (a1,a2) with a2
// fastest: (0,0),(0,1),(1,0),(1,1).
NormalFormGame matching_pennies() {
  return NormalFormGame({2, 2}, {{1, -1, -1, 1}, {-1, 1, 1, -1}});
}

// Payoff 1 for both on the diagonal, 0 off it.
NormalFormGame coordination() {
  return NormalFormGame({2, 2}, {{1, 0, 0, 1}, {1, 0, 0, 1}});
}

NormalFormGame random_game(CounterRng& rng, const std::vector<int>& counts) {
  long long joint = 1;
  for (int c : counts) joint *= c;
  std::vector<std::vector<double>> u(counts.size());
  for (auto& tensor : u) {
    tensor.resize(joint);
    for (auto& v : tensor) v = rng.next_unit() * 10.0 - 5.0;
  }
  return NormalFormGame(counts, std::move(u));
}

// Identical-interest part from a random potential plus opponent-only noise:
// unilateral payoff differences equal potential differences, so every
// best-response path ascends the potential and play cannot cycle.
NormalFormGame random_potential_game(CounterRng& rng, const std::vector<int>& counts) {
  const int n = static_cast<int>(counts.size());
  long long joint = 1;
  for (int c : counts) joint *= c;
  std::vector<double> potential(joint);
  for (auto& v : potential) v = rng.next_unit();

  std::vector<std::vector<double>> u(n, std::vector<double>(joint));
  for (int i = 0; i < n; ++i) {
    std::vector<double> offsets(joint / counts[i]);  // one per opponent profile
    for (auto& v : offsets) v = rng.next_unit();
    ActionProfile a(n, 0);
    long long idx = 0;
    do {
      long long opp = 0, mult = 1;
      for (int j = n - 1; j >= 0; --j) {
        if (j == i) continue;
        opp += a[j] * mult;
        mult *= counts[j];
      }
      u[i][idx] = potential[idx] + offsets[opp];
      ++idx;
    } while (next_profile(a, counts));
  }
  return NormalFormGame(counts, std::move(u));
}

}  // namespace

TEST_CASE("expected utility: uniform play of matching pennies is worthless") {
  const NormalFormGame g = matching_pennies();
  const MixedProfile uniform{{0.5, 0.5}, {0.5, 0.5}};
  CHECK(expected_utility(g, 0, uniform) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(expected_utility(g, 1, uniform) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("expected utility: degenerate profiles reproduce tensor entries exactly") {
  CounterRng rng(11, 0);
  const NormalFormGame g = random_game(rng, {3, 2, 4});
  ActionProfile a{2, 0, 3};
  MixedProfile sigma;
  for (int i = 0; i < 3; ++i) {
    Marginal m(g.num_actions(i), 0.0);
    m[a[i]] = 1.0;
    sigma.push_back(m);
  }
  for (int i = 0; i < 3; ++i) {
    CHECK(expected_utility(g, i, sigma) == g.payoff(i, a));  // exact
  }
}

TEST_CASE("expected utility matches an independent brute-force double loop") {
  CounterRng rng(12, 0);
  const NormalFormGame g = random_game(rng, {3, 3});
  MixedProfile sigma{{0.2, 0.5, 0.3}, {0.6, 0.1, 0.3}};
  // oracle: direct double loop over all 9 outcomes
  double oracle = 0.0;
  for (int a0 = 0; a0 < 3; ++a0) {
    for (int a1 = 0; a1 < 3; ++a1) {
      oracle += g.payoff(0, {a0, a1}) * sigma[0][a0] * sigma[1][a1];
    }
  }
  CHECK(expected_utility(g, 0, sigma) == doctest::Approx(oracle).epsilon(1e-14));
}

TEST_CASE("expected utility rejects dimension mismatches") {
  const NormalFormGame g = matching_pennies();
  CHECK_THROWS_AS(expected_utility(g, 0, MixedProfile{{0.5, 0.5}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(expected_utility(g, 0, MixedProfile{{0.5, 0.5}, {1.0, 0.0, 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(expected_utility(g, 0, MixedProfile{{0.5, 0.5}, {0.9, 0.2}}),
                  std::invalid_argument);
}

TEST_CASE("best response: coordination against a committed opponent") {
  const NormalFormGame g = coordination();
  const MixedProfile sigma{{1.0, 0.0}, {1.0, 0.0}};  // opponent at action 0
  CHECK(best_response_set(g, 0, sigma) == std::vector<Action>{0});
}

TEST_CASE("best response: constant utility ties the full action set") {
  const NormalFormGame g({3, 2}, {std::vector<double>(6, 2.5),
                                  {0, 1, 2, 3, 4, 5}});
  const MixedProfile sigma{{1, 0, 0}, {0.5, 0.5}};
  CHECK(best_response_set(g, 0, sigma) == std::vector<Action>{0, 1, 2});
}

TEST_CASE("best response matches exhaustive evaluation on random games") {
  CounterRng rng(13, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const NormalFormGame g = random_game(rng, {3, 4});
    Marginal opp(4);
    double total = 0.0;
    for (auto& p : opp) total += (p = rng.next_unit() + 0.01);
    for (auto& p : opp) p /= total;
    const MixedProfile sigma{{1, 0, 0}, opp};

    std::vector<double> values(3, 0.0);
    for (int a0 = 0; a0 < 3; ++a0) {
      for (int a1 = 0; a1 < 4; ++a1) values[a0] += g.payoff(0, {a0, a1}) * opp[a1];
    }
    const double best = *std::max_element(values.begin(), values.end());
    std::vector<Action> oracle;
    for (int a0 = 0; a0 < 3; ++a0) {
      if (values[a0] >= best - 1e-12) oracle.push_back(a0);
    }
    CHECK(best_response_set(g, 0, sigma) == oracle);
  }
}

TEST_CASE("best response set is invariant under positive affine payoff maps") {
  CounterRng rng(14, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<int> counts{3, 3, 2};
    const NormalFormGame g = random_game(rng, counts);
    const double scale = rng.next_unit() * 5.0 + 0.1;
    const double shift = rng.next_unit() * 20.0 - 10.0;
    std::vector<std::vector<double>> scaled;
    for (int i = 0; i < 3; ++i) scaled.push_back(g.payoff_tensor(i));
    for (auto& v : scaled[1]) v = scale * v + shift;
    const NormalFormGame h(counts, std::move(scaled));

    MixedProfile sigma;
    for (int j = 0; j < 3; ++j) {
      Marginal m(counts[j]);
      double total = 0.0;
      for (auto& p : m) total += (p = rng.next_unit() + 0.01);
      for (auto& p : m) p /= total;
      sigma.push_back(m);
    }
    CHECK(best_response_set(g, 1, sigma) == best_response_set(h, 1, sigma));
  }
}

TEST_CASE("pure equilibrium checks on the canonical 2x2 games") {
  const NormalFormGame c = coordination();
  CHECK(is_pure_nash(c, {0, 0}));
  CHECK(is_strict_pure_nash(c, {0, 0}));
  CHECK(is_pure_nash(c, {1, 1}));
  CHECK_FALSE(is_pure_nash(c, {0, 1}));

  const NormalFormGame p = matching_pennies();
  for (int a0 : {0, 1}) {
    for (int a1 : {0, 1}) {
      CHECK_FALSE(is_pure_nash(p, {a0, a1}));
    }
  }
}

TEST_CASE("pure equilibrium checks agree with brute-force deviation scans") {
  CounterRng rng(15, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const NormalFormGame g = random_game(rng, {2, 2, 2});
    ActionProfile a(3);
    do {
      bool oracle = true;
      for (int i = 0; i < 3 && oracle; ++i) {
        ActionProfile dev = a;
        for (int b = 0; b < 2; ++b) {
          dev[i] = b;
          if (g.payoff(i, dev) > g.payoff(i, a) + 1e-12) oracle = false;
        }
      }
      CHECK(is_pure_nash(g, a) == oracle);
    } while (next_profile(a, g.action_counts()));
  }
}

TEST_CASE("find_pure_nash enumerates in lexicographic order") {
  const std::vector<ActionProfile> ne = find_pure_nash(coordination());
  CHECK(ne == std::vector<ActionProfile>{{0, 0}, {1, 1}});
  CHECK(find_pure_nash(matching_pennies()).empty());
}

TEST_CASE("find_pure_nash agrees with is_pure_nash membership") {
  CounterRng rng(16, 0);
  const NormalFormGame g = random_game(rng, {3, 3, 2});
  const std::vector<ActionProfile> ne = find_pure_nash(g);
  ActionProfile a(3, 0);
  do {
    const bool listed = std::find(ne.begin(), ne.end(), a) != ne.end();
    CHECK(listed == is_pure_nash(g, a));
  } while (next_profile(a, g.action_counts()));
}

TEST_CASE("enumeration refuses to run past the cap") {
  CounterRng rng(17, 0);
  const NormalFormGame g = random_game(rng, {4, 4, 4});
  CHECK_THROWS_AS(find_pure_nash(g, 63), EnumerationCapError);
  CHECK_THROWS_AS(is_weakly_acyclic(g, 63), EnumerationCapError);
  CHECK_THROWS_AS(has_distinct_own_payoffs(g, 63), EnumerationCapError);
}

TEST_CASE("weak acyclicity of the canonical games") {
  CHECK(is_weakly_acyclic(coordination()));
  CHECK_FALSE(is_weakly_acyclic(matching_pennies()));
}

TEST_CASE("random potential games are weakly acyclic") {
  CounterRng rng(18, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const NormalFormGame g = random_potential_game(rng, {3, 3, 2});
    CHECK(is_weakly_acyclic(g));
  }
}

TEST_CASE("distinct own payoffs validator") {
  CHECK(has_distinct_own_payoffs(coordination()));
  // A constant row for player 0 ties its own payoffs.
  const NormalFormGame g({2, 2}, {{3, 5, 3, 5}, {1, 2, 3, 4}});
  CHECK_FALSE(has_distinct_own_payoffs(g));
}

TEST_CASE("congestion counts") {
  const std::vector<std::vector<int>> actions{{0, 1}, {1}};
  CHECK(congestion_count(actions, 2) == std::vector<int>{1, 2});
  CHECK(congestion_count({}, 3) == std::vector<int>{0, 0, 0});

  CounterRng rng(19, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 4;
    std::vector<std::vector<int>> subsets(5);
    for (auto& s : subsets) {
      for (int r = 0; r < m; ++r) {
        if (rng.bernoulli(0.5)) s.push_back(r);
      }
    }
    const std::vector<int> counts = congestion_count(subsets, m);
    for (int r = 0; r < m; ++r) {
      int direct = 0;  // per-resource recount
      for (const auto& s : subsets) {
        direct += std::count(s.begin(), s.end(), r);
      }
      CHECK(counts[r] == direct);
    }
  }
}

TEST_CASE("congestion utilities: anonymous linear costs") {
  // c_r(k) = k on both resources; two actions: {0,1} and {1}.
  const std::vector<std::vector<double>> costs{{0, 1, 2, 3}, {0, 1, 2, 3}};
  const CongestionFormGame g = make_anonymous_cost_game(
      2, 3, {{{0, 1}, {1}}, {{0}, {1}}, {{0}, {1}}}, costs);
  const std::vector<int> others{1, 0};
  // using both resources against others (1,0): -(c_0(2) + c_1(1)) = -3
  CHECK(congestion_utility(g, 0, {0, 1}, others) == doctest::Approx(-3.0));
}

TEST_CASE("to_normal_form reproduces direct evaluation on a 2x2 game") {
  const std::vector<std::vector<double>> costs{{0, 1, 4}, {0, 2, 5}};
  const CongestionFormGame g =
      make_anonymous_cost_game(2, 2, {{{0}, {1}}, {{0}, {1}}}, costs);
  const NormalFormGame nf = to_normal_form(g);
  ActionProfile a(2, 0);
  do {
    const std::vector<int> loads = congestion_of_profile(g, a);
    for (int i = 0; i < 2; ++i) {
      std::vector<int> others = loads;
      for (int r : g.action_resources(i, a[i])) --others[r];
      CHECK(nf.payoff(i, a) ==
            congestion_utility(g, i, g.action_resources(i, a[i]), others));
    }
  } while (next_profile(a, g.action_counts()));
  // spot values: both on resource 0 -> each pays c_0(2)=4
  CHECK(nf.payoff(0, {0, 0}) == -4.0);
  CHECK(nf.payoff(0, {0, 1}) == -1.0);
}

TEST_CASE("to_normal_form: single player pays the load-one cost") {
  const std::vector<std::vector<double>> costs{{0, 3}, {0, 7}};
  const CongestionFormGame g = make_anonymous_cost_game(2, 1, {{{0, 1}}}, costs);
  const NormalFormGame nf = to_normal_form(g);
  CHECK(nf.payoff(0, {0}) == -10.0);
}

TEST_CASE("congestion-form construction rejects malformed inputs") {
  CHECK_THROWS_AS(CongestionFormGame(2, {{{}}},
                                     {{{0, 0, 0}, {0, 0, 0}}}),
                  std::invalid_argument);  // empty action subset
  CHECK_THROWS_AS(CongestionFormGame(2, {{{2}}}, {{{0, 0, 0}, {0, 0, 0}}}),
                  std::invalid_argument);  // resource out of range

  // opting in permits the empty "use nothing" action, worth zero
  const CongestionFormGame g(2, {{{}, {0}}}, {{{0, -1, -2}, {0, -3, -4}}},
                             /*allow_empty_actions=*/true);
  const std::vector<int> no_others{0, 0};
  CHECK(g.utility(0, 0, no_others) == 0.0);
  CHECK(g.utility(0, 1, no_others) == -1.0);
}

TEST_CASE("game serialization round-trips losslessly") {
  CounterRng rng(20, 0);
  NormalFormGame g = random_game(rng, {2, 3});
  // include small rationals stored exactly in binary-adjacent decimals
  const std::string path = "game_roundtrip_test.json";
  save_game(g, path);
  const GameVariant loaded = load_game(path);
  const auto& g2 = std::get<NormalFormGame>(loaded);
  CHECK(g2.action_counts() == g.action_counts());
  for (int i = 0; i < 2; ++i) {
    CHECK(g2.payoff_tensor(i) == g.payoff_tensor(i));  // bit exact
  }

  const std::vector<std::vector<double>> costs{{0, 1.0 / 3.0, 2.0 / 3.0},
                                               {0, 0.1, 0.7}};
  const CongestionFormGame c =
      make_anonymous_cost_game(2, 2, {{{0}, {1}}, {{0}, {1}}}, costs);
  save_game(c, path);
  const GameVariant loaded2 = load_game(path);
  const auto& c2 = std::get<CongestionFormGame>(loaded2);
  CHECK(c2.num_resources() == 2);
  for (int i = 0; i < 2; ++i) {
    for (int r = 0; r < 2; ++r) {
      for (int k = 1; k <= 2; ++k) {
        CHECK(c2.resource_value(i, r, k) == c.resource_value(i, r, k));
      }
    }
  }
  std::remove(path.c_str());
}
