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

#include "netfp/congestion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "netfp/errors.hpp"

namespace netfp {

CongestionFormGame::CongestionFormGame(
    int num_resources, std::vector<std::vector<std::vector<int>>> action_sets,
    std::vector<std::vector<std::vector<double>>> value_table,
    bool allow_empty_actions)
    : num_resources_(num_resources),
      action_sets_(std::move(action_sets)),
      value_table_(std::move(value_table)) {
  if (num_resources_ < 1) throw std::invalid_argument("need at least one resource");
  if (action_sets_.empty()) throw std::invalid_argument("need at least one player");
  const int n = num_players();
  for (int i = 0; i < n; ++i) {
    if (action_sets_[i].empty()) throw std::invalid_argument("player has no actions");
    for (auto& subset : action_sets_[i]) {
      if (subset.empty() && !allow_empty_actions) {
        throw std::invalid_argument("empty action subsets are disabled");
      }
      std::sort(subset.begin(), subset.end());
      for (std::size_t k = 0; k < subset.size(); ++k) {
        if (subset[k] < 0 || subset[k] >= num_resources_) {
          throw std::invalid_argument("action uses a resource out of range");
        }
        if (k > 0 && subset[k] == subset[k - 1]) {
          throw std::invalid_argument("action lists a resource twice");
        }
      }
    }
    action_counts_.push_back(static_cast<int>(action_sets_[i].size()));
  }
  if (static_cast<int>(value_table_.size()) != n) {
    throw std::invalid_argument("value table needs one row per player");
  }
  for (const auto& per_resource : value_table_) {
    if (static_cast<int>(per_resource.size()) != num_resources_) {
      throw std::invalid_argument("value table needs one column per resource");
    }
    for (const auto& column : per_resource) {
      if (static_cast<int>(column.size()) < n + 1) {
        throw std::invalid_argument("value table must cover loads 1..n");
      }
      for (double v : column) {
        if (!std::isfinite(v)) throw std::invalid_argument("resource values must be finite");
      }
    }
  }
}

double CongestionFormGame::utility(int player, Action own,
                                   std::span<const int> others_congestion) const {
  return congestion_utility(*this, player, action_sets_[player][own], others_congestion);
}

std::vector<int> congestion_count(std::span<const std::vector<int>> actions,
                                  int num_resources) {
  std::vector<int> counts(num_resources, 0);
  for (const auto& subset : actions) {
    for (int r : subset) {
      if (r < 0 || r >= num_resources) {
        throw std::invalid_argument("resource id out of range");
      }
      ++counts[r];
    }
  }
  return counts;
}

std::vector<int> congestion_of_profile(const CongestionFormGame& game,
                                       const ActionProfile& a) {
  if (static_cast<int>(a.size()) != game.num_players()) {
    throw std::invalid_argument("profile length mismatch");
  }
  std::vector<int> counts(game.num_resources(), 0);
  for (int i = 0; i < game.num_players(); ++i) {
    for (int r : game.action_resources(i, a[i])) ++counts[r];
  }
  return counts;
}

double congestion_utility(const CongestionFormGame& game, int player,
                          const std::vector<int>& own_resources,
                          std::span<const int> others_congestion) {
  if (static_cast<int>(others_congestion.size()) != game.num_resources()) {
    throw std::invalid_argument("congestion vector length mismatch");
  }
  double total = 0.0;
  for (int r : own_resources) {
    total += game.resource_value(player, r, others_congestion[r] + 1);
  }
  return total;
}

NormalFormGame to_normal_form(const CongestionFormGame& game, long long cap) {
  long long joint = 1;
  for (int c : game.action_counts()) {
    if (joint > cap / c) {
      throw EnumerationCapError("to_normal_form: joint action space exceeds cap " +
                                std::to_string(cap));
    }
    joint *= c;
  }

  const int n = game.num_players();
  std::vector<std::vector<double>> utilities(n, std::vector<double>(joint, 0.0));
  ActionProfile a(n, 0);
  long long idx = 0;
  do {
    const std::vector<int> loads = congestion_of_profile(game, a);
    for (int i = 0; i < n; ++i) {
      double u = 0.0;
      // loads[r] already includes player i for every r it uses
      for (int r : game.action_resources(i, a[i])) {
        u += game.resource_value(i, r, loads[r]);
      }
      utilities[i][idx] = u;
    }
    ++idx;
  } while (next_profile(a, game.action_counts()));
  return NormalFormGame(game.action_counts(), std::move(utilities));
}

std::vector<Action> pure_best_response_set(const CongestionFormGame& game,
                                           int player, const ActionProfile& a) {
  std::vector<int> others = congestion_of_profile(game, a);
  for (int r : game.action_resources(player, a[player])) --others[r];
  std::vector<double> values(game.num_actions(player));
  double best = -HUGE_VAL;
  for (Action b = 0; b < game.num_actions(player); ++b) {
    values[b] = game.utility(player, b, others);
    best = std::max(best, values[b]);
  }
  std::vector<Action> out;
  for (Action b = 0; b < game.num_actions(player); ++b) {
    if (values[b] >= best - kTieTolerance) out.push_back(b);
  }
  return out;
}

bool is_pure_nash(const CongestionFormGame& game, const ActionProfile& a) {
  std::vector<int> loads = congestion_of_profile(game, a);
  for (int i = 0; i < game.num_players(); ++i) {
    std::vector<int> others = loads;
    for (int r : game.action_resources(i, a[i])) --others[r];
    const double current = game.utility(i, a[i], others);
    for (Action b = 0; b < game.num_actions(i); ++b) {
      if (game.utility(i, b, others) > current + kTieTolerance) return false;
    }
  }
  return true;
}

bool is_strict_pure_nash(const CongestionFormGame& game, const ActionProfile& a) {
  std::vector<int> loads = congestion_of_profile(game, a);
  for (int i = 0; i < game.num_players(); ++i) {
    std::vector<int> others = loads;
    for (int r : game.action_resources(i, a[i])) --others[r];
    const double current = game.utility(i, a[i], others);
    for (Action b = 0; b < game.num_actions(i); ++b) {
      if (b == a[i]) continue;
      if (game.utility(i, b, others) >= current - kTieTolerance) return false;
    }
  }
  return true;
}

CongestionFormGame make_anonymous_cost_game(
    int num_resources, int num_players,
    std::vector<std::vector<std::vector<int>>> action_sets,
    const std::vector<std::vector<double>>& cost_table) {
  if (static_cast<int>(cost_table.size()) != num_resources) {
    throw std::invalid_argument("cost table needs one row per resource");
  }
  std::vector<std::vector<std::vector<double>>> values(num_players);
  for (int i = 0; i < num_players; ++i) {
    values[i].resize(num_resources);
    for (int r = 0; r < num_resources; ++r) {
      if (static_cast<int>(cost_table[r].size()) < num_players + 1) {
        throw std::invalid_argument("cost table must cover loads 1..n");
      }
      values[i][r].resize(cost_table[r].size());
      for (std::size_t k = 0; k < cost_table[r].size(); ++k) {
        values[i][r][k] = -cost_table[r][k];
      }
    }
  }
  return CongestionFormGame(num_resources, std::move(action_sets), std::move(values));
}

}  // namespace netfp
