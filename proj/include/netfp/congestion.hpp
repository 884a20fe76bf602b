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

#ifndef NETFP_CONGESTION_HPP_
#define NETFP_CONGESTION_HPP_

#include <span>
#include <vector>

#include "netfp/game.hpp"

namespace netfp {

// Game over a set of shared resources. An action is a subset of resources;
// a player's payoff depends only on its own action and the per-resource usage
// counts of everyone else. Resource values are player-specific:
// value_table[i][r][k] is player i's payoff contribution from using resource
// r when k players in total (including i) use it. The anonymous-cost game
// with cost c_r(k) is the special case value_table[i][r][k] = -c_r(k).
class CongestionFormGame {
 public:
  CongestionFormGame(int num_resources,
                     std::vector<std::vector<std::vector<int>>> action_sets,
                     std::vector<std::vector<std::vector<double>>> value_table,
                     bool allow_empty_actions = false);

  int num_players() const { return static_cast<int>(action_sets_.size()); }
  int num_resources() const { return num_resources_; }
  int num_actions(int player) const { return static_cast<int>(action_sets_[player].size()); }
  const std::vector<int>& action_counts() const { return action_counts_; }
  const std::vector<int>& action_resources(int player, Action a) const {
    return action_sets_[player][a];
  }

  // Payoff contribution of resource r to player i when the total load on r
  // (including i) is k. Loads beyond the player count can only arise from
  // estimate noise and are clamped to the table edge.
  double resource_value(int player, int r, int k) const {
    const auto& column = value_table_[player][r];
    const int kk = k < 1 ? 1 : (k >= static_cast<int>(column.size()) ? static_cast<int>(column.size()) - 1 : k);
    return column[kk];
  }

  // u_i(a_i, N(a_{-i})) with the action given by index.
  double utility(int player, Action own, std::span<const int> others_congestion) const;

 private:
  int num_resources_;
  std::vector<std::vector<std::vector<int>>> action_sets_;
  std::vector<std::vector<std::vector<double>>> value_table_;  // [player][resource][count]
  std::vector<int> action_counts_;
};

// Per-resource usage counts of the given action subsets.
std::vector<int> congestion_count(std::span<const std::vector<int>> actions,
                                  int num_resources);

// Usage counts of a full joint action profile (indices into the action sets).
std::vector<int> congestion_of_profile(const CongestionFormGame& game,
                                       const ActionProfile& a);

// u_i evaluated from an explicit own resource subset and the others' counts.
double congestion_utility(const CongestionFormGame& game, int player,
                          const std::vector<int>& own_resources,
                          std::span<const int> others_congestion);

// Dense cross-validation oracle: the normal-form game whose payoffs equal the
// congestion evaluation on every joint action.
NormalFormGame to_normal_form(const CongestionFormGame& game,
                              long long cap = kDefaultEnumerationCap);

std::vector<Action> pure_best_response_set(const CongestionFormGame& game,
                                           int player, const ActionProfile& a);
bool is_pure_nash(const CongestionFormGame& game, const ActionProfile& a);
bool is_strict_pure_nash(const CongestionFormGame& game, const ActionProfile& a);

// Anonymous-cost builder: cost_table[r][k] is the cost of resource r at load
// k (index 0 unused); u_i = -sum of costs over the player's chosen resources.
CongestionFormGame make_anonymous_cost_game(
    int num_resources, int num_players,
    std::vector<std::vector<std::vector<int>>> action_sets,
    const std::vector<std::vector<double>>& cost_table);

}  // namespace netfp

#endif  // NETFP_CONGESTION_HPP_
