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

#ifndef NETFP_GAME_HPP_
#define NETFP_GAME_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace netfp {

using Action = int;
// One pure action per player.
using ActionProfile = std::vector<Action>;
// Probability vector over one player's actions.
using Marginal = std::vector<double>;
// Independent mixed strategies, one marginal per player.
using MixedProfile = std::vector<Marginal>;

// Utilities closer than this are treated as tied in argmax computations.
// Games built from integer or small-rational data compare exactly.
inline constexpr double kTieTolerance = 1e-12;

// Default ceiling on joint-action enumeration for the exhaustive oracles.
inline constexpr long long kDefaultEnumerationCap = 10'000'000;

// Finite n-player game with a dense payoff tensor. Joint actions are indexed
// row-major with the last player's action varying fastest, which makes the
// index order coincide with lexicographic order on profiles. Immutable after
// construction; all operations on it are pure.
class NormalFormGame {
 public:
  // utilities[i] is a flat tensor of size prod(action_counts) holding
  // player i's payoff for every joint action.
  NormalFormGame(std::vector<int> action_counts,
                 std::vector<std::vector<double>> utilities);

  int num_players() const { return static_cast<int>(action_counts_.size()); }
  int num_actions(int player) const { return action_counts_[player]; }
  const std::vector<int>& action_counts() const { return action_counts_; }
  long long num_joint_actions() const { return num_joint_actions_; }
  long long stride(int player) const { return strides_[player]; }

  long long index_of(const ActionProfile& a) const;
  ActionProfile profile_of(long long index) const;

  double payoff(int player, const ActionProfile& a) const {
    return utilities_[player][index_of(a)];
  }
  double payoff_by_index(int player, long long joint_index) const {
    return utilities_[player][joint_index];
  }
  const std::vector<double>& payoff_tensor(int player) const {
    return utilities_[player];
  }

 private:
  std::vector<int> action_counts_;
  std::vector<long long> strides_;
  long long num_joint_actions_ = 1;
  std::vector<std::vector<double>> utilities_;
};

// Advances `a` to the next profile in lexicographic order; false on wrap.
bool next_profile(ActionProfile& a, const std::vector<int>& action_counts);

void validate_profile(const NormalFormGame& game, const ActionProfile& a);
void validate_mixed_profile(const NormalFormGame& game, const MixedProfile& sigma);

// Player `player`'s payoff for each own action against independent opponent
// marginals. marginals[j] must be a distribution-like vector over player j's
// actions for every j != player; marginals[player] is ignored. This is the
// shared evaluation core for mixed best responses and for best responses
// against estimated statistics (which need not be normalized).
std::vector<double> utilities_vs_marginals(
    const NormalFormGame& game, int player,
    std::span<const std::span<const double>> marginals);

// Expected payoff of `player` under the product distribution `sigma`:
// the payoff tensor contracted against all marginals. Exact when sigma is
// degenerate.
double expected_utility(const NormalFormGame& game, int player,
                        const MixedProfile& sigma);

// All pure maximizers of player `player`'s payoff against the opponents'
// marginals in `sigma` (entry for `player` ignored), ascending. Ties within
// kTieTolerance are included.
std::vector<Action> best_response_set(const NormalFormGame& game, int player,
                                      const MixedProfile& sigma);

// Pure maximizers against the fixed pure actions of the others.
std::vector<Action> pure_best_response_set(const NormalFormGame& game,
                                           int player, const ActionProfile& a);

bool is_pure_nash(const NormalFormGame& game, const ActionProfile& a);
bool is_strict_pure_nash(const NormalFormGame& game, const ActionProfile& a);

// All pure Nash equilibria in lexicographic order. Throws
// EnumerationCapError when the joint action space exceeds `cap`.
std::vector<ActionProfile> find_pure_nash(
    const NormalFormGame& game, long long cap = kDefaultEnumerationCap);

// True iff from every joint action some pure NE is reachable along
// single-player best-response deviations (reverse reachability over the
// best-response graph).
bool is_weakly_acyclic(const NormalFormGame& game,
                       long long cap = kDefaultEnumerationCap);

// True iff no player is ever indifferent between two own actions, whatever
// the others play. Strictly stronger than "all pure NE are strict"; both
// validators are provided.
bool has_distinct_own_payoffs(const NormalFormGame& game,
                              long long cap = kDefaultEnumerationCap);

}  // namespace netfp

#endif  // NETFP_GAME_HPP_
