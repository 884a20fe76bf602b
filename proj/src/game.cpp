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

#include "netfp/game.hpp"

#include <cmath>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <string>

#include "netfp/errors.hpp"
#include "netfp/kernels.hpp"

namespace netfp {
namespace {

long long checked_joint_count(const std::vector<int>& counts) {
  long long total = 1;
  for (int c : counts) {
    if (c < 1) throw std::invalid_argument("every player needs at least one action");
    if (total > (1LL << 62) / c) throw std::invalid_argument("joint action space overflows");
    total *= c;
  }
  return total;
}

void require_enumerable(long long joint, long long cap, const char* op) {
  if (joint > cap) {
    throw EnumerationCapError(std::string(op) + ": joint action space " +
                              std::to_string(joint) + " exceeds cap " +
                              std::to_string(cap));
  }
}

}  // namespace

NormalFormGame::NormalFormGame(std::vector<int> action_counts,
                               std::vector<std::vector<double>> utilities)
    : action_counts_(std::move(action_counts)), utilities_(std::move(utilities)) {
  if (action_counts_.empty()) throw std::invalid_argument("game needs at least one player");
  num_joint_actions_ = checked_joint_count(action_counts_);
  const int n = num_players();
  strides_.assign(n, 1);
  for (int i = n - 2; i >= 0; --i) {
    strides_[i] = strides_[i + 1] * action_counts_[i + 1];
  }
  if (static_cast<int>(utilities_.size()) != n) {
    throw std::invalid_argument("need one payoff tensor per player");
  }
  for (const auto& u : utilities_) {
    if (static_cast<long long>(u.size()) != num_joint_actions_) {
      throw std::invalid_argument("payoff tensor size mismatch");
    }
    for (double v : u) {
      if (!std::isfinite(v)) throw std::invalid_argument("payoffs must be finite");
    }
  }
}

long long NormalFormGame::index_of(const ActionProfile& a) const {
  if (static_cast<int>(a.size()) != num_players()) {
    throw std::invalid_argument("profile length mismatch");
  }
  long long idx = 0;
  for (int i = 0; i < num_players(); ++i) {
    if (a[i] < 0 || a[i] >= action_counts_[i]) {
      throw std::invalid_argument("action out of range");
    }
    idx += a[i] * strides_[i];
  }
  return idx;
}

ActionProfile NormalFormGame::profile_of(long long index) const {
  ActionProfile a(num_players());
  for (int i = 0; i < num_players(); ++i) {
    a[i] = static_cast<Action>((index / strides_[i]) % action_counts_[i]);
  }
  return a;
}

bool next_profile(ActionProfile& a, const std::vector<int>& action_counts) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (++a[i] < action_counts[i]) return true;
    a[i] = 0;
  }
  return false;
}

void validate_profile(const NormalFormGame& game, const ActionProfile& a) {
  game.index_of(a);  // throws on any violation
}

void validate_mixed_profile(const NormalFormGame& game, const MixedProfile& sigma) {
  if (static_cast<int>(sigma.size()) != game.num_players()) {
    throw std::invalid_argument("mixed profile length mismatch");
  }
  for (int i = 0; i < game.num_players(); ++i) {
    if (static_cast<int>(sigma[i].size()) != game.num_actions(i)) {
      throw std::invalid_argument("marginal size mismatch");
    }
    double total = 0.0;
    for (double p : sigma[i]) {
      if (!(p >= 0.0)) throw std::invalid_argument("marginal has negative mass");
      total += p;
    }
    if (std::fabs(total - 1.0) > 1e-12) {
      throw std::invalid_argument("marginal mass does not sum to one");
    }
  }
}

std::vector<double> utilities_vs_marginals(
    const NormalFormGame& game, int player,
    std::span<const std::span<const double>> marginals) {
  const int n = game.num_players();
  if (static_cast<int>(marginals.size()) != n) {
    throw std::invalid_argument("need one marginal per player");
  }
  for (int j = 0; j < n; ++j) {
    if (j != player && static_cast<int>(marginals[j].size()) != game.num_actions(j)) {
      throw std::invalid_argument("marginal size mismatch");
    }
  }

  const int own_count = game.num_actions(player);
  const long long own_stride = game.stride(player);
  const double* tensor = game.payoff_tensor(player).data();
  std::vector<double> acc(own_count, 0.0);

  // Odometer over the opponents' joint actions; for each one, accumulate its
  // probability weight into every own action's entry.
  std::vector<int> opp(n, 0);
  while (true) {
    double weight = 1.0;
    long long base = 0;
    for (int j = 0; j < n; ++j) {
      if (j == player) continue;
      weight *= marginals[j][opp[j]];
      base += opp[j] * game.stride(j);
    }
    if (weight != 0.0) {
      if (own_stride == 1) {
        kernels::axpy(acc.data(), weight, tensor + base, own_count);
      } else {
        for (int ai = 0; ai < own_count; ++ai) {
          acc[ai] += weight * tensor[base + ai * own_stride];
        }
      }
    }
    // advance the odometer, skipping the player's own slot
    int j = n - 1;
    for (; j >= 0; --j) {
      if (j == player) continue;
      if (++opp[j] < game.num_actions(j)) break;
      opp[j] = 0;
    }
    if (j < 0) break;
  }
  return acc;
}

double expected_utility(const NormalFormGame& game, int player,
                        const MixedProfile& sigma) {
  validate_mixed_profile(game, sigma);
  std::vector<std::span<const double>> views(sigma.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) views[j] = sigma[j];
  const std::vector<double> own = utilities_vs_marginals(game, player, views);
  return kernels::dot(own.data(), sigma[player].data(), own.size());
}

namespace {

std::vector<Action> argmax_set(std::span<const double> values) {
  double best = values[0];
  for (double v : values) best = std::max(best, v);
  std::vector<Action> out;
  for (int a = 0; a < static_cast<int>(values.size()); ++a) {
    if (values[a] >= best - kTieTolerance) out.push_back(a);
  }
  return out;
}

}  // namespace

std::vector<Action> best_response_set(const NormalFormGame& game, int player,
                                      const MixedProfile& sigma) {
  if (static_cast<int>(sigma.size()) != game.num_players()) {
    throw std::invalid_argument("mixed profile length mismatch");
  }
  std::vector<std::span<const double>> views(sigma.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) views[j] = sigma[j];
  return argmax_set(utilities_vs_marginals(game, player, views));
}

std::vector<Action> pure_best_response_set(const NormalFormGame& game,
                                           int player, const ActionProfile& a) {
  const long long base = game.index_of(a) - a[player] * game.stride(player);
  const long long s = game.stride(player);
  const double* tensor = game.payoff_tensor(player).data();
  double best = tensor[base];
  for (int ai = 1; ai < game.num_actions(player); ++ai) {
    best = std::max(best, tensor[base + ai * s]);
  }
  std::vector<Action> out;
  for (int ai = 0; ai < game.num_actions(player); ++ai) {
    if (tensor[base + ai * s] >= best - kTieTolerance) out.push_back(ai);
  }
  return out;
}

bool is_pure_nash(const NormalFormGame& game, const ActionProfile& a) {
  const long long idx = game.index_of(a);
  for (int i = 0; i < game.num_players(); ++i) {
    const long long base = idx - a[i] * game.stride(i);
    const double* tensor = game.payoff_tensor(i).data();
    const double own = tensor[idx];
    for (int ai = 0; ai < game.num_actions(i); ++ai) {
      if (tensor[base + ai * game.stride(i)] > own + kTieTolerance) return false;
    }
  }
  return true;
}

bool is_strict_pure_nash(const NormalFormGame& game, const ActionProfile& a) {
  const long long idx = game.index_of(a);
  for (int i = 0; i < game.num_players(); ++i) {
    const long long base = idx - a[i] * game.stride(i);
    const double* tensor = game.payoff_tensor(i).data();
    const double own = tensor[idx];
    for (int ai = 0; ai < game.num_actions(i); ++ai) {
      if (ai == a[i]) continue;
      if (tensor[base + ai * game.stride(i)] >= own - kTieTolerance) return false;
    }
  }
  return true;
}

std::vector<ActionProfile> find_pure_nash(const NormalFormGame& game, long long cap) {
  require_enumerable(game.num_joint_actions(), cap, "find_pure_nash");
  std::vector<ActionProfile> out;
  ActionProfile a(game.num_players(), 0);
  do {
    if (is_pure_nash(game, a)) out.push_back(a);
  } while (next_profile(a, game.action_counts()));
  return out;
}

bool is_weakly_acyclic(const NormalFormGame& game, long long cap) {
  require_enumerable(game.num_joint_actions(), cap, "is_weakly_acyclic");
  const long long joint = game.num_joint_actions();
  const int n = game.num_players();

  // Reverse reachability from the pure NE set over best-response deviations.
  // Popping a profile x marks, for every player i whose action is a best
  // response at x, the whole fiber obtained by varying player i's action:
  // each of those profiles has a best-response edge into x.
  std::vector<char> reached(joint, 0);
  std::deque<long long> frontier;
  {
    ActionProfile a(n, 0);
    long long idx = 0;
    do {
      if (is_pure_nash(game, a)) {
        reached[idx] = 1;
        frontier.push_back(idx);
      }
      ++idx;
    } while (next_profile(a, game.action_counts()));
  }
  if (frontier.empty()) return false;

  long long remaining = joint - static_cast<long long>(frontier.size());

  while (!frontier.empty() && remaining > 0) {
    const long long idx = frontier.front();
    frontier.pop_front();
    const ActionProfile x = game.profile_of(idx);
    for (int i = 0; i < n; ++i) {
      const long long base = idx - x[i] * game.stride(i);
      const double* tensor = game.payoff_tensor(i).data();
      double best = tensor[base];
      for (int ai = 1; ai < game.num_actions(i); ++ai) {
        best = std::max(best, tensor[base + ai * game.stride(i)]);
      }
      if (tensor[idx] < best - kTieTolerance) continue;  // x not i-stable
      for (int ai = 0; ai < game.num_actions(i); ++ai) {
        const long long sibling = base + ai * game.stride(i);
        if (!reached[sibling]) {
          reached[sibling] = 1;
          frontier.push_back(sibling);
          --remaining;
        }
      }
    }
  }
  return remaining == 0;
}

bool has_distinct_own_payoffs(const NormalFormGame& game, long long cap) {
  require_enumerable(game.num_joint_actions(), cap, "has_distinct_own_payoffs");
  const int n = game.num_players();
  for (int i = 0; i < n; ++i) {
    const long long s = game.stride(i);
    const int k = game.num_actions(i);
    const double* tensor = game.payoff_tensor(i).data();
    ActionProfile a(n, 0);
    long long idx = 0;
    do {
      if (a[i] == 0) {  // visit each opponent profile once
        for (int x = 0; x < k; ++x) {
          for (int y = x + 1; y < k; ++y) {
            if (std::fabs(tensor[idx + x * s] - tensor[idx + y * s]) <= kTieTolerance) {
              return false;
            }
          }
        }
      }
      ++idx;  // lexicographic enumeration matches index order
    } while (next_profile(a, game.action_counts()));
  }
  return true;
}

}  // namespace netfp
