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

#ifndef NETFP_DYNAMICS_HPP_
#define NETFP_DYNAMICS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "netfp/congestion.hpp"
#include "netfp/game.hpp"
#include "netfp/graph.hpp"
#include "netfp/rng.hpp"
#include "netfp/weights.hpp"

namespace netfp {

struct DynamicsConfig {
  double rho = 0.2;    // inertia: probability of repeating the last action
  double alpha = 0.2;  // fading-memory step
  int t_max = 100000;
  std::uint64_t seed = 1;
  // Rounds of unchanged play (at a verified pure NE) before a run may be
  // declared absorbed.
  int absorption_window = 20;
  // Extra unchanged rounds simulated past the window before stopping early,
  // enough to pin the fading statistics to their fixed points; 0 derives a
  // horizon from alpha and the weight contraction factor.
  int confirm_rounds = 0;
  // Congestion trackers advance toward the action of the round being entered
  // (matching the empirical-distribution recursion); false uses the previous
  // round's action instead.
  bool zeta_uses_next_action = true;
  // Network estimates of total congestion converge to the network average;
  // rescale by n when forming the opponents' congestion. False keeps the raw
  // estimate (and then the opponent congestion stays biased low by ~(n-1)/n).
  bool djsfp_rescale = true;

  void validate() const;  // throws std::invalid_argument
};

// Record of one run. Round t (1-based) lives at index t-1.
struct RunTrace {
  std::vector<ActionProfile> actions;
  // max over players of the sup-norm gap between that player's estimated
  // statistic and the true one; exactly zero in the central modes.
  std::vector<double> estimate_error;
  // Sum of utilities per round; left empty by the dynamics, filled by the
  // experiment harness.
  std::vector<double> welfare;
  std::optional<int> absorbed_at;  // first round of the terminal constant NE suffix
  std::uint64_t seed = 0;

  int rounds() const { return static_cast<int>(actions.size()); }

  bool operator==(const RunTrace&) const = default;
};

// With probability rho repeats `current`; otherwise picks uniformly from the
// best-response set. Consumes one RNG draw, plus a second only when a choice
// among several best responses is needed.
Action inertial_step(CounterRng& rng, double rho, Action current,
                     std::span<const Action> br_set);

// f <- (1-alpha) f + alpha * point mass at a_new.
Marginal fp_update_empirical(const Marginal& f, Action a_new, double alpha);

// zeta <- (1-alpha) zeta + alpha * usage counts of own_resources.
std::vector<double> zeta_update(const std::vector<double>& zeta,
                                const std::vector<int>& own_resources,
                                double alpha);

// Nearest nonnegative integer vector, halves rounding up: the unique z with
// z - 1/2 <= v < z + 1/2. Coordinates below -1/2 have no such z and clamp to
// zero (a warning is printed once per process). NaN throws.
std::vector<int> project_to_integers(std::span<const double> v);

// Per-run mutable learner state: the statistic each player tracks and the
// local estimates it best-responds to. One learner serves one run.
class Learner {
 public:
  virtual ~Learner() = default;
  virtual int num_players() const = 0;
  virtual int num_actions(int player) const = 0;

  // Installs round-1 state for the given initial profile.
  virtual void reset(const ActionProfile& a1) = 0;
  // Argmax of player's estimated utilities, ascending, ties included.
  virtual std::vector<Action> best_response_set(int player) const = 0;
  // Steps the statistics and estimates into the round that plays `a_next`.
  virtual void advance(const ActionProfile& a_next) = 0;

  // Sup-norm gap between local estimates and the true statistic, maxed over
  // players; zero for the central modes.
  virtual double max_estimate_error() const = 0;
  // Contraction factor of the estimate network (0 when estimates are exact);
  // used to size the absorption confirmation horizon.
  virtual double mixing_factor() const = 0;
  // Oracle: argmax of the true utility against the others' actions in `a`.
  virtual std::vector<Action> true_best_response_set(
      int player, const ActionProfile& a) const = 0;
};

// Exact joint empirical statistics, no network.
class CentralFpLearner : public Learner {
 public:
  CentralFpLearner(const NormalFormGame& game, double alpha);
  int num_players() const override;
  int num_actions(int player) const override;
  void reset(const ActionProfile& a1) override;
  std::vector<Action> best_response_set(int player) const override;
  void advance(const ActionProfile& a_next) override;
  double max_estimate_error() const override { return 0.0; }
  double mixing_factor() const override { return 0.0; }
  std::vector<Action> true_best_response_set(int player,
                                             const ActionProfile& a) const override;

  const Marginal& empirical(int player) const { return empirical_[player]; }

 private:
  const NormalFormGame& game_;
  double alpha_;
  std::vector<Marginal> empirical_;
};

// Consensus-tracked estimates of every player's empirical distribution. The
// estimates for subject j live in an (observer x action) bank updated by j's
// weight matrix each round.
class DistributedFpLearner : public Learner {
 public:
  DistributedFpLearner(const NormalFormGame& game, const CommGraph& graph,
                       const FpWeightSet& ws, double alpha);
  int num_players() const override;
  int num_actions(int player) const override;
  void reset(const ActionProfile& a1) override;
  std::vector<Action> best_response_set(int player) const override;
  void advance(const ActionProfile& a_next) override;
  double max_estimate_error() const override;
  double mixing_factor() const override;
  std::vector<Action> true_best_response_set(int player,
                                             const ActionProfile& a) const override;

  const Marginal& empirical(int player) const { return empirical_[player]; }
  double estimate(int observer, int subject, Action a) const {
    return banks_[subject](observer, a);
  }
  // Largest per-signal tracking error: for each (subject, action) signal, the
  // Euclidean norm over observers of the estimate gap.
  double max_signal_error() const;
  // Diagnostics/testing: shifts one estimate entry in place.
  void perturb_estimate(int observer, int subject, Action a, double delta) {
    banks_[subject](observer, a) += delta;
  }

 private:
  const NormalFormGame& game_;
  const CommGraph& graph_;
  const FpWeightSet& weights_;
  double alpha_;
  std::vector<Marginal> empirical_;
  std::vector<Matrix> banks_;    // banks_[j]: row i = observer i's estimate of f_j
  std::vector<Matrix> scratch_;
  Marginal updated_scratch_;  // reused per-round buffer, keeps advance() allocation-free
};

// Exact congestion statistics, no network.
class CentralJsfpLearner : public Learner {
 public:
  CentralJsfpLearner(const CongestionFormGame& game, const DynamicsConfig& cfg);
  int num_players() const override;
  int num_actions(int player) const override;
  void reset(const ActionProfile& a1) override;
  std::vector<Action> best_response_set(int player) const override;
  void advance(const ActionProfile& a_next) override;
  double max_estimate_error() const override { return 0.0; }
  double mixing_factor() const override { return 0.0; }
  std::vector<Action> true_best_response_set(int player,
                                             const ActionProfile& a) const override;

  const std::vector<double>& own_congestion(int player) const { return zeta_[player]; }
  const std::vector<double>& total_congestion() const { return zeta_total_; }

 private:
  const CongestionFormGame& game_;
  double alpha_;
  bool zeta_uses_next_action_;
  std::vector<std::vector<double>> zeta_;  // per player, per resource
  std::vector<double> zeta_total_;
  ActionProfile last_profile_;
};

// Doubly stochastic dynamic averaging of the total congestion; players
// best-respond to the projected (rescaled) estimate minus their own share.
class DistributedJsfpLearner : public Learner {
 public:
  DistributedJsfpLearner(const CongestionFormGame& game, const CommGraph& graph,
                         const DsMatrix& w, const DynamicsConfig& cfg);
  int num_players() const override;
  int num_actions(int player) const override;
  void reset(const ActionProfile& a1) override;
  std::vector<Action> best_response_set(int player) const override;
  void advance(const ActionProfile& a_next) override;
  double max_estimate_error() const override;
  double mixing_factor() const override;
  std::vector<Action> true_best_response_set(int player,
                                             const ActionProfile& a) const override;

  const std::vector<double>& own_congestion(int player) const { return zeta_[player]; }
  const std::vector<double>& total_congestion() const { return zeta_total_; }
  double estimate(int observer, int resource) const { return bank_(observer, resource); }
  // Largest violation of the conservation identity: the observers' estimate
  // column sums must reproduce the true total congestion exactly.
  double conservation_error() const;
  // The opponents-congestion estimate player i feeds into the projection.
  std::vector<double> others_congestion_estimate(int player) const;
  void perturb_estimate(int observer, int resource, double delta) {
    bank_(observer, resource) += delta;
  }

 private:
  const CongestionFormGame& game_;
  const CommGraph& graph_;
  const DsMatrix& ds_;
  double alpha_;
  bool zeta_uses_next_action_;
  bool rescale_;
  std::vector<std::vector<double>> zeta_;
  std::vector<double> zeta_total_;
  Matrix bank_;  // row i = observer i's estimate, n x m
  Matrix scratch_;
  std::vector<double> updated_scratch_;
  ActionProfile last_profile_;
};

// Inertial best-response engine shared by all four algorithm variants. The
// run stops at t_max, or earlier once the profile has been constant for
// max(absorption_window, confirmation horizon) rounds and `is_pure_ne`
// certifies it. `initial` overrides the seeded random initial profile.
RunTrace run_inertial(Learner& learner, const DynamicsConfig& cfg,
                      const std::function<bool(const ActionProfile&)>& is_pure_ne,
                      const std::optional<ActionProfile>& initial = std::nullopt);

// Fictitious play with fading memory and inertia, exact joint statistics.
RunTrace run_fp_inertia(const NormalFormGame& game, const DynamicsConfig& cfg,
                        const std::optional<ActionProfile>& initial = std::nullopt);

// Network variant: players best-respond to consensus-tracked estimates of
// everyone's empirical distribution, refreshed once per round.
RunTrace run_dfp(const NormalFormGame& game, const CommGraph& graph,
                 const FpWeightSet& ws, const DynamicsConfig& cfg,
                 const std::optional<ActionProfile>& initial = std::nullopt);

// Joint-strategy variant on a congestion game, exact congestion statistics.
RunTrace run_jsfp_central(const CongestionFormGame& game, const DynamicsConfig& cfg,
                          const std::optional<ActionProfile>& initial = std::nullopt);

// Network variant: players track total congestion by dynamic averaging under
// a doubly stochastic matrix and best-respond to the projected estimate.
RunTrace run_djsfp(const CongestionFormGame& game, const CommGraph& graph,
                   const DsMatrix& w, const DynamicsConfig& cfg,
                   const std::optional<ActionProfile>& initial = std::nullopt);

// Earliest round t such that the profile is constant from t through the end
// of the trace, that suffix is at least `window` rounds long, and the
// constant profile passes `is_pure_ne`.
std::optional<int> detect_absorption(
    const RunTrace& trace, const std::function<bool(const ActionProfile&)>& is_pure_ne,
    int window);
std::optional<int> detect_absorption(const RunTrace& trace,
                                     const NormalFormGame& game, int window);
std::optional<int> detect_absorption(const RunTrace& trace,
                                     const CongestionFormGame& game, int window);

// Plays `profile` for `rounds` rounds, bypassing the action rule.
void force_profile(Learner& learner, const ActionProfile& profile, int rounds);

// Forces `a_star` for `forced_rounds` rounds on top of the learner's current
// state, then reports whether every player's estimated-utility argmax equals
// the true best response to a_star. With zero forced rounds the current
// estimates are compared as they stand.
bool check_condition1(Learner& learner, const ActionProfile& a_star,
                      int forced_rounds);

}  // namespace netfp

#endif  // NETFP_DYNAMICS_HPP_
