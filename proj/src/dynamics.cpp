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

#include "netfp/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <stdexcept>

#include "netfp/kernels.hpp"

namespace netfp {

void DynamicsConfig::validate() const {
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("rho must lie in (0,1)");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (0,1]");
  if (t_max < 1) throw std::invalid_argument("t_max must be at least 1");
  if (absorption_window < 1) throw std::invalid_argument("absorption window must be at least 1");
  if (confirm_rounds < 0) throw std::invalid_argument("confirm_rounds must be nonnegative");
}

Action inertial_step(CounterRng& rng, double rho, Action current,
                     std::span<const Action> br_set) {
  if (br_set.empty()) throw std::invalid_argument("inertial_step: empty best-response set");
  if (rng.bernoulli(rho)) return current;
  if (br_set.size() == 1) return br_set[0];
  return br_set[rng.uniform_int(static_cast<int>(br_set.size()))];
}

Marginal fp_update_empirical(const Marginal& f, Action a_new, double alpha) {
  if (a_new < 0 || a_new >= static_cast<Action>(f.size())) {
    throw std::invalid_argument("fp_update_empirical: action out of range");
  }
  Marginal out = f;
  kernels::scale(out.data(), 1.0 - alpha, out.size());
  out[a_new] += alpha;
  return out;
}

std::vector<double> zeta_update(const std::vector<double>& zeta,
                                const std::vector<int>& own_resources,
                                double alpha) {
  std::vector<double> out = zeta;
  kernels::scale(out.data(), 1.0 - alpha, out.size());
  for (int r : own_resources) {
    if (r < 0 || r >= static_cast<int>(out.size())) {
      throw std::invalid_argument("zeta_update: resource out of range");
    }
    out[r] += alpha;
  }
  return out;
}

std::vector<int> project_to_integers(std::span<const double> v) {
  static std::atomic<bool> warned{false};
  std::vector<int> out(v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    const double x = v[r];
    if (std::isnan(x)) throw std::invalid_argument("project_to_integers: NaN coordinate");
    const double f = std::floor(x);
    long long z = static_cast<long long>(f) + ((x - f >= 0.5) ? 1 : 0);
    if (z < 0) {
      if (!warned.exchange(true)) {
        std::cerr << "project_to_integers: coordinate " << x
                  << " below -1/2 clamped to 0 (further warnings suppressed)\n";
      }
      z = 0;
    }
    out[r] = static_cast<int>(z);
  }
  return out;
}

namespace {

std::vector<Action> argmax_ties(std::span<const double> values) {
  double best = values[0];
  for (double v : values) best = std::max(best, v);
  std::vector<Action> out;
  for (int a = 0; a < static_cast<int>(values.size()); ++a) {
    if (values[a] >= best - kTieTolerance) out.push_back(a);
  }
  return out;
}

void check_player_count(int game_players, int graph_nodes) {
  if (game_players != graph_nodes) {
    throw std::invalid_argument("player count does not match the communication graph");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Central fictitious play

CentralFpLearner::CentralFpLearner(const NormalFormGame& game, double alpha)
    : game_(game), alpha_(alpha) {}

int CentralFpLearner::num_players() const { return game_.num_players(); }
int CentralFpLearner::num_actions(int player) const { return game_.num_actions(player); }

void CentralFpLearner::reset(const ActionProfile& a1) {
  validate_profile(game_, a1);
  empirical_.assign(game_.num_players(), {});
  for (int i = 0; i < game_.num_players(); ++i) {
    empirical_[i].assign(game_.num_actions(i), 0.0);
    empirical_[i][a1[i]] = 1.0;
  }
}

std::vector<Action> CentralFpLearner::best_response_set(int player) const {
  std::vector<std::span<const double>> views(empirical_.size());
  for (std::size_t j = 0; j < empirical_.size(); ++j) views[j] = empirical_[j];
  return argmax_ties(utilities_vs_marginals(game_, player, views));
}

void CentralFpLearner::advance(const ActionProfile& a_next) {
  for (int i = 0; i < game_.num_players(); ++i) {
    kernels::scale(empirical_[i].data(), 1.0 - alpha_, empirical_[i].size());
    empirical_[i][a_next[i]] += alpha_;
  }
}

std::vector<Action> CentralFpLearner::true_best_response_set(
    int player, const ActionProfile& a) const {
  return pure_best_response_set(game_, player, a);
}

// ---------------------------------------------------------------------------
// Distributed fictitious play

DistributedFpLearner::DistributedFpLearner(const NormalFormGame& game,
                                           const CommGraph& graph,
                                           const FpWeightSet& ws, double alpha)
    : game_(game), graph_(graph), weights_(ws), alpha_(alpha) {
  check_player_count(game.num_players(), graph.num_nodes());
  check_player_count(game.num_players(), ws.num_nodes());
}

int DistributedFpLearner::num_players() const { return game_.num_players(); }
int DistributedFpLearner::num_actions(int player) const { return game_.num_actions(player); }

void DistributedFpLearner::reset(const ActionProfile& a1) {
  validate_profile(game_, a1);
  const int n = game_.num_players();
  empirical_.assign(n, {});
  banks_.assign(n, {});
  scratch_.assign(n, {});
  for (int j = 0; j < n; ++j) {
    empirical_[j].assign(game_.num_actions(j), 0.0);
    empirical_[j][a1[j]] = 1.0;
    // Round-1 estimates: each observer holds its weight on the source times
    // the source's fresh statistic; only the source's neighbors (and the
    // source itself, with weight one) see anything.
    banks_[j] = Matrix(n, game_.num_actions(j), 0.0);
    scratch_[j] = Matrix(n, game_.num_actions(j), 0.0);
    const Matrix& w = weights_.matrix(j);
    for (int i = 0; i < n; ++i) {
      const double wij = w(i, j);
      if (wij != 0.0) banks_[j](i, a1[j]) = wij;
    }
  }
}

std::vector<Action> DistributedFpLearner::best_response_set(int player) const {
  const int n = game_.num_players();
  std::vector<std::span<const double>> views(n);
  for (int j = 0; j < n; ++j) {
    views[j] = std::span<const double>(banks_[j].row(player), game_.num_actions(j));
  }
  return argmax_ties(utilities_vs_marginals(game_, player, views));
}

void DistributedFpLearner::advance(const ActionProfile& a_next) {
  const int n = game_.num_players();
  for (int j = 0; j < n; ++j) {
    const int aj = game_.num_actions(j);
    Matrix& bank = banks_[j];
    Matrix& next = scratch_[j];

    // The source adds its own increment before the exchange.
    updated_scratch_ = empirical_[j];
    kernels::scale(updated_scratch_.data(), 1.0 - alpha_, aj);
    updated_scratch_[a_next[j]] += alpha_;
    for (int a = 0; a < aj; ++a) {
      bank(j, a) += updated_scratch_[a] - empirical_[j][a];
    }
    std::swap(empirical_[j], updated_scratch_);

    const Matrix& w = weights_.matrix(j);
    for (int i = 0; i < n; ++i) {
      double* out = next.row(i);
      std::fill(out, out + aj, 0.0);
      for (int k = 0; k < n; ++k) {
        const double wik = w(i, k);
        if (wik != 0.0) kernels::axpy(out, wik, bank.row(k), aj);
      }
    }
    std::swap(banks_[j], scratch_[j]);
  }
}

double DistributedFpLearner::max_estimate_error() const {
  const int n = game_.num_players();
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      worst = std::max(worst, kernels::max_abs_diff(banks_[j].row(i),
                                                    empirical_[j].data(),
                                                    game_.num_actions(j)));
    }
  }
  return worst;
}

double DistributedFpLearner::max_signal_error() const {
  const int n = game_.num_players();
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int a = 0; a < game_.num_actions(j); ++a) {
      double sq = 0.0;
      for (int i = 0; i < n; ++i) {
        const double d = banks_[j](i, a) - empirical_[j][a];
        sq += d * d;
      }
      worst = std::max(worst, std::sqrt(sq));
    }
  }
  return worst;
}

double DistributedFpLearner::mixing_factor() const { return weights_.max_contraction(); }

std::vector<Action> DistributedFpLearner::true_best_response_set(
    int player, const ActionProfile& a) const {
  return pure_best_response_set(game_, player, a);
}

// ---------------------------------------------------------------------------
// Central joint-strategy fictitious play

CentralJsfpLearner::CentralJsfpLearner(const CongestionFormGame& game,
                                       const DynamicsConfig& cfg)
    : game_(game), alpha_(cfg.alpha), zeta_uses_next_action_(cfg.zeta_uses_next_action) {}

int CentralJsfpLearner::num_players() const { return game_.num_players(); }
int CentralJsfpLearner::num_actions(int player) const { return game_.num_actions(player); }

void CentralJsfpLearner::reset(const ActionProfile& a1) {
  const int n = game_.num_players();
  const int m = game_.num_resources();
  zeta_.assign(n, std::vector<double>(m, 0.0));
  zeta_total_.assign(m, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int r : game_.action_resources(i, a1[i])) {
      zeta_[i][r] += 1.0;
      zeta_total_[r] += 1.0;
    }
  }
  last_profile_ = a1;
}

std::vector<Action> CentralJsfpLearner::best_response_set(int player) const {
  const int m = game_.num_resources();
  std::vector<double> others(m);
  for (int r = 0; r < m; ++r) others[r] = zeta_total_[r] - zeta_[player][r];
  const std::vector<int> projected = project_to_integers(others);
  std::vector<double> values(game_.num_actions(player));
  for (Action b = 0; b < game_.num_actions(player); ++b) {
    values[b] = game_.utility(player, b, projected);
  }
  return argmax_ties(values);
}

void CentralJsfpLearner::advance(const ActionProfile& a_next) {
  const int n = game_.num_players();
  const ActionProfile& toward = zeta_uses_next_action_ ? a_next : last_profile_;
  std::fill(zeta_total_.begin(), zeta_total_.end(), 0.0);
  for (int i = 0; i < n; ++i) {
    kernels::scale(zeta_[i].data(), 1.0 - alpha_, zeta_[i].size());
    for (int r : game_.action_resources(i, toward[i])) zeta_[i][r] += alpha_;
    for (int r = 0; r < game_.num_resources(); ++r) zeta_total_[r] += zeta_[i][r];
  }
  last_profile_ = a_next;
}

std::vector<Action> CentralJsfpLearner::true_best_response_set(
    int player, const ActionProfile& a) const {
  return pure_best_response_set(game_, player, a);
}

// ---------------------------------------------------------------------------
// Distributed joint-strategy fictitious play

DistributedJsfpLearner::DistributedJsfpLearner(const CongestionFormGame& game,
                                               const CommGraph& graph,
                                               const DsMatrix& w,
                                               const DynamicsConfig& cfg)
    : game_(game),
      graph_(graph),
      ds_(w),
      alpha_(cfg.alpha),
      zeta_uses_next_action_(cfg.zeta_uses_next_action),
      rescale_(cfg.djsfp_rescale) {
  check_player_count(game.num_players(), graph.num_nodes());
  check_player_count(game.num_players(), w.w.rows());
}

int DistributedJsfpLearner::num_players() const { return game_.num_players(); }
int DistributedJsfpLearner::num_actions(int player) const { return game_.num_actions(player); }

void DistributedJsfpLearner::reset(const ActionProfile& a1) {
  const int n = game_.num_players();
  const int m = game_.num_resources();
  zeta_.assign(n, std::vector<double>(m, 0.0));
  zeta_total_.assign(m, 0.0);
  bank_ = Matrix(n, m, 0.0);
  scratch_ = Matrix(n, m, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int r : game_.action_resources(i, a1[i])) {
      zeta_[i][r] += 1.0;
      zeta_total_[r] += 1.0;
      bank_(i, r) += 1.0;  // initial estimate: each player's own footprint
    }
  }
  last_profile_ = a1;
}

std::vector<double> DistributedJsfpLearner::others_congestion_estimate(int player) const {
  const int m = game_.num_resources();
  const double scale = rescale_ ? static_cast<double>(game_.num_players()) : 1.0;
  std::vector<double> others(m);
  for (int r = 0; r < m; ++r) {
    others[r] = scale * bank_(player, r) - zeta_[player][r];
  }
  return others;
}

std::vector<Action> DistributedJsfpLearner::best_response_set(int player) const {
  const std::vector<double> others = others_congestion_estimate(player);
  const std::vector<int> projected = project_to_integers(others);
  std::vector<double> values(game_.num_actions(player));
  for (Action b = 0; b < game_.num_actions(player); ++b) {
    values[b] = game_.utility(player, b, projected);
  }
  return argmax_ties(values);
}

void DistributedJsfpLearner::advance(const ActionProfile& a_next) {
  const int n = game_.num_players();
  const int m = game_.num_resources();
  const ActionProfile& toward = zeta_uses_next_action_ ? a_next : last_profile_;

  // Each player adds its own statistic increment before the exchange.
  std::fill(zeta_total_.begin(), zeta_total_.end(), 0.0);
  for (int k = 0; k < n; ++k) {
    updated_scratch_ = zeta_[k];
    kernels::scale(updated_scratch_.data(), 1.0 - alpha_, m);
    for (int r : game_.action_resources(k, toward[k])) updated_scratch_[r] += alpha_;
    for (int r = 0; r < m; ++r) bank_(k, r) += updated_scratch_[r] - zeta_[k][r];
    std::swap(zeta_[k], updated_scratch_);
    for (int r = 0; r < m; ++r) zeta_total_[r] += zeta_[k][r];
  }

  const Matrix& w = ds_.w;
  for (int i = 0; i < n; ++i) {
    double* out = scratch_.row(i);
    std::fill(out, out + m, 0.0);
    for (int k = 0; k < n; ++k) {
      const double wik = w(i, k);
      if (wik != 0.0) kernels::axpy(out, wik, bank_.row(k), m);
    }
  }
  std::swap(bank_, scratch_);
  last_profile_ = a_next;
}

double DistributedJsfpLearner::max_estimate_error() const {
  const int n = game_.num_players();
  const int m = game_.num_resources();
  const double scale = rescale_ ? static_cast<double>(n) : 1.0;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < m; ++r) {
      worst = std::max(worst, std::fabs(scale * bank_(i, r) - zeta_total_[r]));
    }
  }
  return worst;
}

double DistributedJsfpLearner::conservation_error() const {
  const int m = game_.num_resources();
  double worst = 0.0;
  for (int r = 0; r < m; ++r) {
    double column = 0.0;
    for (int i = 0; i < game_.num_players(); ++i) column += bank_(i, r);
    worst = std::max(worst, std::fabs(column - zeta_total_[r]));
  }
  return worst;
}

double DistributedJsfpLearner::mixing_factor() const { return ds_.slem; }

std::vector<Action> DistributedJsfpLearner::true_best_response_set(
    int player, const ActionProfile& a) const {
  return pure_best_response_set(game_, player, a);
}

// ---------------------------------------------------------------------------
// Engine

namespace {

int resolve_confirm_rounds(const DynamicsConfig& cfg, double mixing) {
  if (cfg.confirm_rounds > 0) return cfg.confirm_rounds;
  const double decay = std::max(1.0 - cfg.alpha, mixing);
  if (decay <= 0.0) return cfg.absorption_window;
  if (decay >= 1.0) return cfg.t_max;
  const int lock = static_cast<int>(std::ceil(std::log(1e12) / -std::log(decay)));
  return std::max(cfg.absorption_window, lock);
}

}  // namespace

RunTrace run_inertial(Learner& learner, const DynamicsConfig& cfg,
                      const std::function<bool(const ActionProfile&)>& is_pure_ne,
                      const std::optional<ActionProfile>& initial) {
  cfg.validate();
  const int n = learner.num_players();

  std::vector<CounterRng> rngs;
  rngs.reserve(n);
  for (int i = 0; i < n; ++i) rngs.emplace_back(cfg.seed, static_cast<std::uint64_t>(i));

  ActionProfile current;
  if (initial.has_value()) {
    current = *initial;
    if (static_cast<int>(current.size()) != n) {
      throw std::invalid_argument("initial profile length mismatch");
    }
  } else {
    current.resize(n);
    for (int i = 0; i < n; ++i) current[i] = rngs[i].uniform_int(learner.num_actions(i));
  }

  learner.reset(current);

  RunTrace trace;
  trace.seed = cfg.seed;
  trace.actions.reserve(std::min(cfg.t_max, 4096));
  trace.actions.push_back(current);
  trace.estimate_error.push_back(learner.max_estimate_error());

  const int stop_window = std::max(cfg.absorption_window,
                                   resolve_confirm_rounds(cfg, learner.mixing_factor()));
  int suffix_start = 1;
  bool suffix_ne_known = false;
  bool suffix_ne = false;

  ActionProfile next(n);
  for (int t = 1; t < cfg.t_max; ++t) {
    for (int i = 0; i < n; ++i) {
      const std::vector<Action> br = learner.best_response_set(i);
      next[i] = inertial_step(rngs[i], cfg.rho, current[i], br);
    }
    learner.advance(next);
    trace.actions.push_back(next);
    trace.estimate_error.push_back(learner.max_estimate_error());
    if (next != current) {
      suffix_start = t + 1;
      suffix_ne_known = false;
    }
    current = next;

    const int suffix_len = (t + 1) - suffix_start + 1;
    if (suffix_len >= stop_window) {
      if (!suffix_ne_known) {
        suffix_ne = is_pure_ne(current);
        suffix_ne_known = true;
      }
      if (suffix_ne) break;
    }
  }

  const int suffix_len = trace.rounds() - suffix_start + 1;
  if (suffix_len >= cfg.absorption_window) {
    if (!suffix_ne_known) suffix_ne = is_pure_ne(current);
    if (suffix_ne) trace.absorbed_at = suffix_start;
  }
  return trace;
}

RunTrace run_fp_inertia(const NormalFormGame& game, const DynamicsConfig& cfg,
                        const std::optional<ActionProfile>& initial) {
  CentralFpLearner learner(game, cfg.alpha);
  return run_inertial(
      learner, cfg, [&game](const ActionProfile& a) { return is_pure_nash(game, a); },
      initial);
}

RunTrace run_dfp(const NormalFormGame& game, const CommGraph& graph,
                 const FpWeightSet& ws, const DynamicsConfig& cfg,
                 const std::optional<ActionProfile>& initial) {
  DistributedFpLearner learner(game, graph, ws, cfg.alpha);
  return run_inertial(
      learner, cfg, [&game](const ActionProfile& a) { return is_pure_nash(game, a); },
      initial);
}

RunTrace run_jsfp_central(const CongestionFormGame& game, const DynamicsConfig& cfg,
                          const std::optional<ActionProfile>& initial) {
  CentralJsfpLearner learner(game, cfg);
  return run_inertial(
      learner, cfg, [&game](const ActionProfile& a) { return is_pure_nash(game, a); },
      initial);
}

RunTrace run_djsfp(const CongestionFormGame& game, const CommGraph& graph,
                   const DsMatrix& w, const DynamicsConfig& cfg,
                   const std::optional<ActionProfile>& initial) {
  DistributedJsfpLearner learner(game, graph, w, cfg);
  return run_inertial(
      learner, cfg, [&game](const ActionProfile& a) { return is_pure_nash(game, a); },
      initial);
}

std::optional<int> detect_absorption(
    const RunTrace& trace, const std::function<bool(const ActionProfile&)>& is_pure_ne,
    int window) {
  if (trace.actions.empty()) return std::nullopt;
  const ActionProfile& last = trace.actions.back();
  int start = trace.rounds();
  while (start > 1 && trace.actions[start - 2] == last) --start;
  const int suffix_len = trace.rounds() - start + 1;
  if (suffix_len < window) return std::nullopt;
  if (!is_pure_ne(last)) return std::nullopt;
  return start;
}

std::optional<int> detect_absorption(const RunTrace& trace,
                                     const NormalFormGame& game, int window) {
  return detect_absorption(
      trace, [&game](const ActionProfile& a) { return is_pure_nash(game, a); }, window);
}

std::optional<int> detect_absorption(const RunTrace& trace,
                                     const CongestionFormGame& game, int window) {
  return detect_absorption(
      trace, [&game](const ActionProfile& a) { return is_pure_nash(game, a); }, window);
}

void force_profile(Learner& learner, const ActionProfile& profile, int rounds) {
  for (int s = 0; s < rounds; ++s) learner.advance(profile);
}

bool check_condition1(Learner& learner, const ActionProfile& a_star,
                      int forced_rounds) {
  force_profile(learner, a_star, forced_rounds);
  for (int i = 0; i < learner.num_players(); ++i) {
    if (learner.best_response_set(i) != learner.true_best_response_set(i, a_star)) {
      return false;
    }
  }
  return true;
}

}  // namespace netfp
