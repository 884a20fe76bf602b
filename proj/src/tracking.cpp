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

#include "netfp/tracking.hpp"

#include <cmath>
#include <stdexcept>

namespace netfp {

std::vector<double> leader_track_step(const Matrix& w,
                                      std::span<const double> estimates,
                                      double source_delta, int source) {
  if (!w.square() || static_cast<int>(estimates.size()) != w.rows()) {
    throw std::invalid_argument("leader_track_step: dimension mismatch");
  }
  if (source < 0 || source >= w.rows()) {
    throw std::invalid_argument("leader_track_step: source out of range");
  }
  std::vector<double> shifted(estimates.begin(), estimates.end());
  shifted[source] += source_delta;
  return matvec(w, shifted);
}

std::vector<double> avg_track_step(const Matrix& w,
                                   std::span<const double> estimates,
                                   std::span<const double> deltas) {
  if (!w.square() || static_cast<int>(estimates.size()) != w.rows() ||
      deltas.size() != estimates.size()) {
    throw std::invalid_argument("avg_track_step: dimension mismatch");
  }
  std::vector<double> shifted(estimates.size());
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    shifted[i] = estimates[i] + deltas[i];
  }
  return matvec(w, shifted);
}

double leader_tracking_error_bound(int n, double lambda, double B, int T) {
  if (n < 1 || T < 1 || B < 0.0) {
    throw std::invalid_argument("leader_tracking_error_bound: bad argument");
  }
  if (!(lambda >= 0.0) || lambda >= 1.0) {
    throw std::invalid_argument("leader_tracking_error_bound: lambda must lie in [0,1)");
  }
  return (n + 1.0) / (1.0 - lambda) * (1.0 / T + B * std::pow(lambda, T));
}

int rounds_for_error_bound(int n, double lambda, double B, double eps) {
  if (eps <= 0.0) throw std::invalid_argument("rounds_for_error_bound: eps must be positive");
  // The bound decreases in T and tends to zero, so scan a doubling grid and
  // then bisect for the smallest acceptable T.
  int hi = 1;
  while (leader_tracking_error_bound(n, lambda, B, hi) > eps) {
    if (hi > (1 << 29)) {
      throw std::invalid_argument("rounds_for_error_bound: target too small");
    }
    hi *= 2;
  }
  int lo = hi / 2;  // bound(lo) > eps when lo >= 1
  while (lo + 1 < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (leader_tracking_error_bound(n, lambda, B, mid) > eps) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

double avg_tracking_error_bound(int n, double lambda, int t, double mean_eps) {
  if (n < 1 || t < 1 || mean_eps < 0.0) {
    throw std::invalid_argument("avg_tracking_error_bound: bad argument");
  }
  if (!(lambda >= 0.0) || lambda >= 1.0) {
    throw std::invalid_argument("avg_tracking_error_bound: lambda must lie in [0,1)");
  }
  const double lt = std::pow(lambda, t);
  return n * lt + lambda * (1.0 - lt) / (1.0 - lambda) * (2.0 * n * n) * mean_eps;
}

bool windowed_variation_ok(std::span<const double> window) {
  if (window.empty()) throw std::invalid_argument("windowed_variation_ok: empty window");
  for (double v : window) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("windowed_variation_ok: values must lie in [0,1]");
    }
  }
  bool non_decreasing = true, non_increasing = true;
  for (std::size_t i = 1; i < window.size(); ++i) {
    if (window[i] < window[i - 1]) non_decreasing = false;
    if (window[i] > window[i - 1]) non_increasing = false;
  }
  return non_decreasing || non_increasing;
}

}  // namespace netfp
