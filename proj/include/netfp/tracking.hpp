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

#ifndef NETFP_TRACKING_HPP_
#define NETFP_TRACKING_HPP_

#include <span>
#include <vector>

#include "netfp/linalg.hpp"

namespace netfp {

// One synchronous round of leader tracking: the source's increment is added
// at the source coordinate, then every node averages its in-neighborhood
// under W. With a unit row at the source, the post-state source entry equals
// the new true value.
std::vector<double> leader_track_step(const Matrix& w,
                                      std::span<const double> estimates,
                                      double source_delta, int source);

// One synchronous round of dynamic average tracking under a doubly
// stochastic W: each node adds its own signal increment, then averages.
// Column stochasticity conserves the estimate total up to injected deltas.
std::vector<double> avg_track_step(const Matrix& w,
                                   std::span<const double> estimates,
                                   std::span<const double> deltas);

// Worst-case estimate error after a T-round window in which the tracked
// signal's increments are decreasing and sum to at most one:
// (n+1)/(1-lambda) * (1/T + B*lambda^T), with B a bound on all increments.
double leader_tracking_error_bound(int n, double lambda, double B, int T);

// Smallest window length T for which the bound above drops to eps or less.
int rounds_for_error_bound(int n, double lambda, double B, double eps);

// Worst-case average-tracking error after t rounds when the per-round max
// increment is non-increasing with running mean mean_eps:
// n*lambda^t + lambda*(1-lambda^t)/(1-lambda) * 2n^2 * mean_eps.
double avg_tracking_error_bound(int n, double lambda, int t, double mean_eps);

// True iff the window (values in [0,1]) is monotone, which certifies that
// its increments telescope to at most one.
bool windowed_variation_ok(std::span<const double> window);

}  // namespace netfp

#endif  // NETFP_TRACKING_HPP_
