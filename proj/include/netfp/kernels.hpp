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

#ifndef NETFP_KERNELS_HPP_
#define NETFP_KERNELS_HPP_

#include <cstddef>

// Small dense-vector kernels used by the simulation inner loops: estimate-bank
// weight products, fading-memory updates and expected-utility accumulation.
// Every kernel has a scalar reference implementation; on x86-64 an AVX2
// variant is selected once at startup if the CPU supports it.
//
// Elementwise kernels (axpy, scale, max_abs_diff) are bit-identical across
// backends: neither side uses fused multiply-add, so each element sees the
// same two roundings. Reductions (dot, sum) differ only in association
// order; simulation state never flows through them, they serve validation
// and diagnostics.

namespace netfp::kernels {

// Scalar reference kernels. Always compiled; tests use these as the oracle
// for whichever backend the dispatcher picked.
namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double* y, double a, const double* x, std::size_t n);  // y += a*x
void scale(double* y, double a, std::size_t n);                  // y *= a
double sum(const double* x, std::size_t n);
double max_abs_diff(const double* a, const double* b, std::size_t n);
}  // namespace scalar

struct Backend {
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double*, double, const double*, std::size_t);
  void (*scale)(double*, double, std::size_t);
  double (*sum)(const double*, std::size_t);
  double (*max_abs_diff)(const double*, const double*, std::size_t);
  const char* name;
};

// The backend chosen for this process ("avx2" or "scalar").
const Backend& active_backend();

// Below this length the indirect call costs more than the work; elementwise
// kernels short-circuit to an inline loop, which is bit-identical to every
// backend by construction.
inline constexpr std::size_t kInlineThreshold = 8;

inline double dot(const double* a, const double* b, std::size_t n) {
  return active_backend().dot(a, b, n);
}
inline void axpy(double* y, double a, const double* x, std::size_t n) {
  if (n < kInlineThreshold) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
    return;
  }
  active_backend().axpy(y, a, x, n);
}
inline void scale(double* y, double a, std::size_t n) {
  if (n < kInlineThreshold) {
    for (std::size_t i = 0; i < n; ++i) y[i] *= a;
    return;
  }
  active_backend().scale(y, a, n);
}
inline double sum(const double* x, std::size_t n) {
  return active_backend().sum(x, n);
}
inline double max_abs_diff(const double* a, const double* b, std::size_t n) {
  if (n < kInlineThreshold) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
      if (d > m) m = d;
    }
    return m;
  }
  return active_backend().max_abs_diff(a, b, n);
}

}  // namespace netfp::kernels

#endif  // NETFP_KERNELS_HPP_
