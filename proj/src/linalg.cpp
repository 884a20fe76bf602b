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

#include "netfp/linalg.hpp"

#include <cmath>
#include <stdexcept>

#include "netfp/errors.hpp"
#include "netfp/kernels.hpp"
#include "netfp/rng.hpp"

namespace netfp {

std::vector<double> matvec(const Matrix& m, std::span<const double> x) {
  if (static_cast<int>(x.size()) != m.cols()) {
    throw std::invalid_argument("matvec: dimension mismatch");
  }
  std::vector<double> y(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    y[r] = kernels::dot(m.row(r), x.data(), x.size());
  }
  return y;
}

double norm2(std::span<const double> x) {
  return std::sqrt(kernels::dot(x.data(), x.data(), x.size()));
}

double operator_two_norm(const Matrix& m, double tol, int max_iters) {
  if (!m.square()) throw std::invalid_argument("operator_two_norm: matrix not square");
  const int n = m.rows();
  if (n == 0) return 0.0;
  if (n == 1) return std::fabs(m(0, 0));

  // Gram matrix G = M^T M; its top eigenvalue is the squared 2-norm.
  Matrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) acc += m(k, i) * m(k, j);
      g(i, j) = acc;
    }
  }

  CounterRng rng(0x5eedu, 17);
  std::vector<double> v(n);
  for (auto& vi : v) vi = rng.next_unit() + 0.25;
  double nv = norm2(v);
  for (auto& vi : v) vi /= nv;

  double lambda = 0.0;
  double residual = 1.0;
  for (int it = 0; it < max_iters; ++it) {
    std::vector<double> w = matvec(g, v);
    const double next = kernels::dot(v.data(), w.data(), v.size());  // Rayleigh quotient
    const double wn = norm2(w);
    if (wn == 0.0) return 0.0;  // v landed in the kernel of G: norm is attained at 0
    for (int i = 0; i < n; ++i) v[i] = w[i] / wn;
    residual = std::fabs(next - lambda);
    lambda = next;
    if (residual <= tol * std::max(1.0, std::fabs(lambda))) {
      return std::sqrt(std::max(0.0, lambda));
    }
  }
  throw NumericError("operator_two_norm: power iteration did not converge", residual);
}

double second_eigenvalue_modulus(const Matrix& w) {
  if (!w.square()) throw std::invalid_argument("second_eigenvalue_modulus: matrix not square");
  const int n = w.rows();
  if (n <= 1) return 0.0;
  Matrix deflated = w;
  const double c = 1.0 / n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) deflated(i, j) -= c;
  }
  return operator_two_norm(deflated);
}

}  // namespace netfp
