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

#ifndef NETFP_LINALG_HPP_
#define NETFP_LINALG_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace netfp {

// Dense row-major matrix. Networks here have at most a few dozen nodes, so
// everything is small and dense on purpose.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}
  Matrix(const Matrix&) = default;
  Matrix& operator=(const Matrix&) = default;
  Matrix(Matrix&& other) noexcept
      : rows_(other.rows_), cols_(other.cols_), data_(std::move(other.data_)) {
    other.rows_ = other.cols_ = 0;
  }
  Matrix& operator=(Matrix&& other) noexcept {
    rows_ = other.rows_;
    cols_ = other.cols_;
    data_ = std::move(other.data_);
    other.rows_ = other.cols_ = 0;
    return *this;
  }

  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  double* row(int r) { return data_.data() + static_cast<std::size_t>(r) * cols_; }
  const double* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * cols_; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// y = M x
std::vector<double> matvec(const Matrix& m, std::span<const double> x);

// Euclidean norm of a vector.
double norm2(std::span<const double> x);

// Largest singular value of a square matrix (the operator 2-norm), computed
// by power iteration on M^T M with a seeded start vector. Throws NumericError
// with the final residual if the iteration does not settle.
double operator_two_norm(const Matrix& m, double tol = 1e-13, int max_iters = 100000);

// Second largest eigenvalue modulus of a symmetric stochastic matrix,
// computed as the operator norm of W - (1/n)*ones. For symmetric W this is
// exact; callers validate symmetry separately.
double second_eigenvalue_modulus(const Matrix& w);

}  // namespace netfp

#endif  // NETFP_LINALG_HPP_
