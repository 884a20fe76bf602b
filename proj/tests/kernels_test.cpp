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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "netfp/kernels.hpp"
#include "netfp/rng.hpp"

using namespace netfp;

namespace {

std::vector<double> random_vec(CounterRng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.next_unit() * 4.0 - 2.0;
  return v;
}

}  // namespace

TEST_CASE("dispatched kernels match the scalar reference") {
  CounterRng rng(42, 0);
  // Lengths straddle the vector width, including empty and tails.
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 13u, 25u, 64u, 1001u}) {
    CAPTURE(n);
    const std::vector<double> a = random_vec(rng, n);
    const std::vector<double> b = random_vec(rng, n);
    const double scale_factor = rng.next_unit() * 3.0 - 1.5;

    // Reductions may differ by association order only.
    CHECK(kernels::dot(a.data(), b.data(), n) ==
          doctest::Approx(kernels::scalar::dot(a.data(), b.data(), n))
              .epsilon(1e-13));
    CHECK(kernels::sum(a.data(), n) ==
          doctest::Approx(kernels::scalar::sum(a.data(), n)).epsilon(1e-13));

    // Elementwise kernels must agree bit for bit.
    CHECK(kernels::max_abs_diff(a.data(), b.data(), n) ==
          kernels::scalar::max_abs_diff(a.data(), b.data(), n));

    std::vector<double> y1 = a, y2 = a;
    kernels::axpy(y1.data(), scale_factor, b.data(), n);
    kernels::scalar::axpy(y2.data(), scale_factor, b.data(), n);
    CHECK(y1 == y2);

    y1 = a;
    y2 = a;
    kernels::scale(y1.data(), scale_factor, n);
    kernels::scalar::scale(y2.data(), scale_factor, n);
    CHECK(y1 == y2);
  }
}

TEST_CASE("a backend was selected") {
  const auto& backend = kernels::active_backend();
  CHECK((std::string(backend.name) == "avx2" || std::string(backend.name) == "scalar"));
}

TEST_CASE("counter rng substreams are independent of extra streams") {
  // Draws from stream i must not change when other streams are consumed.
  CounterRng a(123, 5);
  const auto x1 = a.next_u64();
  const auto x2 = a.next_u64();

  CounterRng other(123, 6);
  (void)other.next_u64();
  CounterRng b(123, 5);
  CHECK(b.next_u64() == x1);
  CHECK(b.next_u64() == x2);
}

TEST_CASE("counter rng units are in range and deterministic") {
  CounterRng a(7, 0), b(7, 0);
  for (int i = 0; i < 1000; ++i) {
    const double u = a.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(u == b.next_unit());
  }
  for (int i = 0; i < 1000; ++i) {
    const int k = a.uniform_int(7);
    CHECK(k >= 0);
    CHECK(k < 7);
  }
}
