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

#include "netfp/kernels.hpp"

#if defined(NETFP_HAVE_AVX2_BACKEND)
namespace netfp::kernels::avx2 {
double dot(const double*, const double*, std::size_t);
void axpy(double*, double, const double*, std::size_t);
void scale(double*, double, std::size_t);
double sum(const double*, std::size_t);
double max_abs_diff(const double*, const double*, std::size_t);
}  // namespace netfp::kernels::avx2
#endif

namespace netfp::kernels {
namespace {

Backend make_backend() {
#if defined(NETFP_HAVE_AVX2_BACKEND)
  if (__builtin_cpu_supports("avx2")) {
    return Backend{avx2::dot, avx2::axpy, avx2::scale, avx2::sum,
                   avx2::max_abs_diff, "avx2"};
  }
#endif
  return Backend{scalar::dot, scalar::axpy, scalar::scale, scalar::sum,
                 scalar::max_abs_diff, "scalar"};
}

}  // namespace

const Backend& active_backend() {
  static const Backend backend = make_backend();
  return backend;
}

}  // namespace netfp::kernels
