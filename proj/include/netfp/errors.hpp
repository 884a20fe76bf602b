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

#ifndef NETFP_ERRORS_HPP_
#define NETFP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace netfp {

// Exhaustive enumeration was requested on a game larger than the caller's cap.
class EnumerationCapError : public std::runtime_error {
 public:
  explicit EnumerationCapError(const std::string& what)
      : std::runtime_error(what) {}
};

// A weight matrix (or similar derived object) failed one of its required
// conditions after construction. `condition()` names the violated condition.
class ConstructionFailedError : public std::runtime_error {
 public:
  ConstructionFailedError(const std::string& condition, const std::string& what)
      : std::runtime_error(what), condition_(condition) {}
  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

// An iterative numeric routine did not converge. Carries the last residual.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace netfp

#endif  // NETFP_ERRORS_HPP_
