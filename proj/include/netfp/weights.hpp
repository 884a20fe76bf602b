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

#ifndef NETFP_WEIGHTS_HPP_
#define NETFP_WEIGHTS_HPP_

#include <string>
#include <vector>

#include "netfp/graph.hpp"
#include "netfp/linalg.hpp"

namespace netfp {

struct ConditionResult {
  std::string name;
  bool pass = false;
  std::string witness;  // short human-readable evidence (value, location)
};

struct ValidationReport {
  std::vector<ConditionResult> conditions;
  bool all_pass() const;
  const ConditionResult* find(const std::string& name) const;
  std::string to_json() const;
};

// Per-source weight family for leader tracking. matrix(j) carries, at entry
// (i, k), the weight player i places on player k's copy of source j's signal.
// Row j of matrix(j) is the unit row, so the source always holds its own true
// value. contraction(j) is the operator 2-norm of the source-deleted block
// P_j; the tracking error shrinks by this factor per hop.
class FpWeightSet {
 public:
  FpWeightSet(std::vector<Matrix> per_source, std::vector<double> contraction)
      : per_source_(std::move(per_source)), contraction_(std::move(contraction)) {}

  int num_nodes() const { return static_cast<int>(per_source_.size()); }
  const Matrix& matrix(int source) const { return per_source_[source]; }
  double contraction(int source) const { return contraction_[source]; }
  double max_contraction() const;

 private:
  std::vector<Matrix> per_source_;
  std::vector<double> contraction_;
};

enum class FpWeightStyle {
  // Non-source rows use Metropolis weights toward neighbors with the
  // remainder on self. The source-deleted block is then symmetric, which
  // forces its 2-norm below one on every connected symmetric graph.
  kMetropolis,
  // Non-source rows split mass equally over {self} ∪ neighbors. Simpler, but
  // its source-deleted block can have 2-norm above one (e.g. a star with a
  // leaf source), in which case construction fails.
  kUniform,
};

// Builds the per-source weight family and validates it. Throws
// ConstructionFailedError naming the first violated required condition
// (row stochasticity, sparsity, unit source row, substochasticity, or
// contraction < 1).
FpWeightSet build_fp_weights(const CommGraph& graph,
                             FpWeightStyle style = FpWeightStyle::kMetropolis);

// Reports every condition for one source matrix: row stochasticity,
// nonnegativity, sparsity conformance, unit source row, irreducibility of the
// source-deleted block (strong connectivity of its pattern; structurally
// unsatisfiable for some graph/source pairs, e.g. a star observed from the
// hub), substochasticity (at least one row of the block sums below one), and
// contraction (2-norm of the block below one).
ValidationReport verify_fp_weight_matrix(const Matrix& w, int source,
                                         const CommGraph& graph);

// All sources combined; condition names are prefixed with "source<j>.".
ValidationReport verify_fp_weight_conditions(const FpWeightSet& ws,
                                             const CommGraph& graph);

// Symmetric doubly stochastic mixing matrix with its second eigenvalue
// modulus (the consensus contraction factor).
struct DsMatrix {
  Matrix w;
  double slem = 0.0;
};

// Metropolis construction on the graph's symmetric core:
// w(i,k) = 1/(1+max(deg_i, deg_k)) for mutual neighbors, remainder on self.
// Requires the symmetric core to be connected; positive self-weights make the
// chain aperiodic. Validated after construction.
DsMatrix build_doubly_stochastic(const CommGraph& graph);

// Conditions: symmetry, row and column stochasticity, nonnegativity,
// sparsity conformance, irreducibility, aperiodicity (a positive diagonal
// entry; sufficient), and second eigenvalue modulus < 1.
ValidationReport verify_ds_conditions(const Matrix& w, const CommGraph& graph);

// Contraction factor the validators bound: for a source-deleted block this
// is the operator 2-norm; validators require the result to be < 1.
double spectral_gap(const Matrix& m);

}  // namespace netfp

#endif  // NETFP_WEIGHTS_HPP_
