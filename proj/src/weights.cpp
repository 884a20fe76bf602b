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

#include "netfp/weights.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "netfp/errors.hpp"

namespace netfp {

namespace {

constexpr double kStochasticTol = 1e-12;

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(15);
  ss << v;
  return ss.str();
}

Matrix delete_row_col(const Matrix& w, int j) {
  const int n = w.rows();
  Matrix p(n - 1, n - 1);
  for (int r = 0, pr = 0; r < n; ++r) {
    if (r == j) continue;
    for (int c = 0, pc = 0; c < n; ++c) {
      if (c == j) continue;
      p(pr, pc) = w(r, c);
      ++pc;
    }
    ++pr;
  }
  return p;
}

bool pattern_irreducible(const Matrix& m) {
  const int n = m.rows();
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && m(i, j) != 0.0) adj[i].push_back(j);
    }
  }
  return strongly_connected(adj);
}

void append(ValidationReport& report, std::string name, bool pass, std::string witness) {
  report.conditions.push_back({std::move(name), pass, std::move(witness)});
}

}  // namespace

bool ValidationReport::all_pass() const {
  for (const auto& c : conditions) {
    if (!c.pass) return false;
  }
  return true;
}

const ConditionResult* ValidationReport::find(const std::string& name) const {
  for (const auto& c : conditions) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string ValidationReport::to_json() const {
  std::ostringstream ss;
  ss << "[";
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    if (i) ss << ",";
    ss << "{\"condition\":\"" << conditions[i].name << "\",\"pass\":"
       << (conditions[i].pass ? "true" : "false") << ",\"witness\":\""
       << conditions[i].witness << "\"}";
  }
  ss << "]";
  return ss.str();
}

double FpWeightSet::max_contraction() const {
  double m = 0.0;
  for (double c : contraction_) m = std::max(m, c);
  return m;
}

double spectral_gap(const Matrix& m) { return operator_two_norm(m); }

ValidationReport verify_fp_weight_matrix(const Matrix& w, int source,
                                         const CommGraph& graph) {
  ValidationReport report;
  const int n = graph.num_nodes();
  if (w.rows() != n || w.cols() != n) {
    throw std::invalid_argument("weight matrix dimension mismatch");
  }

  bool nonneg = true, rows_ok = true;
  std::string witness;
  for (int i = 0; i < n && (nonneg || rows_ok); ++i) {
    double row_sum = 0.0;
    for (int k = 0; k < n; ++k) {
      if (w(i, k) < -kStochasticTol) {
        nonneg = false;
        witness = "entry (" + std::to_string(i) + "," + std::to_string(k) + ")=" + fmt(w(i, k));
      }
      row_sum += w(i, k);
    }
    if (std::fabs(row_sum - 1.0) > kStochasticTol && rows_ok) {
      rows_ok = false;
      witness = "row " + std::to_string(i) + " sums to " + fmt(row_sum);
    }
  }
  append(report, "nonnegative", nonneg, nonneg ? "" : witness);
  append(report, "row_stochastic", rows_ok, rows_ok ? "" : witness);

  bool sparsity_ok = true;
  std::string sparsity_witness;
  for (int i = 0; i < n && sparsity_ok; ++i) {
    for (int k = 0; k < n; ++k) {
      if (w(i, k) != 0.0 && k != i && !graph.has_edge(i, k)) {
        sparsity_ok = false;
        sparsity_witness =
            "entry (" + std::to_string(i) + "," + std::to_string(k) + ") has no edge";
        break;
      }
    }
  }
  append(report, "sparsity_conforms", sparsity_ok, sparsity_witness);

  const bool unit_row = std::fabs(w(source, source) - 1.0) <= kStochasticTol;
  append(report, "unit_source_row", unit_row,
         unit_row ? "" : "diagonal at source = " + fmt(w(source, source)));

  if (n == 1) {
    // Degenerate single-node family: nothing left after deleting the source.
    append(report, "block_irreducible", true, "trivial");
    append(report, "block_substochastic", true, "trivial");
    append(report, "contraction_below_one", true, "lambda=0");
    return report;
  }

  const Matrix p = delete_row_col(w, source);

  const bool irred = pattern_irreducible(p);
  append(report, "block_irreducible", irred,
         irred ? "" : "source-deleted pattern is not strongly connected");

  double max_deficit = 0.0;
  for (int r = 0; r < p.rows(); ++r) {
    double row_sum = 0.0;
    for (int c = 0; c < p.cols(); ++c) row_sum += p(r, c);
    max_deficit = std::max(max_deficit, 1.0 - row_sum);
  }
  const bool sub = max_deficit > kStochasticTol;
  append(report, "block_substochastic", sub, "max row deficit = " + fmt(max_deficit));

  const double lambda = operator_two_norm(p);
  append(report, "contraction_below_one", lambda < 1.0, "lambda=" + fmt(lambda));

  return report;
}

ValidationReport verify_fp_weight_conditions(const FpWeightSet& ws,
                                             const CommGraph& graph) {
  ValidationReport combined;
  for (int j = 0; j < ws.num_nodes(); ++j) {
    ValidationReport one = verify_fp_weight_matrix(ws.matrix(j), j, graph);
    for (auto& c : one.conditions) {
      c.name = "source" + std::to_string(j) + "." + c.name;
      combined.conditions.push_back(std::move(c));
    }
  }
  return combined;
}

namespace {

// Metropolis row weights over the symmetric core of the graph.
double metropolis_weight(const CommGraph& g, int i, int k) {
  return 1.0 / (1.0 + std::max(g.degree(i), g.degree(k)));
}

Matrix build_fp_matrix(const CommGraph& graph, int source, FpWeightStyle style) {
  const int n = graph.num_nodes();
  Matrix w(n, n);
  w(source, source) = 1.0;
  for (int i = 0; i < n; ++i) {
    if (i == source) continue;
    if (style == FpWeightStyle::kUniform) {
      const double share = 1.0 / (1 + graph.degree(i));
      w(i, i) = share;
      for (int k : graph.neighbors(i)) w(i, k) = share;
    } else {
      double self = 1.0;
      for (int k : graph.neighbors(i)) {
        const double wk = metropolis_weight(graph, i, k);
        w(i, k) = wk;
        self -= wk;
      }
      w(i, i) = self;
    }
  }
  return w;
}

}  // namespace

FpWeightSet build_fp_weights(const CommGraph& graph, FpWeightStyle style) {
  if (style == FpWeightStyle::kMetropolis && !graph.symmetric()) {
    throw ConstructionFailedError(
        "symmetric_graph", "metropolis weights need a symmetric graph");
  }
  const int n = graph.num_nodes();
  std::vector<Matrix> mats;
  std::vector<double> lambdas;
  mats.reserve(n);
  lambdas.reserve(n);
  // Conditions the tracking bound relies on; irreducibility of the
  // source-deleted block is reported by the validator but is structurally
  // unattainable for some graph/source pairs and is not required here.
  static const char* kRequired[] = {"nonnegative", "row_stochastic",
                                    "sparsity_conforms", "unit_source_row",
                                    "block_substochastic", "contraction_below_one"};
  for (int j = 0; j < n; ++j) {
    Matrix w = build_fp_matrix(graph, j, style);
    const ValidationReport report = verify_fp_weight_matrix(w, j, graph);
    for (const char* name : kRequired) {
      const ConditionResult* c = report.find(name);
      if (c != nullptr && !c->pass) {
        throw ConstructionFailedError(
            c->name, "fp weight construction for source " + std::to_string(j) +
                         " violates " + c->name + " (" + c->witness + ")");
      }
    }
    const double lambda = n == 1 ? 0.0 : operator_two_norm(delete_row_col(w, j));
    mats.push_back(std::move(w));
    lambdas.push_back(lambda);
  }
  return FpWeightSet(std::move(mats), std::move(lambdas));
}

DsMatrix build_doubly_stochastic(const CommGraph& graph) {
  const int n = graph.num_nodes();
  // Use only edges present in both directions; that core must be connected.
  std::vector<std::vector<int>> mutual(n);
  for (int i = 0; i < n; ++i) {
    for (int k : graph.neighbors(i)) {
      if (graph.has_edge(k, i)) mutual[i].push_back(k);
    }
  }
  if (n > 1 && !strongly_connected(mutual)) {
    throw ConstructionFailedError(
        "symmetric_core_connected",
        "the bidirectional edge core of the graph is not connected");
  }

  Matrix w(n, n);
  for (int i = 0; i < n; ++i) {
    double self = 1.0;
    for (int k : mutual[i]) {
      const double wk =
          1.0 / (1.0 + std::max<int>(mutual[i].size(), mutual[k].size()));
      w(i, k) = wk;
      self -= wk;
    }
    w(i, i) = self;
  }

  const ValidationReport report = verify_ds_conditions(w, graph);
  for (const auto& c : report.conditions) {
    if (!c.pass) {
      throw ConstructionFailedError(
          c.name, "doubly stochastic construction violates " + c.name + " (" +
                      c.witness + ")");
    }
  }
  const double slem = n == 1 ? 0.0 : second_eigenvalue_modulus(w);
  return DsMatrix{std::move(w), slem};
}

ValidationReport verify_ds_conditions(const Matrix& w, const CommGraph& graph) {
  ValidationReport report;
  const int n = graph.num_nodes();
  if (w.rows() != n || w.cols() != n) {
    throw std::invalid_argument("weight matrix dimension mismatch");
  }

  bool nonneg = true;
  std::string witness;
  for (int i = 0; i < n && nonneg; ++i) {
    for (int k = 0; k < n; ++k) {
      if (w(i, k) < -kStochasticTol) {
        nonneg = false;
        witness = "entry (" + std::to_string(i) + "," + std::to_string(k) + ")=" + fmt(w(i, k));
        break;
      }
    }
  }
  append(report, "nonnegative", nonneg, witness);

  bool rows_ok = true, cols_ok = true;
  for (int i = 0; i < n; ++i) {
    double rs = 0.0, cs = 0.0;
    for (int k = 0; k < n; ++k) {
      rs += w(i, k);
      cs += w(k, i);
    }
    if (std::fabs(rs - 1.0) > kStochasticTol && rows_ok) {
      rows_ok = false;
      append(report, "row_stochastic", false, "row " + std::to_string(i) + " sums to " + fmt(rs));
    }
    if (std::fabs(cs - 1.0) > kStochasticTol && cols_ok) {
      cols_ok = false;
      append(report, "column_stochastic", false,
             "column " + std::to_string(i) + " sums to " + fmt(cs));
    }
  }
  if (rows_ok) append(report, "row_stochastic", true, "");
  if (cols_ok) append(report, "column_stochastic", true, "");

  bool symmetric = true;
  for (int i = 0; i < n && symmetric; ++i) {
    for (int k = i + 1; k < n; ++k) {
      if (std::fabs(w(i, k) - w(k, i)) > kStochasticTol) {
        symmetric = false;
        break;
      }
    }
  }
  append(report, "symmetric", symmetric, "");

  bool sparsity_ok = true;
  std::string sparsity_witness;
  for (int i = 0; i < n && sparsity_ok; ++i) {
    for (int k = 0; k < n; ++k) {
      if (w(i, k) != 0.0 && k != i && !graph.has_edge(i, k)) {
        sparsity_ok = false;
        sparsity_witness =
            "entry (" + std::to_string(i) + "," + std::to_string(k) + ") has no edge";
        break;
      }
    }
  }
  append(report, "sparsity_conforms", sparsity_ok, sparsity_witness);

  const bool irred = pattern_irreducible(w);
  append(report, "irreducible", irred, irred ? "" : "pattern not strongly connected");

  bool aperiodic = false;
  for (int i = 0; i < n; ++i) {
    if (w(i, i) > kStochasticTol) {
      aperiodic = true;
      break;
    }
  }
  append(report, "aperiodic", aperiodic,
         aperiodic ? "positive diagonal entry" : "no positive diagonal entry");

  const double slem = n == 1 ? 0.0 : second_eigenvalue_modulus(w);
  append(report, "contraction_below_one", slem < 1.0, "lambda=" + fmt(slem));

  return report;
}

}  // namespace netfp
