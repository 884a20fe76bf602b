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

#include "netfp/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace netfp {

const char* topology_name(Topology t) {
  switch (t) {
    case Topology::kComplete: return "complete";
    case Topology::kLine: return "line";
    case Topology::kStar: return "star";
    case Topology::kRing: return "ring";
  }
  return "unknown";
}

Topology topology_from_name(const std::string& name) {
  if (name == "complete") return Topology::kComplete;
  if (name == "line") return Topology::kLine;
  if (name == "star") return Topology::kStar;
  if (name == "ring") return Topology::kRing;
  throw std::invalid_argument("unknown topology: " + name);
}

CommGraph::CommGraph(int num_nodes, const std::vector<std::pair<int, int>>& edges) {
  if (num_nodes < 1) throw std::invalid_argument("graph needs at least one node");
  neighbors_.resize(num_nodes);
  self_loop_.assign(num_nodes, 0);
  for (const auto& [i, j] : edges) {
    if (i < 0 || i >= num_nodes || j < 0 || j >= num_nodes) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (i == j) {
      self_loop_[i] = 1;
    } else {
      neighbors_[i].push_back(j);
    }
  }
  for (auto& nbrs : neighbors_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  if (!strongly_connected(neighbors_)) {
    throw std::invalid_argument("communication graph must be strongly connected");
  }
}

bool CommGraph::has_edge(int i, int j) const {
  if (i == j) return self_loop_[i];
  const auto& nbrs = neighbors_[i];
  return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

bool CommGraph::symmetric() const {
  for (int i = 0; i < num_nodes(); ++i) {
    for (int j : neighbors_[i]) {
      if (!has_edge(j, i)) return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> CommGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < num_nodes(); ++i) {
    if (self_loop_[i]) out.emplace_back(i, i);
    for (int j : neighbors_[i]) out.emplace_back(i, j);
  }
  return out;
}

CommGraph CommGraph::complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) edges.emplace_back(i, j);
    }
  }
  if (n == 1) return CommGraph(1, {});
  return CommGraph(n, edges);
}

CommGraph CommGraph::line(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) {
    edges.emplace_back(i, i + 1);
    edges.emplace_back(i + 1, i);
  }
  return CommGraph(n, edges);
}

CommGraph CommGraph::star(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, 0);
  }
  return CommGraph(n, edges);
}

CommGraph CommGraph::ring(int n) {
  if (n <= 2) return line(n);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    edges.emplace_back(i, j);
    edges.emplace_back(j, i);
  }
  return CommGraph(n, edges);
}

CommGraph CommGraph::make(Topology t, int n) {
  switch (t) {
    case Topology::kComplete: return complete(n);
    case Topology::kLine: return line(n);
    case Topology::kStar: return star(n);
    case Topology::kRing: return ring(n);
  }
  throw std::invalid_argument("unknown topology");
}

bool strongly_connected(const std::vector<std::vector<int>>& out_neighbors) {
  const int n = static_cast<int>(out_neighbors.size());
  if (n == 0) return false;
  if (n == 1) return true;

  auto reach_all = [n](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };

  if (!reach_all(out_neighbors)) return false;
  std::vector<std::vector<int>> reversed(n);
  for (int i = 0; i < n; ++i) {
    for (int j : out_neighbors[i]) reversed[j].push_back(i);
  }
  return reach_all(reversed);
}

CommGraph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open edge list: " + path);
  std::vector<std::pair<int, int>> edges;
  int max_node = -1;
  std::string ln;
  while (std::getline(in, ln)) {
    if (ln.empty() || ln[0] == '#') continue;
    std::istringstream ss(ln);
    int i = -1, j = -1;
    if (!(ss >> i >> j)) throw std::invalid_argument("bad edge line: " + ln);
    edges.emplace_back(i, j);
    max_node = std::max({max_node, i, j});
  }
  if (max_node < 0) throw std::invalid_argument("edge list is empty: " + path);
  return CommGraph(max_node + 1, edges);
}

void save_edge_list(const CommGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write edge list: " + path);
  for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
}

}  // namespace netfp
