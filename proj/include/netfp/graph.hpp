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

#ifndef NETFP_GRAPH_HPP_
#define NETFP_GRAPH_HPP_

#include <string>
#include <vector>

namespace netfp {

enum class Topology { kComplete, kLine, kStar, kRing };

const char* topology_name(Topology t);
Topology topology_from_name(const std::string& name);

// Directed communication graph, strongly connected by construction. The edge
// (i, j) grants player i access to player j's messages, so neighbors(i) is
// the set of players whose state player i may read each round. All named
// topology generators emit both directions of every edge.
class CommGraph {
 public:
  // Edges as (i, j) pairs. Self-loops are recorded separately and do not
  // appear in neighbors(); weight constructions always allow a self term.
  CommGraph(int num_nodes, const std::vector<std::pair<int, int>>& edges);

  static CommGraph complete(int n);
  static CommGraph line(int n);
  static CommGraph star(int n);  // node 0 is the hub
  static CommGraph ring(int n);
  static CommGraph make(Topology t, int n);

  int num_nodes() const { return static_cast<int>(neighbors_.size()); }
  const std::vector<int>& neighbors(int i) const { return neighbors_[i]; }
  bool has_edge(int i, int j) const;
  bool has_self_loop(int i) const { return self_loop_[i]; }
  int degree(int i) const { return static_cast<int>(neighbors_[i].size()); }

  // True if every recorded edge is present in both directions.
  bool symmetric() const;

  std::vector<std::pair<int, int>> edges() const;

 private:
  std::vector<std::vector<int>> neighbors_;  // sorted, no self entries
  std::vector<char> self_loop_;
};

// True iff the directed graph given by the adjacency matrix pattern is
// strongly connected (used both for graphs and for matrix irreducibility).
bool strongly_connected(const std::vector<std::vector<int>>& out_neighbors);

// Edge-list text format: one "i j" pair per line, 0-based ids; lines starting
// with '#' are comments.
CommGraph load_edge_list(const std::string& path);
void save_edge_list(const CommGraph& g, const std::string& path);

}  // namespace netfp

#endif  // NETFP_GRAPH_HPP_
