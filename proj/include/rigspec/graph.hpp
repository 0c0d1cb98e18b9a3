// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RIGSPEC_GRAPH_HPP_
#define RIGSPEC_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rigspec {

/// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of vertex labels.
using VertexSet = std::vector<int>;

/// Raised for malformed graph6 input.
class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
///
/// Edges are stored sorted with u < v; the adjacency index and the dense
/// adjacency matrix are kept alongside so neighbor scans and adjacency
/// queries are both cheap at the sizes this library targets.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Builds from an edge list. Endpoint order is normalized. Throws
  /// std::invalid_argument on loops, repeated edges or out-of-range labels.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const {
    return matrix_[static_cast<size_t>(u) * n_ + v] != 0;
  }

  int min_degree() const;
  int max_degree() const;
  bool is_complete() const;
  bool is_connected() const;

  Graph without_edge(Edge e) const;
  Graph with_edge(Edge e) const;

  /// Relabels so that old vertex v becomes perm[v].
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void index();

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint8_t> matrix_;
};

/// A vertex set Z together with a partition of the remaining vertices.
///
/// Trivial parts are singletons. z_adjacency() is the sum, over trivial
/// parts {v}, of the number of Z-vertices adjacent to v.
class VertexPartition {
 public:
  /// Validates against g: Z and every part in range, parts nonempty,
  /// pairwise disjoint and covering exactly V(g) - Z.
  static VertexPartition make(const Graph& g, VertexSet z,
                              std::vector<VertexSet> parts);

  const VertexSet& z() const { return z_; }
  const std::vector<VertexSet>& parts() const { return parts_; }
  int trivial_count() const { return trivial_; }
  int nontrivial_count() const { return nontrivial_; }
  int z_adjacency() const { return z_adjacency_; }

  /// part_of()[v] is the part index of v, or -1 for v in Z.
  const std::vector<int>& part_of() const { return part_of_; }

 private:
  VertexPartition() = default;

  VertexSet z_;
  std::vector<VertexSet> parts_;
  std::vector<int> part_of_;
  int trivial_ = 0;
  int nontrivial_ = 0;
  int z_adjacency_ = 0;
};

// Constructors for the graph families used throughout.

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// K_{n1} on 0..n1-1 and K_{n-n1} on n1..n-1, plus the i cross edges
/// {j, n1 + j} for j < i. Requires 1 <= n1 <= n-1, 0 <= i <= min(n1, n-n1).
Graph build_bni(int n, int n1, int i);

/// Join of K_2 = {0, 1} with an independent set on 2..n-1. Requires n >= 3.
Graph build_join_k2(int n);

// graph6 (McKay). Lines are passed without their trailing newline.

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

/// Normalizes an arbitrary vertex list into a VertexSet, checking range.
VertexSet make_vertex_set(const Graph& g, std::vector<int> vertices);

// Edge-counting primitives. Vertex sets must be sorted and in range.

/// |d(S)|: edges with exactly one endpoint in S. Requires S nonempty, proper.
int boundary_size(const Graph& g, std::span<const int> s);

/// e(X): edges with both endpoints in X.
int induced_edge_count(const Graph& g, std::span<const int> x);

/// e(X, Y): edges with one endpoint in X and the other in Y.
int cross_edge_count(const Graph& g, std::span<const int> x,
                     std::span<const int> y);

/// e_{G-Z}(pi): edges of G - Z whose endpoints lie in different parts.
int partition_cut(const Graph& g, const VertexPartition& vp);

/// Subgraph induced on X, relabeled 0..|X|-1 in the order of X.
Graph induced_subgraph(const Graph& g, std::span<const int> x);

}  // namespace rigspec

#endif  // RIGSPEC_GRAPH_HPP_
