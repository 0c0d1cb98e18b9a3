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

#include "rigspec/graph.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace rigspec {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
  for (Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("repeated edges are not allowed");
  }
  index();
}

void Graph::index() {
  adj_.assign(n_, {});
  matrix_.assign(static_cast<size_t>(n_) * n_, 0);
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    matrix_[static_cast<size_t>(e.u) * n_ + e.v] = 1;
    matrix_[static_cast<size_t>(e.v) * n_ + e.u] = 1;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::is_complete() const {
  return static_cast<long long>(size()) ==
         static_cast<long long>(n_) * (n_ - 1) / 2;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

Graph Graph::without_edge(Edge e) const {
  if (e.u > e.v) std::swap(e.u, e.v);
  std::vector<Edge> rest;
  rest.reserve(edges_.size());
  bool found = false;
  for (const Edge& f : edges_) {
    if (f == e) {
      found = true;
    } else {
      rest.push_back(f);
    }
  }
  if (!found) throw std::invalid_argument("edge not present");
  return Graph(n_, std::move(rest));
}

Graph Graph::with_edge(Edge e) const {
  std::vector<Edge> more = edges_;
  more.push_back(e);
  return Graph(n_, std::move(more));
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw std::invalid_argument("permutation size mismatch");
  }
  std::vector<Edge> mapped;
  mapped.reserve(edges_.size());
  for (const Edge& e : edges_) mapped.push_back({perm[e.u], perm[e.v]});
  return Graph(n_, std::move(mapped));
}

VertexPartition VertexPartition::make(const Graph& g, VertexSet z,
                                      std::vector<VertexSet> parts) {
  const int n = g.order();
  VertexPartition vp;
  vp.part_of_.assign(n, -2);
  for (int v : z) {
    if (v < 0 || v >= n) throw std::invalid_argument("Z vertex out of range");
    if (vp.part_of_[v] != -2) throw std::invalid_argument("Z repeats a vertex");
    vp.part_of_[v] = -1;
  }
  for (size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw std::invalid_argument("empty part");
    for (int v : parts[p]) {
      if (v < 0 || v >= n) {
        throw std::invalid_argument("part vertex out of range");
      }
      if (vp.part_of_[v] != -2) {
        throw std::invalid_argument("parts overlap each other or Z");
      }
      vp.part_of_[v] = static_cast<int>(p);
    }
    std::sort(parts[p].begin(), parts[p].end());
  }
  if (std::find(vp.part_of_.begin(), vp.part_of_.end(), -2) !=
      vp.part_of_.end()) {
    throw std::invalid_argument("parts do not cover V - Z");
  }
  std::sort(z.begin(), z.end());
  for (const VertexSet& part : parts) {
    if (part.size() == 1) {
      ++vp.trivial_;
      for (int w : g.neighbors(part.front())) {
        if (vp.part_of_[w] == -1) ++vp.z_adjacency_;
      }
    } else {
      ++vp.nontrivial_;
    }
  }
  vp.z_ = std::move(z);
  vp.parts_ = std::move(parts);
  return vp;
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph build_bni(int n, int n1, int i) {
  if (n1 < 1 || n1 > n - 1) {
    throw std::invalid_argument("build_bni: need 1 <= n1 <= n-1");
  }
  if (i < 0 || i > std::min(n1, n - n1)) {
    throw std::invalid_argument("build_bni: need 0 <= i <= min(n1, n-n1)");
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n1; ++u) {
    for (int v = u + 1; v < n1; ++v) edges.push_back({u, v});
  }
  for (int u = n1; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  for (int j = 0; j < i; ++j) edges.push_back({j, n1 + j});
  return Graph(n, std::move(edges));
}

Graph build_join_k2(int n) {
  if (n < 3) throw std::invalid_argument("build_join_k2: need n >= 3");
  std::vector<Edge> edges{{0, 1}};
  for (int v = 2; v < n; ++v) {
    edges.push_back({0, v});
    edges.push_back({1, v});
  }
  return Graph(n, std::move(edges));
}

VertexSet make_vertex_set(const Graph& g, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (!vertices.empty() && (vertices.front() < 0 || vertices.back() >= g.order())) {
    throw std::invalid_argument("vertex out of range");
  }
  return vertices;
}

namespace {

std::vector<char> membership(const Graph& g, std::span<const int> s) {
  std::vector<char> in(g.order(), 0);
  for (int v : s) {
    if (v < 0 || v >= g.order()) {
      throw std::invalid_argument("vertex out of range");
    }
    in[v] = 1;
  }
  return in;
}

}  // namespace

int boundary_size(const Graph& g, std::span<const int> s) {
  std::vector<char> in = membership(g, s);
  int count = static_cast<int>(std::count(in.begin(), in.end(), 1));
  if (count == 0 || count == g.order()) {
    throw std::invalid_argument("boundary_size: S must be nonempty and proper");
  }
  int boundary = 0;
  for (const Edge& e : g.edges()) boundary += in[e.u] != in[e.v];
  return boundary;
}

int induced_edge_count(const Graph& g, std::span<const int> x) {
  std::vector<char> in = membership(g, x);
  int count = 0;
  for (const Edge& e : g.edges()) count += in[e.u] && in[e.v];
  return count;
}

int cross_edge_count(const Graph& g, std::span<const int> x,
                     std::span<const int> y) {
  std::vector<char> in_x = membership(g, x);
  std::vector<char> in_y = membership(g, y);
  int count = 0;
  for (const Edge& e : g.edges()) {
    count += (in_x[e.u] && in_y[e.v]) || (in_y[e.u] && in_x[e.v]);
  }
  return count;
}

int partition_cut(const Graph& g, const VertexPartition& vp) {
  const std::vector<int>& part = vp.part_of();
  if (static_cast<int>(part.size()) != g.order()) {
    throw std::invalid_argument("partition built for a different graph");
  }
  int cut = 0;
  for (const Edge& e : g.edges()) {
    if (part[e.u] >= 0 && part[e.v] >= 0 && part[e.u] != part[e.v]) ++cut;
  }
  return cut;
}

Graph induced_subgraph(const Graph& g, std::span<const int> x) {
  std::vector<int> pos(g.order(), -1);
  for (size_t k = 0; k < x.size(); ++k) pos[x[k]] = static_cast<int>(k);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (pos[e.u] >= 0 && pos[e.v] >= 0) edges.push_back({pos[e.u], pos[e.v]});
  }
  return Graph(static_cast<int>(x.size()), std::move(edges));
}

}  // namespace rigspec
