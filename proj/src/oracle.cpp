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

#include "rigspec/oracle.hpp"

#include "rigspec/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <utility>

namespace rigspec::oracle {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(int n, const std::vector<Edge>& edges) {
  std::vector<Mask> adj(n, 0);
  for (const Edge& e : edges) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

int edges_inside(const std::vector<Mask>& adj, Mask x) {
  int twice = 0;
  for (Mask rest = x; rest != 0; rest &= rest - 1) {
    twice += std::popcount(adj[std::countr_zero(rest)] & x);
  }
  return twice / 2;
}

// Every X with |X| >= 2 spans at most 2|X| - 3 edges. Subsets must contain
// `must` (a mask that is already known to be tight-free elsewhere).
bool sparse(int n, const std::vector<Mask>& adj, Mask must) {
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  const Mask free = all & ~must;
  // Enumerate supersets of `must` inside `all`.
  for (Mask sub = free;; sub = (sub - 1) & free) {
    Mask x = sub | must;
    int size = std::popcount(x);
    if (size >= 2 && edges_inside(adj, x) > 2 * size - 3) return false;
    if (sub == 0) break;
  }
  return true;
}

bool connected_without(const Graph& g, const std::vector<char>& removed) {
  const int n = g.order();
  int start = -1;
  int alive = 0;
  for (int v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == alive;
}

// Calls visit(subset) for every k-subset of {0..n-1}, ascending lexicographic.
template <typename Visit>
bool for_each_combination(int n, int k, Visit&& visit) {
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  if (k > n) return false;
  while (true) {
    if (visit(pick)) return true;
    int j = k - 1;
    while (j >= 0 && pick[j] == n - k + j) --j;
    if (j < 0) return false;
    ++pick[j];
    for (int l = j + 1; l < k; ++l) pick[l] = pick[l - 1] + 1;
  }
}

long long packing_rhs(int k, int z_size, int trivial, int nontrivial, int z_adjacency) {
  return static_cast<long long>(k) * (3 - z_size) * nontrivial + 2LL * k * trivial -
         3LL * k - z_adjacency;
}

VertexPartition to_partition(const Graph& g, const VertexSet& z,
                             const std::vector<int>& rest,
                             const std::vector<int>& label) {
  int parts = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<VertexSet> groups(parts);
  for (size_t j = 0; j < rest.size(); ++j) groups[label[j]].push_back(rest[j]);
  return VertexPartition::make(g, z, std::move(groups));
}

// Evaluates the inequality for the partition of `rest` given by `label`
// without building a VertexPartition.
bool violates(const Graph& g, int k, const std::vector<char>& in_z, int z_size,
              const std::vector<int>& label_of, const std::vector<int>& rest,
              const std::vector<int>& label) {
  long long cut = 0;
  for (const Edge& e : g.edges()) {
    if (in_z[e.u] || in_z[e.v]) continue;
    cut += label[label_of[e.u]] != label[label_of[e.v]];
  }
  int parts = *std::max_element(label.begin(), label.end()) + 1;
  std::vector<int> size(parts, 0);
  for (int l : label) ++size[l];
  int trivial = 0;
  int z_adjacency = 0;
  for (size_t j = 0; j < rest.size(); ++j) {
    if (size[label[j]] != 1) continue;
    ++trivial;
    for (int w : g.neighbors(rest[j])) z_adjacency += in_z[w];
  }
  int nontrivial = parts - trivial;
  return cut < packing_rhs(k, z_size, trivial, nontrivial, z_adjacency);
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

}  // namespace

Placement Placement::random(int n, std::uint64_t seed) {
  Placement pl;
  pl.seed = seed;
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> coord(1.0, 2.0);
  pl.coords.resize(n);
  for (auto& p : pl.coords) {
    p[0] = coord(gen);
    p[1] = coord(gen);
  }
  return pl;
}

bool Placement::has_coincident_points() const {
  std::set<std::array<double, 2>> seen(coords.begin(), coords.end());
  return seen.size() != coords.size();
}

Eigen::MatrixXd rigidity_matrix(const Graph& g, const Placement& pl) {
  if (static_cast<int>(pl.coords.size()) != g.order()) {
    throw std::invalid_argument("placement size does not match graph order");
  }
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(g.size(), 2 * g.order());
  int row = 0;
  for (const Edge& e : g.edges()) {
    for (int d = 0; d < 2; ++d) {
      double diff = pl.coords[e.u][d] - pl.coords[e.v][d];
      r(row, 2 * e.u + d) = diff;
      r(row, 2 * e.v + d) = -diff;
    }
    ++row;
  }
  return r;
}

int numeric_rank(const Graph& g, const Placement& pl, double tol) {
  if (pl.has_coincident_points()) {
    throw DegeneratePlacement("placement has coincident points; reseed");
  }
  if (g.size() == 0) return 0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(rigidity_matrix(g, pl));
  qr.setThreshold(tol);
  return static_cast<int>(qr.rank());
}

int brute_sparse_rank(const Graph& g) {
  const int n = g.order();
  if (n > 16) throw std::invalid_argument("brute_sparse_rank: need n <= 16");
  const std::vector<Edge>& edges = g.edges();
  const int m = static_cast<int>(edges.size());

  if (m <= 20) {
    for (int r = std::min(m, std::max(0, 2 * n - 3)); r > 0; --r) {
      bool found = for_each_combination(m, r, [&](const std::vector<int>& pick) {
        std::vector<Edge> subset;
        subset.reserve(r);
        for (int k : pick) subset.push_back(edges[k]);
        return sparse(n, adjacency_masks(n, subset), 0);
      });
      if (found) return r;
    }
    return 0;
  }

  std::vector<Edge> basis;
  for (const Edge& e : edges) {
    basis.push_back(e);
    Mask ends = (Mask{1} << e.u) | (Mask{1} << e.v);
    if (!sparse(n, adjacency_masks(n, basis), ends)) basis.pop_back();
  }
  return static_cast<int>(basis.size());
}

bool brute_laman(const Graph& g) {
  const int n = g.order();
  if (n > 10) throw std::invalid_argument("brute_laman: need n <= 10");
  if (g.size() != std::max(0, 2 * n - 3)) return false;
  return sparse(n, adjacency_masks(n, g.edges()), 0);
}

int brute_vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n > 16) throw std::invalid_argument("brute_vertex_connectivity: need n <= 16");
  if (n <= 1) return 0;
  for (int k = 0; k <= n - 2; ++k) {
    bool cut = for_each_combination(n, k, [&](const std::vector<int>& pick) {
      std::vector<char> removed(n, 0);
      for (int v : pick) removed[v] = 1;
      return !connected_without(g, removed);
    });
    if (cut) return k;
  }
  return n - 1;
}

PackingTerms lemma21_terms(const Graph& g, int k, const VertexPartition& vp) {
  PackingTerms t;
  t.lhs = partition_cut(g, vp);
  t.rhs = packing_rhs(k, static_cast<int>(vp.z().size()), vp.trivial_count(),
                      vp.nontrivial_count(), vp.z_adjacency());
  return t;
}

bool lemma21_check(const Graph& g, int k, const VertexSet& z,
                   const VertexPartition& vp) {
  if (z != vp.z()) throw std::invalid_argument("lemma21_check: Z does not match partition");
  return lemma21_terms(g, k, vp).holds();
}

std::optional<VertexPartition> lemma21_witness_search(const Graph& g, int k,
                                                      int zmax, WitnessMode mode) {
  const int n = g.order();
  if (mode == WitnessMode::kExhaustive && n > 10) {
    throw std::invalid_argument("exhaustive witness search needs n <= 10");
  }
  std::optional<VertexPartition> witness;
  for (int zs = 0; zs <= std::min(zmax, n - 1) && !witness; ++zs) {
    for_each_combination(n, zs, [&](const std::vector<int>& zpick) {
      VertexSet z(zpick.begin(), zpick.end());
      std::vector<char> in_z(n, 0);
      for (int v : z) in_z[v] = 1;
      std::vector<int> rest;
      std::vector<int> label_of(n, -1);
      for (int v = 0; v < n; ++v) {
        if (!in_z[v]) {
          label_of[v] = static_cast<int>(rest.size());
          rest.push_back(v);
        }
      }
      const int r = static_cast<int>(rest.size());

      if (mode == WitnessMode::kExhaustive) {
        // Restricted growth strings: label[0] = 0, label[j] <= 1 + max before j.
        std::vector<int> label(r, 0);
        std::vector<int> prefix_max(r, 0);
        while (true) {
          if (violates(g, k, in_z, zs, label_of, rest, label)) {
            witness = to_partition(g, z, rest, label);
            return true;
          }
          int j = r - 1;
          while (j > 0 && label[j] == prefix_max[j - 1] + 1) --j;
          if (j <= 0) return false;
          ++label[j];
          prefix_max[j] = std::max(prefix_max[j - 1], label[j]);
          for (int l = j + 1; l < r; ++l) {
            label[l] = 0;
            prefix_max[l] = prefix_max[l - 1];
          }
        }
      }

      // Common-neighbor counts within G - Z for adjacent pairs.
      std::vector<std::pair<Edge, int>> weighted;
      int top = 0;
      for (const Edge& e : g.edges()) {
        if (in_z[e.u] || in_z[e.v]) continue;
        int common = 0;
        for (int w : g.neighbors(e.u)) common += !in_z[w] && g.adjacent(w, e.v);
        weighted.push_back({e, common});
        top = std::max(top, common);
      }
      for (int t = 0; t <= top + 1; ++t) {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& [e, common] : weighted) {
          if (common >= t) parent[find_root(parent, e.u)] = find_root(parent, e.v);
        }
        std::vector<int> label(r);
        std::vector<int> root_label(n, -1);
        int next = 0;
        for (int j = 0; j < r; ++j) {
          int root = find_root(parent, rest[j]);
          if (root_label[root] < 0) root_label[root] = next++;
          label[j] = root_label[root];
        }
        if (violates(g, k, in_z, zs, label_of, rest, label)) {
          witness = to_partition(g, z, rest, label);
          return true;
        }
      }
      return false;
    });
  }
  return witness;
}

std::set<std::string> brute_laman_classes(int n) {
  if (n < 2 || n > 7) throw std::invalid_argument("brute_laman_classes: need 2 <= n <= 7");
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  }
  std::set<std::string> keys;
  for_each_combination(static_cast<int>(all.size()), 2 * n - 3,
                       [&](const std::vector<int>& pick) {
                         std::vector<Edge> edges;
                         for (int k : pick) edges.push_back(all[k]);
                         Graph g(n, std::move(edges));
                         if (brute_laman(g)) keys.insert(canonical_key(g));
                         return false;
                       });
  return keys;
}

bool lemma22_check(const Graph& g, const VertexSet& u) {
  const int boundary = boundary_size(g, u);
  const int delta = g.min_degree();
  if (boundary <= delta - 1) return static_cast<int>(u.size()) >= delta + 1;
  return true;
}

}  // namespace rigspec::oracle
