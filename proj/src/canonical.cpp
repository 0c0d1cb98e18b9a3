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

#include "rigspec/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace rigspec {

namespace {

using Cell = std::vector<int>;
using OrderedPartition = std::vector<Cell>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), count_(g.order(), 0) {}

  void refine_partition(OrderedPartition& cells) { refine(cells); }

  CanonicalLabeling run() {
    OrderedPartition start;
    if (g_.order() > 0) {
      Cell all(g_.order());
      for (int v = 0; v < g_.order(); ++v) all[v] = v;
      start.push_back(std::move(all));
    }
    refine(start);
    search(start);
    if (g_.order() == 0) best_.key = write_graph6(g_);
    return best_;
  }

 private:
  // Splits cells by neighbor counts into other cells until equitable.
  // Fragments are ordered by count, so the result is label-invariant.
  void refine(OrderedPartition& cells) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t w = 0; w < cells.size() && !changed; ++w) {
        for (int v = 0; v < g_.order(); ++v) count_[v] = 0;
        for (int u : cells[w]) {
          for (int v : g_.neighbors(u)) ++count_[v];
        }
        for (size_t x = 0; x < cells.size(); ++x) {
          Cell& cell = cells[x];
          if (cell.size() == 1) continue;
          bool uniform = std::all_of(cell.begin(), cell.end(), [&](int v) {
            return count_[v] == count_[cell.front()];
          });
          if (uniform) continue;
          std::stable_sort(cell.begin(), cell.end(),
                           [&](int a, int b) { return count_[a] < count_[b]; });
          OrderedPartition pieces;
          for (int v : cell) {
            if (pieces.empty() || count_[pieces.back().front()] != count_[v]) {
              pieces.emplace_back();
            }
            pieces.back().push_back(v);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x),
                       pieces.begin(), pieces.end());
          changed = true;
          break;
        }
      }
    }
  }

  void search(const OrderedPartition& cells) {
    size_t target = cells.size();
    for (size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 &&
          (target == cells.size() || cells[c].size() < cells[target].size())) {
        target = c;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    for (int v : cells[target]) {
      OrderedPartition next;
      next.reserve(cells.size() + 1);
      for (size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          next.push_back(cells[c]);
          continue;
        }
        next.push_back({v});
        Cell rest;
        for (int w : cells[c]) {
          if (w != v) rest.push_back(w);
        }
        next.push_back(std::move(rest));
      }
      refine(next);
      search(next);
    }
  }

  void leaf(const OrderedPartition& cells) {
    std::vector<int> perm(g_.order());
    for (size_t k = 0; k < cells.size(); ++k) perm[cells[k].front()] = static_cast<int>(k);
    std::string key = encode(perm);
    if (best_.key.empty() || key < best_.key) {
      best_.key = std::move(key);
      best_.perm = std::move(perm);
    }
  }

  // Same bytes as write_graph6(g.relabeled(perm)) without building a Graph.
  std::string encode(const std::vector<int>& perm) const {
    const std::int64_t n = g_.order();
    std::string head = write_graph6(Graph(static_cast<int>(n)));
    const std::int64_t bits = n * (n - 1) / 2;
    const size_t body_len = static_cast<size_t>((bits + 5) / 6);
    std::string body(body_len, 0);
    for (const Edge& e : g_.edges()) {
      int a = perm[e.u];
      int b = perm[e.v];
      if (a > b) std::swap(a, b);
      std::int64_t k = static_cast<std::int64_t>(b) * (b - 1) / 2 + a;
      body[k / 6] = static_cast<char>(body[k / 6] | (1 << (5 - k % 6)));
    }
    for (char& c : body) c = static_cast<char>(c + 63);
    head.resize(head.size() - body_len);
    return head + body;
  }

  const Graph& g_;
  std::vector<int> count_;
  CanonicalLabeling best_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Canonizer(g).run(); }

namespace {

// Joint search on the disjoint union of a (vertices 0..n-1) and b
// (n..2n-1): refine, require every cell to hold as many a-vertices as
// b-vertices, then pair one a-vertex with each b-vertex of a cell in turn.
// Stops at the first consistent discrete leaf.
class PairMatcher {
 public:
  PairMatcher(const Graph& a, const Graph& b) : a_(a), b_(b), n_(a.order()) {
    std::vector<Edge> edges = a.edges();
    for (const Edge& e : b.edges()) edges.push_back({e.u + n_, e.v + n_});
    union_ = Graph(2 * n_, std::move(edges));
  }

  bool run() {
    OrderedPartition start;
    if (n_ == 0) return true;
    Cell all(2 * n_);
    for (int v = 0; v < 2 * n_; ++v) all[v] = v;
    start.push_back(std::move(all));
    return search(std::move(start));
  }

 private:
  bool balanced(const OrderedPartition& cells) const {
    for (const Cell& cell : cells) {
      int left = 0;
      for (int v : cell) left += v < n_;
      if (2 * left != static_cast<int>(cell.size())) return false;
    }
    return true;
  }

  bool search(OrderedPartition cells) {
    refine(cells);
    if (!balanced(cells)) return false;
    size_t target = cells.size();
    for (size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 2 &&
          (target == cells.size() || cells[c].size() < cells[target].size())) {
        target = c;
      }
    }
    if (target == cells.size()) return verify(cells);
    const Cell& cell = cells[target];
    int x = *std::find_if(cell.begin(), cell.end(), [&](int v) { return v < n_; });
    for (int y : cell) {
      if (y < n_) continue;
      OrderedPartition next;
      for (size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          next.push_back(cells[c]);
          continue;
        }
        next.push_back({x, y});
        Cell rest;
        for (int w : cell) {
          if (w != x && w != y) rest.push_back(w);
        }
        next.push_back(std::move(rest));
      }
      if (search(std::move(next))) return true;
    }
    return false;
  }

  bool verify(const OrderedPartition& cells) const {
    std::vector<int> map(n_);
    for (const Cell& cell : cells) {
      int x = std::min(cell[0], cell[1]);
      int y = std::max(cell[0], cell[1]);
      map[x] = y - n_;
    }
    for (const Edge& e : a_.edges()) {
      if (!b_.adjacent(map[e.u], map[e.v])) return false;
    }
    return true;
  }

  void refine(OrderedPartition& cells) {
    Canonizer(union_).refine_partition(cells);
  }

  const Graph& a_;
  const Graph& b_;
  int n_;
  Graph union_;
};

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return PairMatcher(a, b).run();
}

}  // namespace rigspec
