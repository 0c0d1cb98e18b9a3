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

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "rigspec/canonical.hpp"
#include "rigspec/rigidity.hpp"

namespace rigspec {

namespace {

// Henneberg moves on g, each adding vertex n = g.order().
std::vector<Graph> expansions(const Graph& g) {
  const int n = g.order();
  std::vector<Graph> out;
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      std::vector<Edge> edges = g.edges();
      edges.push_back({u, n});
      edges.push_back({w, n});
      out.emplace_back(n + 1, std::move(edges));
    }
  }
  for (const Edge& split : g.edges()) {
    for (int w = 0; w < n; ++w) {
      if (w == split.u || w == split.v) continue;
      std::vector<Edge> edges;
      edges.reserve(g.edges().size() + 2);
      for (const Edge& e : g.edges()) {
        if (e != split) edges.push_back(e);
      }
      edges.push_back({split.u, n});
      edges.push_back({split.v, n});
      edges.push_back({w, n});
      out.emplace_back(n + 1, std::move(edges));
    }
  }
  return out;
}

std::vector<CanonicalLabeling> canonicalize_all(const std::vector<Graph>& graphs,
                                                int jobs) {
  std::vector<CanonicalLabeling> labels(graphs.size());
  const size_t workers =
      std::max<size_t>(1, std::min<size_t>(static_cast<size_t>(std::max(jobs, 1)),
                                           graphs.size()));
  if (workers == 1) {
    for (size_t k = 0; k < graphs.size(); ++k) labels[k] = canonical_labeling(graphs[k]);
    return labels;
  }
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (size_t k = w; k < graphs.size(); k += workers) {
        labels[k] = canonical_labeling(graphs[k]);
      }
    });
  }
  for (std::thread& t : pool) t.join();
  return labels;
}

}  // namespace

std::vector<Graph> enumerate_laman(int n, int jobs) {
  if (n < 3 || n > 9) throw std::invalid_argument("enumerate_laman: need 3 <= n <= 9");
  std::vector<Graph> level{complete_graph(3)};
  for (int k = 3; k < n; ++k) {
    std::vector<Graph> candidates;
    for (const Graph& g : level) {
      std::vector<Graph> more = expansions(g);
      candidates.insert(candidates.end(), std::make_move_iterator(more.begin()),
                        std::make_move_iterator(more.end()));
    }
    std::vector<CanonicalLabeling> labels = canonicalize_all(candidates, jobs);
    std::map<std::string, Graph> unique;
    for (size_t c = 0; c < candidates.size(); ++c) {
      if (unique.count(labels[c].key) == 0) {
        unique.emplace(labels[c].key, candidates[c].relabeled(labels[c].perm));
      }
    }
    level.clear();
    for (auto& [key, g] : unique) level.push_back(std::move(g));
  }
  if (n == 3) level[0] = level[0].relabeled(canonical_labeling(level[0]).perm);
  return level;
}

}  // namespace rigspec
