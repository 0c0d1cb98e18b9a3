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

#include "rigspec/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <vector>

namespace rigspec {

namespace {

// Split-vertex flow network: v_in = 2v, v_out = 2v + 1, with a unit arc
// v_in -> v_out and an arc u_out -> v_in for each direction of every edge.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : head_(2 * g.order(), -1) {
    for (int v = 0; v < g.order(); ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (const Edge& e : g.edges()) {
      add_arc(2 * e.u + 1, 2 * e.v, 1);
      add_arc(2 * e.v + 1, 2 * e.u, 1);
    }
  }

  // Unit augmenting paths from s_out to t_in.
  int max_flow(int s, int t, int limit) {
    for (Arc& a : arcs_) a.cap = a.base;
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    const int nodes = static_cast<int>(head_.size());
    std::vector<int> via(nodes);
    int flow = 0;
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> frontier;
      frontier.push(source);
      via[source] = -2;
      while (!frontier.empty() && via[sink] == -1) {
        int x = frontier.front();
        frontier.pop();
        for (int a = head_[x]; a != -1; a = arcs_[a].next) {
          if (arcs_[a].cap > 0 && via[arcs_[a].to] == -1) {
            via[arcs_[a].to] = a;
            frontier.push(arcs_[a].to);
          }
        }
      }
      if (via[sink] == -1) break;
      for (int x = sink; x != source;) {
        int a = via[x];
        --arcs_[a].cap;
        ++arcs_[a ^ 1].cap;
        x = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int next;
    int cap;
    int base;
  };

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, head_[from], cap, cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0, 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

int local_vertex_connectivity(const Graph& g, int s, int t, int limit) {
  if (s == t || g.adjacent(s, t)) {
    throw std::invalid_argument("local connectivity needs distinct non-adjacent vertices");
  }
  SplitNetwork net(g);
  return net.max_flow(s, t, limit);
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (g.is_complete()) return n - 1;
  if (!g.is_connected()) return 0;

  // Some vertex among the first kappa + 1 lies outside any minimum separator,
  // so scanning pairs (i, j) with i <= best is enough.
  SplitNetwork net(g);
  int best = n - 2;
  for (int i = 0; i <= best && i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      best = std::min(best, net.max_flow(i, j, best));
    }
  }
  return best;
}

bool is_k_connected(const Graph& g, int k) { return vertex_connectivity(g) >= k; }

}  // namespace rigspec
