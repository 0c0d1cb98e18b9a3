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
#include <stdexcept>

#include "rigspec/rigidity.hpp"

namespace rigspec {

PebbleState::PebbleState(int n)
    : pebbles_(n, 2), out_(n), via_(n, -1) {
  if (n < 0) throw std::invalid_argument("negative order");
}

bool PebbleState::try_add(Edge e) {
  const int n = order();
  if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) {
    throw std::invalid_argument("pebble game: bad edge");
  }
  gather(e.u, e.v);
  gather(e.v, e.u);
  if (pebbles_[e.u] + pebbles_[e.v] < 4) return false;
  --pebbles_[e.u];
  out_[e.u].push_back(e.v);
  accepted_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  return true;
}

bool PebbleState::gather(int target, int keep) {
  while (pebbles_[target] < 2) {
    if (!pull_pebble(target, keep)) return false;
  }
  return true;
}

// Depth-first search along out-arcs from target, never entering `keep`.
// On finding a free pebble, every arc on the path is reversed, which moves
// the pebble back to target.
bool PebbleState::pull_pebble(int target, int keep) {
  std::fill(via_.begin(), via_.end(), -1);
  via_[target] = target;
  via_[keep] = keep;
  stack_.assign(1, target);
  int found = -1;
  while (!stack_.empty() && found < 0) {
    int x = stack_.back();
    stack_.pop_back();
    for (int y : out_[x]) {
      if (via_[y] != -1) continue;
      via_[y] = x;
      if (pebbles_[y] > 0) {
        found = y;
        break;
      }
      stack_.push_back(y);
    }
  }
  if (found < 0) return false;

  for (int y = found; y != target;) {
    int x = via_[y];
    auto& arcs = out_[x];
    arcs.erase(std::find(arcs.begin(), arcs.end(), y));
    out_[y].push_back(x);
    y = x;
  }
  --pebbles_[found];
  ++pebbles_[target];
  return true;
}

int pebble_rank(const Graph& g) { return pebble_rank(g, g.edges()); }

int pebble_rank(const Graph& g, std::span<const Edge> order) {
  PebbleState state(g.order());
  for (const Edge& e : order) state.try_add(e);
  return state.accepted();
}

int rigid_rank_target(int n) { return std::max(0, 2 * n - 3); }

}  // namespace rigspec
