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

#include <stdexcept>

#include "rigspec/connectivity.hpp"
#include "rigspec/rigidity.hpp"

namespace rigspec {

namespace {

void require_vertices(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("rigidity needs n >= 1");
}

// Only edges of one maximal independent set can lower the rank when
// removed; dependent edges leave that basis intact.
bool redundant_given(const Graph& g, const PebbleState& basis) {
  const int target = rigid_rank_target(g.order());
  if (basis.accepted() != target) return false;
  if (g.size() == basis.accepted()) return g.size() == 0;
  for (const Edge& e : basis.accepted_edges()) {
    if (pebble_rank(g.without_edge(e)) != target) return false;
  }
  return true;
}

PebbleState run(const Graph& g) {
  PebbleState state(g.order());
  for (const Edge& e : g.edges()) state.try_add(e);
  return state;
}

}  // namespace

bool is_rigid(const Graph& g) {
  require_vertices(g);
  return pebble_rank(g) == rigid_rank_target(g.order());
}

bool laman_check(const Graph& g) {
  require_vertices(g);
  return g.size() == rigid_rank_target(g.order()) && pebble_rank(g) == g.size();
}

bool is_redundantly_rigid(const Graph& g) {
  require_vertices(g);
  return redundant_given(g, run(g));
}

bool is_globally_rigid(const Graph& g) {
  require_vertices(g);
  if (g.is_complete() && g.order() <= 3) return true;
  return is_k_connected(g, 3) && is_redundantly_rigid(g);
}

RigidityVerdict analyze_rigidity(const Graph& g) {
  require_vertices(g);
  PebbleState state = run(g);
  RigidityVerdict v;
  v.rank = state.accepted();
  v.rigid = v.rank == rigid_rank_target(g.order());
  v.minimally_rigid = v.rigid && g.size() == v.rank;
  v.redundantly_rigid = redundant_given(g, state);
  if (g.is_complete() && g.order() <= 3) {
    v.globally_rigid = true;
  } else {
    v.globally_rigid = v.redundantly_rigid && is_k_connected(g, 3);
  }
  return v;
}

}  // namespace rigspec
