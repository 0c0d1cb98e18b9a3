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

#ifndef RIGSPEC_CONNECTIVITY_HPP_
#define RIGSPEC_CONNECTIVITY_HPP_

#include "rigspec/graph.hpp"

namespace rigspec {

/// Maximum number of internally vertex-disjoint s-t paths, for s, t
/// non-adjacent. Stops early once `limit` paths are found.
int local_vertex_connectivity(const Graph& g, int s, int t, int limit);

/// Vertex connectivity by unit-capacity max-flow over Even's pair schedule.
/// K_n reports n-1; disconnected graphs report 0.
int vertex_connectivity(const Graph& g);

/// True iff vertex_connectivity(g) >= k.
bool is_k_connected(const Graph& g, int k);

}  // namespace rigspec

#endif  // RIGSPEC_CONNECTIVITY_HPP_
