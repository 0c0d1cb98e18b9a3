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

#ifndef RIGSPEC_CANONICAL_HPP_
#define RIGSPEC_CANONICAL_HPP_

#include <string>
#include <vector>

#include "rigspec/graph.hpp"

namespace rigspec {

/// Canonical labeling found by individualization and equitable refinement,
/// keeping the leaf whose relabeled graph6 string is lexicographically
/// smallest. Exact, but exponential on highly symmetric inputs; meant for
/// graphs of order <= ~12.
struct CanonicalLabeling {
  /// perm[v] is the canonical label of vertex v.
  std::vector<int> perm;
  /// graph6 of g.relabeled(perm); equal for isomorphic graphs.
  std::string key;
};

CanonicalLabeling canonical_labeling(const Graph& g);

inline std::string canonical_key(const Graph& g) {
  return canonical_labeling(g).key;
}

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace rigspec

#endif  // RIGSPEC_CANONICAL_HPP_
