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

#ifndef RIGSPEC_RIGIDITY_HPP_
#define RIGSPEC_RIGIDITY_HPP_

#include <span>
#include <vector>

#include "rigspec/graph.hpp"

namespace rigspec {

/// The (2,3)-pebble game. Each vertex starts with two pebbles; an edge is
/// accepted iff four pebbles can be gathered on its endpoints, in which
/// case one of them is spent to orient the edge. Accepted edges always form
/// a (2,3)-sparse set, so the accepted count is the generic rigidity
/// matroid rank of whatever has been offered.
class PebbleState {
 public:
  explicit PebbleState(int n);

  /// Offers uv; returns whether it was accepted as independent.
  bool try_add(Edge e);

  int order() const { return static_cast<int>(pebbles_.size()); }
  int accepted() const { return static_cast<int>(accepted_.size()); }
  int pebbles(int v) const { return pebbles_[v]; }
  const std::vector<Edge>& accepted_edges() const { return accepted_; }

  /// Out-neighbors of v in the current orientation of accepted edges.
  const std::vector<int>& out(int v) const { return out_[v]; }

 private:
  bool gather(int target, int keep);
  bool pull_pebble(int target, int keep);

  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;
  std::vector<Edge> accepted_;
  std::vector<int> via_;
  std::vector<int> stack_;
};

/// Generic rigidity-matroid rank in the plane; edges offered in sorted order.
int pebble_rank(const Graph& g);

/// Same, with edges offered in the given order (must be the edges of g).
int pebble_rank(const Graph& g, std::span<const Edge> order);

/// Rank a rigid graph on n vertices must reach: max(0, 2n - 3).
int rigid_rank_target(int n);

struct RigidityVerdict {
  int rank = 0;
  bool rigid = false;
  bool minimally_rigid = false;
  bool redundantly_rigid = false;
  bool globally_rigid = false;
};

// Decisions in the plane. All throw std::invalid_argument for n = 0.

bool is_rigid(const Graph& g);

/// Minimal rigidity: m = 2n - 3 and all m edges independent.
bool laman_check(const Graph& g);

/// g - e is rigid for every edge e.
bool is_redundantly_rigid(const Graph& g);

/// Complete on at most three vertices, or 3-connected and redundantly rigid.
bool is_globally_rigid(const Graph& g);

RigidityVerdict analyze_rigidity(const Graph& g);

/// Every minimally rigid graph on n vertices, once per isomorphism class,
/// in canonical labeling, sorted by canonical key. Built by Henneberg
/// vertex additions (type I) and edge splits (type II) from K_3.
/// Requires 3 <= n <= 9. `jobs` > 1 spreads canonicalization over threads;
/// the output does not depend on it.
std::vector<Graph> enumerate_laman(int n, int jobs = 1);

}  // namespace rigspec

#endif  // RIGSPEC_RIGIDITY_HPP_
