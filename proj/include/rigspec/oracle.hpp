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

// Slow, independent verifiers. Nothing here calls the pebble game, the
// max-flow connectivity code or the Henneberg enumerator; these are the
// ground truth those are tested against.

#ifndef RIGSPEC_ORACLE_HPP_
#define RIGSPEC_ORACLE_HPP_

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigspec/graph.hpp"

namespace rigspec::oracle {

/// Thrown when a placement has coincident points.
class DegeneratePlacement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Points in the plane, one per vertex, drawn uniformly from [1, 2)^2.
struct Placement {
  std::vector<std::array<double, 2>> coords;
  std::uint64_t seed = 0;

  static Placement random(int n, std::uint64_t seed);
  bool has_coincident_points() const;
};

/// One row per edge uv (sorted edge order), 2n columns: p(u) - p(v) in u's
/// column pair and p(v) - p(u) in v's.
Eigen::MatrixXd rigidity_matrix(const Graph& g, const Placement& pl);

/// Rank of the rigidity matrix by column-pivoted Householder QR, pivots
/// below tol * (largest pivot) counted as zero.
int numeric_rank(const Graph& g, const Placement& pl, double tol = 1e-9);

/// Largest (2,3)-sparse edge subset. Exhaustive over edge subsets when
/// m <= 20, otherwise greedy in sorted edge order with an exhaustive
/// vertex-subset independence test (exact, since the sparse sets form a
/// matroid). Requires n <= 16.
int brute_sparse_rank(const Graph& g);

/// m = 2n - 3 and e(X) <= 2|X| - 3 for every X with |X| >= 2, checked over
/// all 2^n vertex subsets. Requires n <= 10.
bool brute_laman(const Graph& g);

/// Smallest separating vertex set by exhaustive search; n - 1 for complete
/// graphs. Requires n <= 16.
int brute_vertex_connectivity(const Graph& g);

/// Both sides of the packing inequality
///   e_{G-Z}(pi) >= k(3 - |Z|) n0' + 2k n0 - 3k - n_Z(pi).
struct PackingTerms {
  long long lhs = 0;
  long long rhs = 0;
  bool holds() const { return lhs >= rhs; }
};

PackingTerms lemma21_terms(const Graph& g, int k, const VertexPartition& vp);

/// True iff the packing inequality holds for this (Z, pi). Z is taken from
/// vp; `z` must match it.
bool lemma21_check(const Graph& g, int k, const VertexSet& z,
                   const VertexPartition& vp);

enum class WitnessMode {
  /// Every Z with |Z| <= zmax and every set partition of V - Z. n <= 10.
  kExhaustive,
  /// Every Z with |Z| <= zmax, and for each the partitions of V - Z given
  /// by common-neighbor thresholds: u ~ v when adjacent with at least t
  /// common neighbors in G - Z, for every t; plus the component partition.
  kStructured,
};

/// A (Z, pi) violating the packing inequality, if the search finds one.
/// Absence of a witness is not a certificate of anything.
std::optional<VertexPartition> lemma21_witness_search(const Graph& g, int k,
                                                      int zmax, WitnessMode mode);

/// Canonical keys of all minimally rigid graphs on n vertices, found by
/// testing every labeled graph with 2n - 3 edges with brute_laman.
/// Requires 2 <= n <= 7.
std::set<std::string> brute_laman_classes(int n);

/// If |d(U)| <= delta - 1 then |U| >= delta + 1. Requires U nonempty, proper.
bool lemma22_check(const Graph& g, const VertexSet& u);

}  // namespace rigspec::oracle

#endif  // RIGSPEC_ORACLE_HPP_
