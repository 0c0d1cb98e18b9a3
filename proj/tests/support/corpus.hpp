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

// Graph generators shared by the unit, property and acceptance tests.

#ifndef RIGSPEC_TESTS_SUPPORT_CORPUS_HPP_
#define RIGSPEC_TESTS_SUPPORT_CORPUS_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "rigspec/graph.hpp"

namespace rigspec::testing {

/// Every graph on exactly n vertices, one per isomorphism class, built by
/// adding a vertex with every possible neighborhood to each class on n - 1
/// vertices and deduplicating by canonical key. Requires 0 <= n <= 7.
const std::vector<Graph>& unlabeled_graphs(int n);

/// Concatenation of unlabeled_graphs(0..nmax).
std::vector<Graph> unlabeled_graphs_upto(int nmax);

/// G(n, p).
Graph random_graph(std::mt19937_64& rng, int n, double p);

/// Random G(n, p) with n uniform in [nmin, nmax] and p uniform in [0.15, 0.9].
std::vector<Graph> random_corpus(std::uint64_t seed, int count, int nmin, int nmax);

/// Random connected graph: a random spanning tree plus G(n, p) extras.
Graph random_connected_graph(std::mt19937_64& rng, int n, double p);

}  // namespace rigspec::testing

#endif  // RIGSPEC_TESTS_SUPPORT_CORPUS_HPP_
