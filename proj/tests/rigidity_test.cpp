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
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "rigspec/canonical.hpp"
#include "rigspec/graph.hpp"
#include "rigspec/oracle.hpp"
#include "rigspec/rigidity.hpp"
#include "support/corpus.hpp"

namespace rigspec {
namespace {

TEST_CASE("pebble rank examples") {
  CHECK(pebble_rank(complete_graph(3)) == 3);
  CHECK(pebble_rank(complete_graph(4)) == 5);
  CHECK(pebble_rank(build_bni(16, 7, 2)) == 28);
  CHECK(pebble_rank(build_bni(16, 7, 3)) == 29);
  CHECK(pebble_rank(Graph(5)) == 0);
  CHECK(pebble_rank(Graph(1)) == 0);
  CHECK(pebble_rank(complete_graph(2)) == 1);
}

TEST_CASE("pebble state bookkeeping") {
  for (const Graph& g : testing::random_corpus(31, 100, 2, 12)) {
    PebbleState state(g.order());
    for (const Edge& e : g.edges()) {
      state.try_add(e);
      int total = state.accepted();
      for (int v = 0; v < g.order(); ++v) {
        CHECK(state.pebbles(v) >= 0);
        CHECK(state.pebbles(v) <= 2);
        total += state.pebbles(v);
      }
      CHECK(total == 2 * g.order());
    }
    // Accepted edges stay (2,3)-sparse.
    Graph accepted(g.order(), state.accepted_edges());
    CHECK(oracle::brute_sparse_rank(accepted) == accepted.size());
    int out_degree = 0;
    for (int v = 0; v < g.order(); ++v) out_degree += static_cast<int>(state.out(v).size());
    CHECK(out_degree == state.accepted());
  }
}

TEST_CASE("pebble rank ignores edge order") {
  std::mt19937_64 rng(101);
  for (const Graph& g : testing::random_corpus(41, 40, 4, 12)) {
    int base = pebble_rank(g);
    std::vector<Edge> order = g.edges();
    for (int k = 0; k < 100; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(pebble_rank(g, order) == base);
    }
  }
}

TEST_CASE("pebble rank is monotone and bounded") {
  std::mt19937_64 rng(5);
  for (const Graph& g : testing::random_corpus(43, 200, 2, 12)) {
    int r = pebble_rank(g);
    CHECK(r <= std::min(g.size(), rigid_rank_target(g.order())));
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    int u = pick(rng);
    int v = pick(rng);
    if (u != v && !g.adjacent(u, v)) CHECK(pebble_rank(g.with_edge({u, v})) >= r);
  }
}

TEST_CASE("rigidity decisions") {
  CHECK(is_rigid(complete_graph(3)));
  CHECK_FALSE(is_rigid(build_bni(16, 7, 2)));
  CHECK(is_rigid(build_bni(16, 7, 3)));
  CHECK(is_rigid(Graph(1)));
  CHECK(is_rigid(complete_graph(2)));
  CHECK_THROWS_AS(is_rigid(Graph(0)), std::invalid_argument);

  for (int n = 3; n <= 8; ++n) CHECK(laman_check(build_join_k2(n)));
  CHECK_FALSE(laman_check(complete_graph(4)));
  CHECK_FALSE(laman_check(cycle_graph(5)));

  CHECK(is_redundantly_rigid(complete_graph(4)));
  CHECK_FALSE(is_redundantly_rigid(build_join_k2(5)));
  CHECK_FALSE(is_redundantly_rigid(build_bni(16, 7, 3)));

  CHECK(is_globally_rigid(complete_graph(3)));
  CHECK(is_globally_rigid(complete_graph(2)));
  CHECK(is_globally_rigid(complete_graph(5)));
  CHECK_FALSE(is_globally_rigid(build_bni(16, 7, 3)));
  CHECK_FALSE(is_globally_rigid(complete_graph(4).without_edge({0, 1})));
}

TEST_CASE("removing a cross edge of the three-edge family drops the rank") {
  Graph g = build_bni(16, 7, 3);
  for (int j = 0; j < 3; ++j) CHECK(pebble_rank(g.without_edge({j, 7 + j})) == 28);
}

TEST_CASE("verdict invariants over the exhaustive corpus") {
  for (const Graph& g : testing::unlabeled_graphs_upto(7)) {
    if (g.order() == 0) continue;
    RigidityVerdict v = analyze_rigidity(g);
    int n = g.order();
    CHECK(v.rank == pebble_rank(g));
    CHECK(v.rigid == (v.rank == rigid_rank_target(n)));
    if (v.minimally_rigid) {
      CHECK(v.rigid);
      CHECK(g.size() == rigid_rank_target(n));
    }
    if (v.minimally_rigid && n >= 4) CHECK_FALSE(v.redundantly_rigid);
    if (v.redundantly_rigid) CHECK(v.rigid);
    if (v.globally_rigid) CHECK((v.redundantly_rigid || (g.is_complete() && n <= 3)));
    if (v.globally_rigid) CHECK(v.rigid);
    if (n >= 2 && n <= 10) CHECK(v.minimally_rigid == oracle::brute_laman(g));
    // Direct definition of redundant rigidity.
    if (g.size() > 0) {
      bool redundant = true;
      for (const Edge& e : g.edges()) redundant = redundant && is_rigid(g.without_edge(e));
      CHECK(v.redundantly_rigid == redundant);
    }
  }
}

TEST_CASE("laman_check implies the subset counts") {
  for (const Graph& g : testing::random_corpus(47, 400, 3, 10)) {
    if (laman_check(g)) CHECK(oracle::brute_laman(g));
  }
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : enumerate_laman(n)) {
      CHECK(oracle::brute_laman(g));
    }
  }
}

TEST_CASE("enumerate_laman") {
  CHECK(enumerate_laman(3) == std::vector<Graph>{complete_graph(3)});
  std::vector<Graph> four = enumerate_laman(4);
  REQUIRE(four.size() == 1);
  CHECK(is_isomorphic(four[0], complete_graph(4).without_edge({0, 1})));
  CHECK_THROWS_AS(enumerate_laman(2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_laman(10), std::invalid_argument);

  const size_t counts[] = {1, 1, 3, 13, 70, 608};
  for (int n = 3; n <= 8; ++n) {
    std::vector<Graph> all = enumerate_laman(n, 3);
    CHECK(all.size() == counts[n - 3]);
    std::set<std::string> keys;
    for (const Graph& g : all) {
      CHECK(pebble_rank(g) == g.size());
      CHECK(g.size() == 2 * n - 3);
      CHECK(laman_check(g));
      keys.insert(canonical_key(g));
    }
    CHECK(keys.size() == all.size());
  }
}

TEST_CASE("enumeration agrees with the brute-force filter") {
  for (int n = 3; n <= 6; ++n) {
    std::set<std::string> brute = oracle::brute_laman_classes(n);
    std::set<std::string> ours;
    for (const Graph& g : enumerate_laman(n)) ours.insert(canonical_key(g));
    CHECK(ours == brute);
  }
}

TEST_CASE("enumeration output does not depend on thread count") {
  CHECK(enumerate_laman(7, 1) == enumerate_laman(7, 4));
}

}  // namespace
}  // namespace rigspec
