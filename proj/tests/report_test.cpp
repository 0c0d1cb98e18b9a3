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

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "rigspec/graph.hpp"
#include "rigspec/report.hpp"
#include "support/corpus.hpp"

namespace rigspec {
namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string corpus_text(const std::vector<Graph>& graphs) {
  std::string text;
  for (const Graph& g : graphs) {
    if (g.order() == 0) continue;
    text += write_graph6(g);
    text += '\n';
  }
  return text;
}

TEST_CASE("report_real keeps twelve significant digits") {
  CHECK(report_real(8.04944833268899) == 8.04944833269);
  CHECK(report_real(3.0) == 3.0);
  CHECK(report_real(report_real(2.0 / 3.0)) == report_real(2.0 / 3.0));
}

TEST_CASE("report for the exceptional non-rigid graph") {
  SpectralReport r = analyze_graph(build_bni(16, 7, 2), Options{});
  CHECK(r.n == 16);
  CHECK(r.m == 59);
  CHECK(r.min_degree == 6);
  CHECK(r.vertex_connectivity == 2);
  CHECK_FALSE(r.verdict.rigid);
  CHECK(r.verdict.rank == 28);
  CHECK(r.oracle_rank == 28);
  CHECK(r.thm11_applicable);
  CHECK(r.thm11_consistent);
  CHECK_FALSE(r.thm12_applicable);
  REQUIRE(r.threshold_b2.has_value());
  CHECK(std::abs(*r.threshold_b2 - r.rho) <= 1e-9);
  CHECK(r.consistent());
}

TEST_CASE("report for the exceptional rigid but not globally rigid graph") {
  SpectralReport r = analyze_graph(build_bni(16, 7, 3), Options{});
  CHECK(r.vertex_connectivity == 3);
  CHECK(r.verdict.rigid);
  CHECK_FALSE(r.verdict.globally_rigid);
  CHECK(r.thm12_applicable);
  CHECK(r.thm12_consistent);
  CHECK(r.consistent());
}

TEST_CASE("report for a triangle") {
  SpectralReport r = analyze_graph(complete_graph(3), Options{});
  CHECK(r.verdict.rigid);
  CHECK(r.verdict.globally_rigid);
  CHECK_FALSE(r.thm11_applicable);
  Json j = to_json(r);
  CHECK(j["graph6"] == "Bw");
  CHECK(j["verdict"]["global"] == true);
  CHECK(j.dump().find("\"graph6\":\"Bw\",\"n\":3,\"m\":3") != std::string::npos);
}

TEST_CASE("a single vertex reports null for undefined fields") {
  SpectralReport r = analyze_graph(Graph(1), Options{});
  CHECK_FALSE(r.mu.has_value());
  CHECK_FALSE(r.hong_bound.has_value());
  Json j = to_json(r);
  CHECK(j["mu"].is_null());
  CHECK(j["hong_bound"].is_null());
}

TEST_CASE("report JSON round trip is byte identical") {
  std::vector<Graph> graphs = testing::random_corpus(91, 200, 1, 24);
  graphs.push_back(build_bni(16, 7, 2));
  graphs.push_back(build_bni(20, 8, 3));
  for (const Graph& g : graphs) {
    std::string once = to_json(analyze_graph(g, Options{})).dump();
    std::string twice = to_json(report_from_json(Json::parse(once))).dump();
    CHECK(once == twice);
  }
}

TEST_CASE("key order is fixed") {
  Json j = to_json(analyze_graph(build_bni(16, 7, 2), Options{}));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{
                    "graph6", "n", "m", "min_degree", "vertex_connectivity", "rho", "mu",
                    "hong_bound", "hong_equality_shape", "verdict", "thm11_applicable",
                    "thm11_consistent", "thm12_applicable", "thm12_consistent",
                    "threshold_b2", "threshold_b3"});
}

TEST_CASE("analyze command") {
  CommandResult ok = run_analyze("Bw\n\n" + write_graph6(build_bni(16, 7, 2)) + "\r\n", Options{});
  CHECK(ok.exit_code == kExitOk);
  CHECK(lines_of(ok.output).size() == 2);

  CommandResult bad = run_analyze("Bw\nB\n", Options{});
  CHECK(bad.exit_code == kExitInputError);
  CHECK(bad.output.empty());
  CHECK(bad.error.find("line 2") != std::string::npos);

  CommandResult empty_graph = run_analyze("?\n", Options{});
  CHECK(empty_graph.exit_code == kExitInputError);

  Options csv;
  csv.format = OutputFormat::kCsv;
  CommandResult table = run_analyze("Bw\nC~\n", csv);
  std::vector<std::string> rows = lines_of(table.output);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == csv_header());
  CHECK(rows[0].find("verdict.rank") != std::string::npos);
}

TEST_CASE("analyze output does not depend on thread count") {
  std::string text = corpus_text(testing::random_corpus(93, 100, 1, 16));
  Options one;
  Options four;
  four.jobs = 4;
  CHECK(run_analyze(text, one).output == run_analyze(text, four).output);
}

TEST_CASE("exhaustive corpus analyzes with zero inconsistencies") {
  CommandResult r = run_analyze(corpus_text(testing::unlabeled_graphs_upto(6)), Options{});
  CHECK(r.exit_code == kExitOk);
  CHECK(lines_of(r.output).size() == 208);  // classes on 1..6 vertices
}

TEST_CASE("random corpus analyzes with all theorem flags consistent") {
  std::vector<Graph> corpus = testing::random_corpus(20211, 1000, 1, 24);
  for (const Graph& g : corpus) {
    SpectralReport r = analyze_graph(g, Options{});
    CHECK(r.thm11_consistent);
    CHECK(r.thm12_consistent);
    CHECK(r.oracle_rank == r.verdict.rank);
  }
}

TEST_CASE("dense graphs in the theorem regime") {
  // Large minimum degree, so both theorems apply to most samples.
  std::mt19937_64 rng(95);
  int applicable = 0;
  for (int k = 0; k < 60; ++k) {
    int n = std::uniform_int_distribution<int>(16, 24)(rng);
    Graph g = testing::random_graph(rng, n, 0.6);
    SpectralReport r = analyze_graph(g, Options{});
    applicable += r.thm11_applicable;
    CHECK(r.consistent());
  }
  CHECK(applicable > 0);
}

TEST_CASE("sweep commands") {
  Thm13Row row = thm13_row(5, Options{});
  CHECK(row.ok);
  CHECK(row.laman_count == 3);
  CHECK(std::abs(row.max_rho - 3.0) <= 1e-12);
  CHECK(run_thm13(3, 6, Options{}).exit_code == kExitOk);
  CHECK(run_thm13(2, 6, Options{}).exit_code == kExitInputError);
  CHECK(run_thm13(5, 10, Options{}).exit_code == kExitInputError);

  Lemma24Cell cell = lemma24_cell(16, 7, 2);
  CHECK(cell.ok);
  CHECK(cell.agreement <= 1e-8);
  CHECK(run_sweep_lemma24(2, 3, 6, 20, Options{}).exit_code == kExitOk);
  CHECK(run_sweep_lemma24(4, 5, 6, 20, Options{}).exit_code == kExitInputError);

  ExtremalRow ext = extremal_row(6, 16);
  CHECK(ext.ok);
  CHECK(ext.b2_rank == 28);
  CHECK(ext.b3_rank == 29);
  CHECK(run_extremal(6, 18, Options{}).exit_code == kExitOk);
  CHECK(run_extremal(5, 18, Options{}).exit_code == kExitInputError);
}

}  // namespace
}  // namespace rigspec
