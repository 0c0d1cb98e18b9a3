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

#ifndef RIGSPEC_REPORT_HPP_
#define RIGSPEC_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "rigspec/graph.hpp"
#include "rigspec/rigidity.hpp"

namespace rigspec {

using Json = nlohmann::ordered_json;

/// Process exit codes shared by every command.
enum ExitCode : int {
  kExitOk = 0,
  kExitInconsistent = 1,
  kExitInputError = 2,
};

enum class OutputFormat { kJson, kCsv };

struct Options {
  std::uint64_t seed = 20211;
  /// Slack used when comparing a spectral radius against a threshold.
  double tol = 1e-9;
  int jobs = 1;
  OutputFormat format = OutputFormat::kJson;
};

/// Everything computed for one graph. Optional fields are absent when the
/// quantity is undefined for the graph (e.g. mu for n = 1).
struct SpectralReport {
  std::string graph6;
  int n = 0;
  int m = 0;
  int min_degree = 0;
  int vertex_connectivity = 0;
  double rho = 0;
  std::optional<double> mu;
  std::optional<double> hong_bound;
  bool hong_equality_shape = false;
  RigidityVerdict verdict;
  /// Rigidity-matrix rank at a seeded random placement.
  int oracle_rank = 0;
  bool thm11_applicable = false;
  bool thm11_consistent = true;
  bool thm12_applicable = false;
  bool thm12_consistent = true;
  std::optional<double> threshold_b2;
  std::optional<double> threshold_b3;

  bool consistent() const {
    return thm11_consistent && thm12_consistent && oracle_rank == verdict.rank;
  }
};

/// Rounds to 12 significant digits, the precision reals are reported at.
double report_real(double x);

SpectralReport analyze_graph(const Graph& g, const Options& opts);

Json to_json(const SpectralReport& r);
SpectralReport report_from_json(const Json& j);

std::string csv_header();
std::string to_csv(const SpectralReport& r);

/// Text output plus the process exit code it implies.
struct CommandResult {
  std::string output;
  int exit_code = kExitOk;
  /// Diagnostics for stderr (input errors), empty on success.
  std::string error;
};

/// One report per non-blank graph6 line, in input order. Any malformed line
/// yields kExitInputError and no reports.
CommandResult run_analyze(std::string_view corpus, const Options& opts);

struct Thm13Row {
  int n = 0;
  int laman_count = 0;
  /// Independent count from filtering all labeled graphs (n <= 6 only).
  std::optional<int> brute_force_count;
  double max_rho = 0;
  double expected_rho = 0;
  int argmax_count = 0;
  std::string argmax_graph6;
  bool argmax_is_join_k2 = false;
  bool all_pass_brute_laman = false;
  bool ok = false;
};

Thm13Row thm13_row(int n, const Options& opts);
CommandResult run_thm13(int nmin, int nmax, const Options& opts);

struct Lemma24Cell {
  int i = 0;
  int a = 0;
  int n = 0;
  double rho_quartic = 0;
  double rho_eigen = 0;
  double agreement = 0;
  /// rho_bni(n, a + 1, i); present when a + 1 keeps the family valid.
  std::optional<double> rho_next;
  /// rho(a) - rho(a + 1).
  std::optional<double> margin;
  bool coeff_diff_matches_x_xp2_sq = false;
  bool coeff_diff_matches_x_xp2 = false;
  bool ok = false;
};

Lemma24Cell lemma24_cell(int n, int a, int i);
CommandResult run_sweep_lemma24(int i, int amin, int amax, int nmax,
                                const Options& opts);

struct ExtremalRow {
  int delta = 0;
  int n = 0;
  int b2_connectivity = 0;
  int b2_min_degree = 0;
  int b2_rank = 0;
  bool b2_rigid = false;
  bool b2_witness = false;
  long long b2_witness_cut = 0;
  long long b2_witness_rhs = 0;
  int b2_witness_z = 0;
  int b2_witness_parts = 0;
  int b3_connectivity = 0;
  int b3_rank = 0;
  bool b3_rigid = false;
  bool b3_redundant = false;
  bool b3_global = false;
  bool ok = false;
};

ExtremalRow extremal_row(int delta, int n);
CommandResult run_extremal(int delta, int nmax, const Options& opts);

}  // namespace rigspec

#endif  // RIGSPEC_REPORT_HPP_
