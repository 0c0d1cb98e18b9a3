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

#include "rigspec/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "rigspec/canonical.hpp"
#include "rigspec/connectivity.hpp"
#include "rigspec/oracle.hpp"
#include "rigspec/spectral.hpp"

namespace rigspec {

namespace {

Json optional_real(const std::optional<double>& x) {
  return x ? Json(report_real(*x)) : Json(nullptr);
}

std::optional<double> read_optional(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

std::optional<double> family_radius(int n, int a, int i) {
  if (i < 1 || i >= a || i >= n - a) return std::nullopt;
  return rho_bni(n, a, i);
}

// Falsification check of one extremal theorem: an applicable graph whose
// radius reaches the threshold must satisfy the conclusion or be the
// exceptional graph itself.
bool theorem_consistent(const Graph& g, bool applicable, double rho,
                        const std::optional<double>& threshold, bool conclusion,
                        int exceptional_i, double tol) {
  if (!applicable) return true;
  if (!threshold) return false;
  if (rho < *threshold - tol) return true;
  if (conclusion) return true;
  return is_isomorphic(g, build_bni(g.order(), g.min_degree() + 1, exceptional_i));
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return v.dump();
}

void flatten(const Json& j, const std::string& prefix,
             std::vector<std::pair<std::string, Json>>& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      flatten(*it, key, out);
    } else {
      out.emplace_back(key, *it);
    }
  }
}

// One JSON object per line, or a CSV table with dotted column names.
std::string render(const std::vector<Json>& rows, OutputFormat format) {
  std::string out;
  if (format == OutputFormat::kJson) {
    for (const Json& row : rows) out += row.dump() + "\n";
    return out;
  }
  for (size_t r = 0; r < rows.size(); ++r) {
    std::vector<std::pair<std::string, Json>> cells;
    flatten(rows[r], "", cells);
    if (r == 0) {
      for (size_t c = 0; c < cells.size(); ++c) {
        out += (c ? "," : "") + cells[c].first;
      }
      out += "\n";
    }
    for (size_t c = 0; c < cells.size(); ++c) {
      out += (c ? "," : "") + csv_cell(cells[c].second);
    }
    out += "\n";
  }
  return out;
}

// Runs work(k) for k in [0, count) on up to `jobs` threads.
template <typename Work>
void parallel_for(size_t count, int jobs, Work&& work) {
  size_t workers = std::min<size_t>(std::max(jobs, 1), std::max<size_t>(count, 1));
  if (workers <= 1) {
    for (size_t k = 0; k < count; ++k) work(k);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (size_t k = w; k < count; k += workers) work(k);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

Json to_json(const Thm13Row& r) {
  Json j;
  j["n"] = r.n;
  j["laman_count"] = r.laman_count;
  j["brute_force_count"] = r.brute_force_count ? Json(*r.brute_force_count) : Json(nullptr);
  j["max_rho"] = report_real(r.max_rho);
  j["expected_rho"] = report_real(r.expected_rho);
  j["abs_error"] = report_real(std::fabs(r.max_rho - r.expected_rho));
  j["argmax_count"] = r.argmax_count;
  j["argmax_graph6"] = r.argmax_graph6;
  j["argmax_is_join_k2"] = r.argmax_is_join_k2;
  j["all_pass_brute_laman"] = r.all_pass_brute_laman;
  j["ok"] = r.ok;
  return j;
}

Json to_json(const Lemma24Cell& c) {
  Json j;
  j["i"] = c.i;
  j["a"] = c.a;
  j["n"] = c.n;
  j["rho_quartic"] = report_real(c.rho_quartic);
  j["rho_eigen"] = report_real(c.rho_eigen);
  j["agreement"] = report_real(c.agreement);
  j["rho_next"] = optional_real(c.rho_next);
  j["margin"] = optional_real(c.margin);
  j["coeff_diff_matches_x_xp2_sq"] = c.coeff_diff_matches_x_xp2_sq;
  j["coeff_diff_matches_x_xp2"] = c.coeff_diff_matches_x_xp2;
  j["ok"] = c.ok;
  return j;
}

Json to_json(const ExtremalRow& r) {
  Json j;
  j["delta"] = r.delta;
  j["n"] = r.n;
  Json b2;
  b2["connectivity"] = r.b2_connectivity;
  b2["min_degree"] = r.b2_min_degree;
  b2["rank"] = r.b2_rank;
  b2["rigid"] = r.b2_rigid;
  b2["witness"] = r.b2_witness;
  b2["witness_z"] = r.b2_witness_z;
  b2["witness_parts"] = r.b2_witness_parts;
  b2["witness_cut"] = r.b2_witness_cut;
  b2["witness_rhs"] = r.b2_witness_rhs;
  j["b2"] = b2;
  Json b3;
  b3["connectivity"] = r.b3_connectivity;
  b3["rank"] = r.b3_rank;
  b3["rigid"] = r.b3_rigid;
  b3["redundant"] = r.b3_redundant;
  b3["global"] = r.b3_global;
  j["b3"] = b3;
  j["ok"] = r.ok;
  return j;
}

}  // namespace

double report_real(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

SpectralReport analyze_graph(const Graph& g, const Options& opts) {
  if (g.order() < 1) throw std::invalid_argument("graph has no vertices");
  SpectralReport r;
  r.graph6 = write_graph6(g);
  r.n = g.order();
  r.m = g.size();
  r.min_degree = g.min_degree();
  r.vertex_connectivity = vertex_connectivity(g);
  r.rho = spectral_radius(g);
  if (r.n >= 2) r.mu = algebraic_connectivity(g);
  if (r.min_degree >= 1) {
    r.hong_bound = hong_bound(r.n, r.m, r.min_degree);
    r.hong_equality_shape = hong_equality_shape(g);
  }
  r.verdict = analyze_rigidity(g);

  std::uint64_t seed = opts.seed;
  oracle::Placement pl = oracle::Placement::random(r.n, seed);
  while (pl.has_coincident_points()) pl = oracle::Placement::random(r.n, ++seed);
  r.oracle_rank = oracle::numeric_rank(g, pl);

  const int delta = r.min_degree;
  const bool large = delta >= 6 && r.n >= 2 * delta + 4;
  r.thm11_applicable = large && r.vertex_connectivity >= 2;
  r.thm12_applicable = large && r.vertex_connectivity >= 3;
  r.threshold_b2 = family_radius(r.n, delta + 1, 2);
  r.threshold_b3 = family_radius(r.n, delta + 1, 3);
  r.thm11_consistent = theorem_consistent(g, r.thm11_applicable, r.rho, r.threshold_b2,
                                          r.verdict.rigid, 2, opts.tol);
  r.thm12_consistent = theorem_consistent(g, r.thm12_applicable, r.rho, r.threshold_b3,
                                          r.verdict.globally_rigid, 3, opts.tol);
  return r;
}

Json to_json(const SpectralReport& r) {
  Json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["min_degree"] = r.min_degree;
  j["vertex_connectivity"] = r.vertex_connectivity;
  j["rho"] = report_real(r.rho);
  j["mu"] = optional_real(r.mu);
  j["hong_bound"] = optional_real(r.hong_bound);
  j["hong_equality_shape"] = r.hong_equality_shape;
  Json v;
  v["rank"] = r.verdict.rank;
  v["rigid"] = r.verdict.rigid;
  v["minimal"] = r.verdict.minimally_rigid;
  v["redundant"] = r.verdict.redundantly_rigid;
  v["global"] = r.verdict.globally_rigid;
  v["oracle_rank"] = r.oracle_rank;
  j["verdict"] = v;
  j["thm11_applicable"] = r.thm11_applicable;
  j["thm11_consistent"] = r.thm11_consistent;
  j["thm12_applicable"] = r.thm12_applicable;
  j["thm12_consistent"] = r.thm12_consistent;
  j["threshold_b2"] = optional_real(r.threshold_b2);
  j["threshold_b3"] = optional_real(r.threshold_b3);
  return j;
}

SpectralReport report_from_json(const Json& j) {
  SpectralReport r;
  r.graph6 = j.at("graph6").get<std::string>();
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.min_degree = j.at("min_degree").get<int>();
  r.vertex_connectivity = j.at("vertex_connectivity").get<int>();
  r.rho = j.at("rho").get<double>();
  r.mu = read_optional(j.at("mu"));
  r.hong_bound = read_optional(j.at("hong_bound"));
  r.hong_equality_shape = j.at("hong_equality_shape").get<bool>();
  const Json& v = j.at("verdict");
  r.verdict.rank = v.at("rank").get<int>();
  r.verdict.rigid = v.at("rigid").get<bool>();
  r.verdict.minimally_rigid = v.at("minimal").get<bool>();
  r.verdict.redundantly_rigid = v.at("redundant").get<bool>();
  r.verdict.globally_rigid = v.at("global").get<bool>();
  r.oracle_rank = v.at("oracle_rank").get<int>();
  r.thm11_applicable = j.at("thm11_applicable").get<bool>();
  r.thm11_consistent = j.at("thm11_consistent").get<bool>();
  r.thm12_applicable = j.at("thm12_applicable").get<bool>();
  r.thm12_consistent = j.at("thm12_consistent").get<bool>();
  r.threshold_b2 = read_optional(j.at("threshold_b2"));
  r.threshold_b3 = read_optional(j.at("threshold_b3"));
  return r;
}

std::string csv_header() {
  std::string table = render({to_json(SpectralReport{})}, OutputFormat::kCsv);
  return table.substr(0, table.find('\n'));
}

std::string to_csv(const SpectralReport& r) {
  std::string table = render({to_json(r)}, OutputFormat::kCsv);
  table.pop_back();
  return table.substr(table.find('\n') + 1);
}

CommandResult run_analyze(std::string_view corpus, const Options& opts) {
  CommandResult result;
  std::vector<Graph> graphs;
  std::ostringstream errors;
  size_t line_no = 0;
  while (!corpus.empty()) {
    size_t end = corpus.find('\n');
    std::string_view line = corpus.substr(0, end);
    corpus.remove_prefix(end == std::string_view::npos ? corpus.size() : end + 1);
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) continue;
    try {
      Graph g = parse_graph6(line);
      if (g.order() < 1) throw std::invalid_argument("graph has no vertices");
      graphs.push_back(std::move(g));
    } catch (const std::exception& e) {
      errors << "line " << line_no << ": " << e.what() << "\n";
    }
  }
  if (!errors.str().empty()) {
    result.exit_code = kExitInputError;
    result.error = errors.str();
    return result;
  }

  std::vector<SpectralReport> reports(graphs.size());
  parallel_for(graphs.size(), opts.jobs,
               [&](size_t k) { reports[k] = analyze_graph(graphs[k], opts); });
  std::vector<Json> rows;
  for (const SpectralReport& r : reports) {
    rows.push_back(to_json(r));
    if (!r.consistent()) result.exit_code = kExitInconsistent;
  }
  result.output = render(rows, opts.format);
  return result;
}

Thm13Row thm13_row(int n, const Options& opts) {
  Thm13Row row;
  row.n = n;
  std::vector<Graph> laman = enumerate_laman(n, opts.jobs);
  row.laman_count = static_cast<int>(laman.size());
  if (n <= 6) row.brute_force_count = static_cast<int>(oracle::brute_laman_classes(n).size());
  row.expected_rho = (1 + std::sqrt(8.0 * n - 15)) / 2;

  std::vector<double> rho(laman.size());
  parallel_for(laman.size(), opts.jobs, [&](size_t k) { rho[k] = spectral_radius(laman[k]); });
  row.all_pass_brute_laman = std::all_of(laman.begin(), laman.end(),
                                         [](const Graph& g) { return oracle::brute_laman(g); });
  size_t best = static_cast<size_t>(std::max_element(rho.begin(), rho.end()) - rho.begin());
  row.max_rho = rho[best];
  for (double r : rho) row.argmax_count += r >= row.max_rho - opts.tol;
  row.argmax_graph6 = write_graph6(laman[best]);
  row.argmax_is_join_k2 = is_isomorphic(laman[best], build_join_k2(n));
  row.ok = row.argmax_count == 1 && row.argmax_is_join_k2 && row.all_pass_brute_laman &&
           std::fabs(row.max_rho - row.expected_rho) <= 1e-9 &&
           (!row.brute_force_count || *row.brute_force_count == row.laman_count);
  return row;
}

CommandResult run_thm13(int nmin, int nmax, const Options& opts) {
  CommandResult result;
  if (nmin < 3 || nmax > 9 || nmin > nmax) {
    result.exit_code = kExitInputError;
    result.error = "thm13: need 3 <= nmin <= nmax <= 9\n";
    return result;
  }
  std::vector<Json> rows;
  for (int n = nmin; n <= nmax; ++n) {
    Thm13Row row = thm13_row(n, opts);
    if (!row.ok) result.exit_code = kExitInconsistent;
    rows.push_back(to_json(row));
  }
  result.output = render(rows, opts.format);
  return result;
}

Lemma24Cell lemma24_cell(int n, int a, int i) {
  Lemma24Cell c;
  c.n = n;
  c.a = a;
  c.i = i;
  c.rho_quartic = rho_bni(n, a, i);
  c.rho_eigen = spectral_radius(build_bni(n, a, i));
  c.agreement = std::fabs(c.rho_quartic - c.rho_eigen);
  c.rho_next = family_radius(n, a + 1, i);
  if (c.rho_next) c.margin = c.rho_quartic - *c.rho_next;

  const QuarticPoly lo = char_poly_bni(n, a, i);
  const QuarticPoly hi = char_poly_bni(n, a + 1, i);
  std::array<std::int64_t, 5> diff{};
  for (int k = 0; k < 5; ++k) diff[k] = hi.coeffs[k] - lo.coeffs[k];
  const std::int64_t s = static_cast<std::int64_t>(n) - 2 * a - 1;
  // s x (x + 2)^2 = s x^3 + 4s x^2 + 4s x;  s x (x + 2) = s x^2 + 2s x.
  c.coeff_diff_matches_x_xp2_sq = diff == std::array<std::int64_t, 5>{0, s, 4 * s, 4 * s, 0};
  c.coeff_diff_matches_x_xp2 = diff == std::array<std::int64_t, 5>{0, 0, s, 2 * s, 0};

  c.ok = c.agreement <= kCrossCheckTolerance &&
         (!c.margin || *c.margin > kCrossCheckTolerance);
  return c;
}

CommandResult run_sweep_lemma24(int i, int amin, int amax, int nmax, const Options& opts) {
  CommandResult result;
  if ((i != 2 && i != 3) || amin < i + 1 || amax < amin || nmax < 2 * amin + 2) {
    result.exit_code = kExitInputError;
    result.error = "sweep-lemma24: need i in {2,3}, i+1 <= amin <= amax, nmax >= 2*amin+2\n";
    return result;
  }
  std::vector<std::pair<int, int>> grid;
  for (int a = amin; a <= amax; ++a) {
    for (int n = 2 * a + 2; n <= nmax; ++n) grid.emplace_back(a, n);
  }
  std::vector<Lemma24Cell> cells(grid.size());
  parallel_for(grid.size(), opts.jobs, [&](size_t k) {
    cells[k] = lemma24_cell(grid[k].second, grid[k].first, i);
  });
  std::vector<Json> rows;
  for (const Lemma24Cell& c : cells) {
    if (!c.ok) result.exit_code = kExitInconsistent;
    rows.push_back(to_json(c));
  }
  result.output = render(rows, opts.format);
  return result;
}

ExtremalRow extremal_row(int delta, int n) {
  ExtremalRow row;
  row.delta = delta;
  row.n = n;
  const Graph b2 = build_bni(n, delta + 1, 2);
  const Graph b3 = build_bni(n, delta + 1, 3);

  row.b2_connectivity = vertex_connectivity(b2);
  row.b2_min_degree = b2.min_degree();
  row.b2_rank = pebble_rank(b2);
  row.b2_rigid = row.b2_rank == rigid_rank_target(n);
  if (auto w = oracle::lemma21_witness_search(b2, 1, 0, oracle::WitnessMode::kStructured)) {
    oracle::PackingTerms t = oracle::lemma21_terms(b2, 1, *w);
    row.b2_witness = !t.holds();
    row.b2_witness_cut = t.lhs;
    row.b2_witness_rhs = t.rhs;
    row.b2_witness_z = static_cast<int>(w->z().size());
    row.b2_witness_parts = static_cast<int>(w->parts().size());
  }

  RigidityVerdict v3 = analyze_rigidity(b3);
  row.b3_connectivity = vertex_connectivity(b3);
  row.b3_rank = v3.rank;
  row.b3_rigid = v3.rigid;
  row.b3_redundant = v3.redundantly_rigid;
  row.b3_global = v3.globally_rigid;

  row.ok = row.b2_connectivity == 2 && row.b2_min_degree == delta && !row.b2_rigid &&
           row.b2_rank == 2 * n - 4 && row.b2_witness && row.b3_connectivity == 3 &&
           row.b3_rigid && row.b3_rank == 2 * n - 3 && !row.b3_redundant && !row.b3_global;
  return row;
}

CommandResult run_extremal(int delta, int nmax, const Options& opts) {
  CommandResult result;
  if (delta < 6 || nmax < 2 * delta + 4) {
    result.exit_code = kExitInputError;
    result.error = "extremal: need delta >= 6 and nmax >= 2*delta+4\n";
    return result;
  }
  std::vector<ExtremalRow> rows(static_cast<size_t>(nmax - (2 * delta + 4) + 1));
  parallel_for(rows.size(), opts.jobs, [&](size_t k) {
    rows[k] = extremal_row(delta, 2 * delta + 4 + static_cast<int>(k));
  });
  std::vector<Json> out;
  for (const ExtremalRow& r : rows) {
    if (!r.ok) result.exit_code = kExitInconsistent;
    out.push_back(to_json(r));
  }
  result.output = render(out, opts.format);
  return result;
}

}  // namespace rigspec
