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

#include "rigspec/rigspec.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>

#include "rigspec/connectivity.hpp"
#include "rigspec/graph.hpp"
#include "rigspec/report.hpp"
#include "rigspec/rigidity.hpp"
#include "rigspec/spectral.hpp"

struct rs_graph {
  rigspec::Graph graph;
};

namespace {

thread_local std::string last_error;

rs_status fail(rs_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Maps the library's exception types onto status codes.
template <typename Fn>
rs_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return RS_OK;
  } catch (const rigspec::Graph6Error& e) {
    return fail(RS_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(RS_ERR_DOMAIN, e.what());
  } catch (const std::runtime_error& e) {
    return fail(RS_ERR_NUMERIC, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RS_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw std::invalid_argument(std::string(what) + " is null");
}

rigspec::Options to_options(const rs_options* opts) {
  rigspec::Options o;
  if (opts != nullptr) {
    o.seed = opts->seed;
    o.tol = opts->tol;
    o.jobs = opts->jobs;
    o.format = opts->format == RS_FORMAT_CSV ? rigspec::OutputFormat::kCsv
                                             : rigspec::OutputFormat::kJson;
  }
  return o;
}

rs_status emit(const rigspec::CommandResult& r, char** out, int* exit_code) {
  *out = copy_string(r.output);
  *exit_code = r.exit_code;
  if (r.exit_code == rigspec::kExitInputError) {
    return fail(RS_ERR_INVALID_ARGUMENT, r.error);
  }
  return RS_OK;
}

template <typename Make>
rs_status make_graph(rs_graph** out, Make&& make) {
  return guarded([&] {
    require(out, "out");
    *out = new rs_graph{make()};
  });
}

}  // namespace

extern "C" {

const char* rs_version(void) { return "1.0.0"; }

const char* rs_last_error(void) { return last_error.c_str(); }

void rs_string_free(char* s) { std::free(s); }

void rs_options_default(rs_options* opts) {
  if (opts == nullptr) return;
  rigspec::Options o;
  opts->seed = o.seed;
  opts->tol = o.tol;
  opts->jobs = o.jobs;
  opts->format = RS_FORMAT_JSON;
}

rs_status rs_graph_from_graph6(const char* line, rs_graph** out) {
  return make_graph(out, [&] {
    require(line, "line");
    return rigspec::parse_graph6(line);
  });
}

rs_status rs_graph_from_edges(int n, const int* pairs, size_t m, rs_graph** out) {
  return make_graph(out, [&] {
    if (m > 0) require(pairs, "pairs");
    std::vector<rigspec::Edge> edges(m);
    for (size_t k = 0; k < m; ++k) edges[k] = {pairs[2 * k], pairs[2 * k + 1]};
    return rigspec::Graph(n, std::move(edges));
  });
}

rs_status rs_graph_bni(int n, int n1, int i, rs_graph** out) {
  return make_graph(out, [&] { return rigspec::build_bni(n, n1, i); });
}

rs_status rs_graph_join_k2(int n, rs_graph** out) {
  return make_graph(out, [&] { return rigspec::build_join_k2(n); });
}

void rs_graph_free(rs_graph* g) { delete g; }

int rs_graph_order(const rs_graph* g) { return g ? g->graph.order() : -1; }

int rs_graph_size(const rs_graph* g) { return g ? g->graph.size() : -1; }

rs_status rs_graph_to_graph6(const rs_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy_string(rigspec::write_graph6(g->graph));
  });
}

rs_status rs_vertex_connectivity(const rs_graph* g, int* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = rigspec::vertex_connectivity(g->graph);
  });
}

rs_status rs_pebble_rank(const rs_graph* g, int* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = rigspec::pebble_rank(g->graph);
  });
}

rs_status rs_rigidity(const rs_graph* g, rs_verdict* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    rigspec::RigidityVerdict v = rigspec::analyze_rigidity(g->graph);
    *out = {v.rank, v.rigid, v.minimally_rigid, v.redundantly_rigid, v.globally_rigid};
  });
}

rs_status rs_spectral_radius(const rs_graph* g, double* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = rigspec::spectral_radius(g->graph);
  });
}

rs_status rs_algebraic_connectivity(const rs_graph* g, double* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = rigspec::algebraic_connectivity(g->graph);
  });
}

rs_status rs_rho_bni(int n, int a, int i, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = rigspec::rho_bni(n, a, i);
  });
}

rs_status rs_hong_bound(int n, int m, int delta, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = rigspec::hong_bound(n, m, delta);
  });
}

rs_status rs_analyze_graph(const rs_graph* g, const rs_options* opts, char** json_out) {
  return guarded([&] {
    require(g, "graph");
    require(json_out, "json_out");
    rigspec::SpectralReport r = rigspec::analyze_graph(g->graph, to_options(opts));
    *json_out = copy_string(rigspec::to_json(r).dump());
  });
}

rs_status rs_run_analyze(const char* corpus, size_t len, const rs_options* opts, char** out,
                         int* exit_code) {
  rs_status status = RS_OK;
  rs_status outer = guarded([&] {
    require(out, "out");
    require(exit_code, "exit_code");
    if (len > 0) require(corpus, "corpus");
    rigspec::CommandResult r =
        rigspec::run_analyze(std::string_view(corpus ? corpus : "", len), to_options(opts));
    status = emit(r, out, exit_code);
    if (status != RS_OK) status = fail(RS_ERR_PARSE, r.error);
  });
  return outer != RS_OK ? outer : status;
}

rs_status rs_run_thm13(int nmin, int nmax, const rs_options* opts, char** out,
                       int* exit_code) {
  rs_status status = RS_OK;
  rs_status outer = guarded([&] {
    require(out, "out");
    require(exit_code, "exit_code");
    status = emit(rigspec::run_thm13(nmin, nmax, to_options(opts)), out, exit_code);
  });
  return outer != RS_OK ? outer : status;
}

rs_status rs_run_sweep_lemma24(int i, int amin, int amax, int nmax, const rs_options* opts,
                               char** out, int* exit_code) {
  rs_status status = RS_OK;
  rs_status outer = guarded([&] {
    require(out, "out");
    require(exit_code, "exit_code");
    status = emit(rigspec::run_sweep_lemma24(i, amin, amax, nmax, to_options(opts)), out,
                  exit_code);
  });
  return outer != RS_OK ? outer : status;
}

rs_status rs_run_extremal(int delta, int nmax, const rs_options* opts, char** out,
                          int* exit_code) {
  rs_status status = RS_OK;
  rs_status outer = guarded([&] {
    require(out, "out");
    require(exit_code, "exit_code");
    status = emit(rigspec::run_extremal(delta, nmax, to_options(opts)), out, exit_code);
  });
  return outer != RS_OK ? outer : status;
}

}  // extern "C"
