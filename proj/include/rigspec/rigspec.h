/*
 * Copyright 2026 The Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to librigspec.
 *
 * Every fallible call returns an rs_status. On failure a message describing
 * the error is available from rs_last_error() on the same thread until the
 * next call into the library. Strings returned through char** out
 * parameters are owned by the caller and released with rs_string_free().
 */

#ifndef RIGSPEC_RIGSPEC_H_
#define RIGSPEC_RIGSPEC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RS_API __declspec(dllexport)
#else
#define RS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rs_status {
  RS_OK = 0,
  RS_ERR_INVALID_ARGUMENT = 1,
  RS_ERR_PARSE = 2,
  RS_ERR_DOMAIN = 3,
  RS_ERR_NUMERIC = 4,
  RS_ERR_INTERNAL = 5
} rs_status;

typedef enum rs_format { RS_FORMAT_JSON = 0, RS_FORMAT_CSV = 1 } rs_format;

/* Opaque immutable graph. */
typedef struct rs_graph rs_graph;

typedef struct rs_verdict {
  int rank;
  int rigid;
  int minimally_rigid;
  int redundantly_rigid;
  int globally_rigid;
} rs_verdict;

typedef struct rs_options {
  uint64_t seed;
  double tol;
  int jobs;
  rs_format format;
} rs_options;

RS_API const char* rs_version(void);
RS_API const char* rs_last_error(void);
RS_API void rs_string_free(char* s);

/* Fills defaults: seed 20211, tol 1e-9, one job, JSON. */
RS_API void rs_options_default(rs_options* opts);

RS_API rs_status rs_graph_from_graph6(const char* line, rs_graph** out);
/* pairs holds m (u, v) pairs, 2m ints. */
RS_API rs_status rs_graph_from_edges(int n, const int* pairs, size_t m, rs_graph** out);
RS_API rs_status rs_graph_bni(int n, int n1, int i, rs_graph** out);
RS_API rs_status rs_graph_join_k2(int n, rs_graph** out);
RS_API void rs_graph_free(rs_graph* g);

RS_API int rs_graph_order(const rs_graph* g);
RS_API int rs_graph_size(const rs_graph* g);
RS_API rs_status rs_graph_to_graph6(const rs_graph* g, char** out);

RS_API rs_status rs_vertex_connectivity(const rs_graph* g, int* out);
RS_API rs_status rs_pebble_rank(const rs_graph* g, int* out);
RS_API rs_status rs_rigidity(const rs_graph* g, rs_verdict* out);
RS_API rs_status rs_spectral_radius(const rs_graph* g, double* out);
RS_API rs_status rs_algebraic_connectivity(const rs_graph* g, double* out);
RS_API rs_status rs_rho_bni(int n, int a, int i, double* out);
RS_API rs_status rs_hong_bound(int n, int m, int delta, double* out);

/* One SpectralReport as a JSON object. */
RS_API rs_status rs_analyze_graph(const rs_graph* g, const rs_options* opts, char** json_out);

/*
 * Command runners. Each writes the rendered report to *out (possibly empty)
 * and the process exit code to *exit_code: 0 ok, 1 consistency violation,
 * 2 input error. Input errors also return RS_ERR_PARSE or
 * RS_ERR_INVALID_ARGUMENT with the details in rs_last_error().
 */
RS_API rs_status rs_run_analyze(const char* corpus, size_t len, const rs_options* opts,
                                char** out, int* exit_code);
RS_API rs_status rs_run_thm13(int nmin, int nmax, const rs_options* opts, char** out,
                              int* exit_code);
RS_API rs_status rs_run_sweep_lemma24(int i, int amin, int amax, int nmax,
                                      const rs_options* opts, char** out, int* exit_code);
RS_API rs_status rs_run_extremal(int delta, int nmax, const rs_options* opts, char** out,
                                 int* exit_code);

#ifdef __cplusplus
}
#endif

#endif /* RIGSPEC_RIGSPEC_H_ */
