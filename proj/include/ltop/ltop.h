/* ltop — metric completions of edge-weighted graphs at desk scale.
 *
 * C interface of the shared library. All objects are opaque handles owned
 * by the library; every function returns an ltop_status, with results
 * passed back through out-parameters. Rich results are returned as JSON
 * strings that the caller releases with ltop_string_free(). On failure the
 * out-parameters are untouched and ltop_last_error() describes the problem
 * (thread-local, valid until the next ltop call on that thread).
 */
#ifndef LTOP_H
#define LTOP_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ltop_graph ltop_graph; /* finite weighted multigraph */
typedef struct ltop_lazy ltop_lazy;   /* generator-backed infinite graph */

typedef enum ltop_status {
  LTOP_OK = 0,
  LTOP_E_INVALID = 1,      /* bad argument (nonpositive length, bad offset, ...) */
  LTOP_E_PARSE = 2,        /* malformed JSON or generator spec */
  LTOP_E_NOT_FOUND = 3,    /* unknown vertex, edge, or generator */
  LTOP_E_PRECONDITION = 4, /* operation precondition violated */
  LTOP_E_INTERNAL = 5
} ltop_status;

const char* ltop_version(void);
const char* ltop_last_error(void);
void ltop_string_free(char* s);

/* ----- graphs ----------------------------------------------------------- */
/* Format: {"vertices":[{"id":"a"}],"edges":[{"id":"e","u":"a","v":"b","len":1.0}]} */
ltop_status ltop_graph_from_json(const char* json, ltop_graph** out);
ltop_status ltop_graph_to_json(const ltop_graph* g, char** out_json);
ltop_status ltop_graph_to_dot(const ltop_graph* g, char** out_dot);
ltop_status ltop_graph_counts(const ltop_graph* g, int64_t* vertices, int64_t* edges);
void ltop_graph_free(ltop_graph* g);

/* ----- generators ------------------------------------------------------- */
/* Invocation: "name?param=value&..." (see ltop_gen_list). */
ltop_status ltop_lazy_open(const char* spec, ltop_lazy** out);
/* Metric sample: {"points":["a",...],"d":[[0,...],...]} */
ltop_status ltop_lind_open(const char* sample_json, ltop_lazy** out);
/* Hop-distance reweighting; decay is "pow2", "pow4", "exp:L", or "const:S".
 * Consumes nothing: base stays valid and independently owned. */
ltop_status ltop_floyd_open(const ltop_lazy* base, const char* basepoint, const char* decay, ltop_lazy** out);
void ltop_lazy_free(ltop_lazy* g);

ltop_status ltop_lazy_truncate(const ltop_lazy* g, int level, ltop_graph** out_graph, char** out_frontier_json);
ltop_status ltop_lazy_total_length(const ltop_lazy* g, const int* levels, int n_levels, char** out_json);
ltop_status ltop_lazy_root(const ltop_lazy* g, char** out_vertex);
/* Pairwise distances between the frontier vertices of the level-`level`
 * truncation, measured inside that truncation. */
ltop_status ltop_frontier_distances(const ltop_lazy* g, int level, char** out_json);
ltop_status ltop_gen_list(char** out_json);

/* ----- metric ----------------------------------------------------------- */
ltop_status ltop_dist(const ltop_graph* g, const char* from, const char* to, char** out_json);
ltop_status ltop_dist_limit(const ltop_lazy* g, const char* from, const char* to, const int* levels,
                            int n_levels, char** out_json);
ltop_status ltop_quotient(const ltop_lazy* g, int level, double tau, char** out_json);
ltop_status ltop_midpoint(const ltop_graph* g, const char* x, const char* y, double eps, char** out_json);

/* ----- completion ------------------------------------------------------- */
ltop_status ltop_boundary_profile(const ltop_lazy* g, const int* levels, int n_levels, int depth,
                                  const double* eps, int n_eps, char** out_json, char** out_csv);
ltop_status ltop_ends(const ltop_lazy* g, int level, int vertex_mode, char** out_json);
ltop_status ltop_nst_lengths(const ltop_graph* g, const char* root, char** out_json);

/* ----- cycle space ------------------------------------------------------ */
ltop_status ltop_cycle_basis(const ltop_graph* g, char** out_json);
/* element: comma-separated edge ids */
ltop_status ltop_geodetic_generate(const ltop_graph* g, const char* element, char** out_json);

/* ----- tours ------------------------------------------------------------ */
ltop_status ltop_line_graph(const ltop_graph* g, ltop_graph** out);
ltop_status ltop_euler_tour(const ltop_graph* g, int with_log, char** out_json);
/* Euler tour of g and its induced Hamilton cycle in line_graph(g). */
ltop_status ltop_hamilton_from_euler(const ltop_graph* g, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* LTOP_H */
