/* ifpart — exact sparse-graph partition toolkit, C interface.
 *
 * All functions return a status code (IFPART_OK on success). On failure the
 * out-parameters are untouched and ifpart_last_error() describes the problem
 * for the calling thread. Strings and integer arrays returned through
 * out-parameters are owned by the caller: release them with
 * ifpart_string_free / ifpart_ints_free. Handles are released with the
 * matching *_free function.
 */
#ifndef IFPART_H
#define IFPART_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ifpart_graph ifpart_graph;
typedef struct ifpart_assigned ifpart_assigned;

enum ifpart_status {
  IFPART_OK = 0,
  IFPART_ERR_PARSE = 1,    /* malformed input text */
  IFPART_ERR_ARG = 2,      /* precondition violated */
  IFPART_ERR_INTERNAL = 3, /* invariant breach or allocation failure */
};

enum ifpart_format {
  IFPART_FORMAT_GRAPH6 = 0,
  IFPART_FORMAT_EDGE_LIST = 1,
};

enum ifpart_solve_outcome {
  IFPART_UNSAT = 0,
  IFPART_SAT = 1,
  IFPART_INCONCLUSIVE = 2, /* node cap reached */
};

/* Message for the most recent failure on this thread; empty string if none. */
const char* ifpart_last_error(void);

void ifpart_string_free(char* s);
void ifpart_ints_free(int* a);

/* ---- graphs ---- */

int ifpart_graph_parse(const char* text, int format, ifpart_graph** out);
int ifpart_graph_from_edges(int vertex_count, const int* endpoint_pairs,
                            long long edge_count, ifpart_graph** out);
void ifpart_graph_free(ifpart_graph* g);
int ifpart_graph_counts(const ifpart_graph* g, int* vertex_count,
                        long long* edge_count);
int ifpart_graph_to_graph6(const ifpart_graph* g, char** out);
int ifpart_graph_to_edge_list(const ifpart_graph* g, char** out);

/* ---- assignments (I/F/U labelings) ---- */

/* assign_text: lines "v L" with L in {I,F,U}; unlisted vertices default U. */
int ifpart_assigned_parse(const ifpart_graph* g, const char* assign_text,
                          ifpart_assigned** out);
int ifpart_assigned_all_u(const ifpart_graph* g, ifpart_assigned** out);
int ifpart_assigned_to_text(const ifpart_assigned* ag, char** out);
void ifpart_assigned_free(ifpart_assigned* ag);

/* ---- exact density and potential ---- */

/* Maximum average degree as an exact rational num/den (lowest terms) with a
 * maximizing vertex set. */
int ifpart_mad(const ifpart_graph* g, long long* num, long long* den,
               int** witness, long long* witness_len);

/* Minimum of the potential over all nonempty vertex subsets, with witness. */
int ifpart_min_potential(const ifpart_assigned* ag, long long* value,
                         int** witness, long long* witness_len);

/* Potential of one subset. */
int ifpart_potential(const ifpart_assigned* ag, const int* subset,
                     long long subset_len, long long* value);

/* 2g/(g-2) for girth g >= 3, lowest terms. */
int ifpart_girth_mad_bound(int girth, long long* num, long long* den);

/* ---- partition solving and star coloring ---- */

/* Decides whether a partition into a 2-independent set and a forest extends
 * the assignment. node_cap <= 0 means the default cap. On IFPART_SAT the two
 * arrays hold the sides. */
int ifpart_solve_partition(const ifpart_assigned* ag, long long node_cap,
                           int* outcome, int** independent,
                           long long* independent_len, int** forest,
                           long long* forest_len);

/* Exact star chromatic number by exhaustive search (small graphs only). */
int ifpart_star_chromatic(const ifpart_graph* g, int vertex_cap, int* k,
                          int** colors, long long* colors_len);

/* Star coloring with at most 4 colors via a partition, when one exists.
 * outcome as in ifpart_solve_partition. */
int ifpart_star_four_coloring(const ifpart_graph* g, long long node_cap,
                              int* outcome, int* k, int** colors,
                              long long* colors_len);

/* ---- constructions ---- */

int ifpart_sharpness_graph(int k, ifpart_graph** out);

/* Replaces every I/F label with its forcing gadget; result is all-U and
 * original vertex indices are preserved. */
int ifpart_expand_gadgets(const ifpart_assigned* ag, ifpart_graph** out);

/* ---- generators ---- */

int ifpart_generate_gnm(int n, long long m, uint64_t seed, ifpart_graph** out);
int ifpart_generate_sparse(int n, long long target_num, long long target_den,
                           uint64_t seed, ifpart_graph** out);

/* ---- reports (JSON strings) ---- */

/* Thread decomposition, detected local configurations, and the full
 * discharging trace for the instance. */
int ifpart_discharge_json(const ifpart_assigned* ag, char** json);

/* Runs a named property over a seeded corpus; see the README for names.
 * passed=1 if no counterexample was found. */
int ifpart_check_theorem(const char* name, int max_n, long long samples,
                         uint64_t seed, int* passed, char** report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* IFPART_H */
