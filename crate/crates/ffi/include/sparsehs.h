#ifndef SPARSEHS_H
#define SPARSEHS_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call. Codes 1 to 3 match the exit codes of
 * the command-line tool.
 */
typedef enum ShsStatus {
  SHS_STATUS_OK = 0,
  /**
   * A supplied object failed validation.
   */
  SHS_STATUS_INVALID = 1,
  /**
   * An exact search ran out of its node budget.
   */
  SHS_STATUS_BUDGET_EXHAUSTED = 2,
  /**
   * Malformed or out-of-range input.
   */
  SHS_STATUS_INPUT_ERROR = 3,
  /**
   * The problem has no solution (for example no sparseness-1 cover).
   */
  SHS_STATUS_INFEASIBLE = 4,
  SHS_STATUS_NULL_POINTER = 5,
  /**
   * The library panicked; this is a bug.
   */
  SHS_STATUS_PANIC = 6,
} ShsStatus;

/**
 * A graph with positive rational edge lengths.
 */
typedef struct ShsGraph ShsGraph;

/**
 * A Sparse-HS instance: universe size, family F to hit, family B to keep
 * sparse.
 */
typedef struct ShsInstance ShsInstance;

/**
 * A sorted vertex set together with the objective value it achieves.
 */
typedef struct ShsVertexSet ShsVertexSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null after a
 * successful call. Valid until the next call on the same thread.
 */
const char *shs_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *shs_version(void);

/**
 * Builds an instance over `0..n` from F and B in CSR form. Sets are
 * deduplicated; an empty set in F is an input error.
 */
enum ShsStatus shs_instance_new(size_t n,
                                const size_t *f_offsets,
                                const size_t *f_data,
                                size_t f_count,
                                const size_t *b_offsets,
                                const size_t *b_data,
                                size_t b_count,
                                struct ShsInstance **instance);

/**
 * Parses an instance from `{"n": .., "F": [[..]], "B": [[..]]}`.
 */
enum ShsStatus shs_instance_from_json(const char *json, struct ShsInstance **instance);

void shs_instance_free(struct ShsInstance *instance);

/**
 * Maximum of `|H ∩ B|` over all sets B of the instance.
 */
enum ShsStatus shs_sparseness(const struct ShsInstance *instance,
                              const size_t *members,
                              size_t len,
                              size_t *sparseness);

enum ShsStatus shs_is_hitting_set(const struct ShsInstance *instance,
                                  const size_t *members,
                                  size_t len,
                                  bool *hits);

/**
 * Optimal hitting set of minimum sparseness (fewest vertices, then the
 * lexicographically smallest among optima). `nodes` may be null.
 */
enum ShsStatus shs_solve_exact(const struct ShsInstance *instance,
                               uint64_t budget,
                               struct ShsVertexSet **solution,
                               uint64_t *nodes);

/**
 * Parses the edge-list format: a `n m` header, then `u v length` lines with
 * lengths written as `num/den` or integers.
 */
enum ShsStatus shs_graph_from_edge_list(const char *source, struct ShsGraph **graph);

/**
 * Builds a graph from `m` edges `{us[i], vs[i]}` of length
 * `nums[i] / dens[i]`.
 */
enum ShsStatus shs_graph_new(size_t n,
                             const size_t *us,
                             const size_t *vs,
                             const int64_t *nums,
                             const int64_t *dens,
                             size_t m,
                             struct ShsGraph **graph);

void shs_graph_free(struct ShsGraph *graph);

/**
 * Number of vertices, or 0 for a null handle.
 */
size_t shs_graph_vertex_count(const struct ShsGraph *graph);

/**
 * Exact highway dimension: the maximum r-HD value over all radii.
 */
enum ShsStatus shs_highway_dimension(const struct ShsGraph *graph, size_t *value);

/**
 * Exact r-HD value at `r = r_num / r_den`.
 */
enum ShsStatus shs_rhd_value(const struct ShsGraph *graph,
                             int64_t r_num,
                             int64_t r_den,
                             size_t *value);

/**
 * Vertex cover meeting every ball in at most one vertex. Returns
 * `SHS_STATUS_INFEASIBLE` and leaves `solution` untouched if none exists.
 */
enum ShsStatus shs_sparse_vc_k1(const struct ShsGraph *graph,
                                const size_t *ball_offsets,
                                const size_t *ball_data,
                                size_t ball_count,
                                struct ShsVertexSet **solution);

/**
 * LP-rounding vertex cover with sparseness at most twice the optimum.
 */
enum ShsStatus shs_sparse_vc_2approx(const struct ShsGraph *graph,
                                     const size_t *ball_offsets,
                                     const size_t *ball_data,
                                     size_t ball_count,
                                     struct ShsVertexSet **solution);

/**
 * Vertex cover with closed-neighborhood sparseness at most `2 OPT - 1`.
 */
enum ShsStatus shs_fair_vc_approx(const struct ShsGraph *graph, struct ShsVertexSet **solution);

/**
 * Seeded r-SPC approximation at `r = r_num / r_den`: a hub set hitting
 * every shortest path of length in `(r, 2r]`, valued by its sparseness on
 * the radius-`2r` balls.
 */
enum ShsStatus shs_rspc_approx(const struct ShsGraph *graph,
                               int64_t r_num,
                               int64_t r_den,
                               uint64_t seed,
                               struct ShsVertexSet **solution);

/**
 * Number of vertices in the set, or 0 for a null handle.
 */
size_t shs_vertex_set_len(const struct ShsVertexSet *set);

/**
 * Objective value the set achieves (its sparseness), or 0 for a null
 * handle.
 */
size_t shs_vertex_set_value(const struct ShsVertexSet *set);

/**
 * Copies up to `capacity` vertices in ascending order into `buffer` and
 * returns the full set size, so a short buffer can be detected.
 */
size_t shs_vertex_set_copy(const struct ShsVertexSet *set, size_t *buffer, size_t capacity);

void shs_vertex_set_free(struct ShsVertexSet *set);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPARSEHS_H */
