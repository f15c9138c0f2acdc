#ifndef CCC_H
#define CCC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum CccEdgeKind {
  CCC_EDGE_KIND_CYCLE = 0,
  CCC_EDGE_KIND_CUBE = 1,
} CccEdgeKind;

/**
 * Result code of every `ccc_*` call.
 */
typedef enum CccStatus {
  CCC_STATUS_OK = 0,
  CCC_STATUS_NULL_POINTER = 1,
  CCC_STATUS_DIMENSION_OUT_OF_RANGE = 2,
  CCC_STATUS_INVALID_VERTEX = 3,
  CCC_STATUS_NOT_ADJACENT = 4,
  CCC_STATUS_SAME_VERTEX = 5,
  /**
   * A resource gate for an otherwise valid dimension.
   */
  CCC_STATUS_GATE = 6,
  CCC_STATUS_MALFORMED_PERMUTATION = 7,
  CCC_STATUS_PARSE = 8,
  /**
   * A Rust panic was caught at the boundary.
   */
  CCC_STATUS_INTERNAL = 9,
} CccStatus;

/**
 * Opaque automorphism.
 */
typedef struct CccAutomorphism CccAutomorphism;

/**
 * Opaque shortest path.
 */
typedef struct CccPath CccPath;

/**
 * A vertex: cube word with digit `x_i` in bit `i - 1`, and a 1-based cycle digit.
 */
typedef struct CccVertex {
  uint32_t word;
  uint32_t cycle;
} CccVertex;

/**
 * Sizes of `W_uv`, `W_vu` and the equidistant set for one edge.
 */
typedef struct CccPartition {
  struct CccVertex u;
  struct CccVertex v;
  enum CccEdgeKind kind;
  uint64_t wuv;
  uint64_t wvu;
  uint64_t equal;
} CccPartition;

/**
 * Distance-balance verdict. `ndb_constant` is meaningful only when
 * `has_ndb_constant` is true.
 */
typedef struct CccVerdict {
  uint32_t n;
  bool distance_balanced;
  bool nicely_distance_balanced;
  bool has_ndb_constant;
  uint64_t ndb_constant;
  struct CccPartition cube_edge;
  struct CccPartition cycle_edge;
  uint64_t edges_checked;
} CccVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *ccc_status_str(enum CccStatus status);

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next `ccc_*` call on the same thread.
 */
const char *ccc_last_error(void);

/**
 * # Safety
 * Out pointers must be null or valid for writes.
 */
enum CccStatus ccc_vertex_count(uint32_t n, uint64_t *count);

/**
 * Order of the automorphism group, n 2^(n+1).
 *
 * # Safety
 * Out pointers must be null or valid for writes.
 */
enum CccStatus ccc_automorphism_group_size(uint32_t n, uint64_t *size);

/**
 * Parses `"<bits>:<k>"` for dimension `n`.
 *
 * # Safety
 * `text` must be null or a NUL-terminated string.
 */
enum CccStatus ccc_parse_vertex(uint32_t n, const char *text, struct CccVertex *v);

/**
 * # Safety
 * Out pointers must be null or valid for writes.
 */
enum CccStatus ccc_distance(uint32_t n, struct CccVertex a, struct CccVertex b, uint32_t *distance);

/**
 * A shortest path from `a` to `b`; free with [`ccc_path_free`].
 *
 * # Safety
 * Out pointers must be null or valid for writes.
 */
enum CccStatus ccc_route(uint32_t n, struct CccVertex a, struct CccVertex b, struct CccPath **path);

/**
 * Number of vertices on the path (edges + 1); 0 for null.
 *
 * # Safety
 * `path` must be null or a live handle from [`ccc_route`].
 */
size_t ccc_path_vertex_count(const struct CccPath *path);

/**
 * Vertex `index` of the path.
 *
 * # Safety
 * `path` must be null or a live handle from [`ccc_route`].
 */
enum CccStatus ccc_path_get(const struct CccPath *path, size_t index, struct CccVertex *v);

/**
 * # Safety
 * `path` must be null or a handle from [`ccc_route`] not yet freed.
 */
void ccc_path_free(struct CccPath *path);

/**
 * W-partition sizes of the edge `u`-`v`.
 *
 * # Safety
 * Out pointers must be null or valid for writes.
 */
enum CccStatus ccc_w_partition(uint32_t n,
                               struct CccVertex u,
                               struct CccVertex v,
                               struct CccPartition *partition);

/**
 * Distance-balance verdict; `exhaustive` checks every edge (n <= 9).
 *
 * # Safety
 * Out pointers must be null or valid for writes.
 */
enum CccStatus ccc_analyze(uint32_t n, bool exhaustive, struct CccVerdict *verdict);

/**
 * The automorphism labelling `anchor` as the base vertex; `reverse` flips
 * the orientation of its cycle.
 *
 * # Safety
 * Out pointers must be null or valid for writes.
 */
enum CccStatus ccc_labeling_from(uint32_t n,
                                 struct CccVertex anchor,
                                 bool reverse,
                                 struct CccAutomorphism **automorphism);

/**
 * An automorphism exchanging the endpoints of the edge `u`-`v`.
 *
 * # Safety
 * Out pointers must be null or valid for writes.
 */
enum CccStatus ccc_swap_automorphism(uint32_t n,
                                     struct CccVertex u,
                                     struct CccVertex v,
                                     struct CccAutomorphism **automorphism);

/**
 * # Safety
 * `automorphism` must be null or a live handle.
 */
enum CccStatus ccc_automorphism_apply(const struct CccAutomorphism *automorphism,
                                      struct CccVertex v,
                                      struct CccVertex *image);

/**
 * # Safety
 * `automorphism` must be null or a handle not yet freed.
 */
void ccc_automorphism_free(struct CccAutomorphism *automorphism);

/**
 * Runs the oracle cross-checks for n in 3..=n_max (n_max <= 9) and returns
 * the report as JSON. Free the string with [`ccc_string_free`].
 *
 * # Safety
 * Out pointers must be null or valid for writes.
 */
enum CccStatus ccc_verify_json(uint32_t n_max, char **json, bool *all_passed);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void ccc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CCC_H */
