#ifndef MATEX_H
#define MATEX_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MatexStatus {
  MATEX_STATUS_OK = 0,
  MATEX_STATUS_NULL_POINTER = 1,
  MATEX_STATUS_PARSE = 2,
  MATEX_STATUS_INVALID_ARGUMENT = 3,
  /**
   * The search stopped at its node budget; the result is a lower bound.
   */
  MATEX_STATUS_BUDGET_EXHAUSTED = 4,
  MATEX_STATUS_UNKNOWN_BOUND = 5,
  MATEX_STATUS_PRECONDITION = 6,
  MATEX_STATUS_PANIC = 7,
} MatexStatus;

/**
 * Opaque 0-1 matrix.
 */
typedef struct MatexMatrix MatexMatrix;

/**
 * Opaque nonempty set of patterns.
 */
typedef struct MatexPatternSet MatexPatternSet;

/**
 * Outcome of an extremal search. `value` is meaningful only when
 * `unbounded` is false.
 */
typedef struct MatexExtremal {
  bool unbounded;
  uint64_t value;
  bool exact;
  uint64_t nodes_explored;
} MatexExtremal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread. Owned by the library.
 */
const char *matex_last_error(void);

/**
 * # Safety
 * `s` must come from this library and not be freed already, or be null.
 */
void matex_string_free(char *s);

/**
 * Parses rows of `0`/`1` characters separated by newlines.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum MatexStatus matex_matrix_parse(const char *text, struct MatexMatrix **out);

/**
 * All-zero matrix.
 *
 * # Safety
 * `out` must be writable.
 */
enum MatexStatus matex_matrix_new(size_t rows, size_t cols, struct MatexMatrix **out);

/**
 * # Safety
 * `m` must come from this library and not be freed already, or be null.
 */
void matex_matrix_free(struct MatexMatrix *m);

/**
 * Number of rows, or 0 for a null handle.
 *
 * # Safety
 * `m` must be a live handle or null.
 */
size_t matex_matrix_rows(const struct MatexMatrix *m);

/**
 * Number of columns, or 0 for a null handle.
 *
 * # Safety
 * `m` must be a live handle or null.
 */
size_t matex_matrix_cols(const struct MatexMatrix *m);

/**
 * Number of ones, or 0 for a null handle.
 *
 * # Safety
 * `m` must be a live handle or null.
 */
size_t matex_matrix_weight(const struct MatexMatrix *m);

/**
 * Reads the 0-based cell `(i, j)`.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum MatexStatus matex_matrix_get(const struct MatexMatrix *m, size_t i, size_t j, bool *out);

/**
 * Writes the 0-based cell `(i, j)`.
 *
 * # Safety
 * `m` must be a live handle not used concurrently.
 */
enum MatexStatus matex_matrix_set(struct MatexMatrix *m, size_t i, size_t j, bool value);

/**
 * Text form of the matrix; free it with [`matex_string_free`].
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum MatexStatus matex_matrix_to_string(const struct MatexMatrix *m, char **out);

/**
 * Parses patterns separated by blank lines.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum MatexStatus matex_patterns_parse(const char *text, struct MatexPatternSet **out);

/**
 * Set holding a copy of one matrix.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum MatexStatus matex_patterns_single(const struct MatexMatrix *m, struct MatexPatternSet **out);

/**
 * # Safety
 * `s` must come from this library and not be freed already, or be null.
 */
void matex_patterns_free(struct MatexPatternSet *s);

/**
 * Number of patterns, or 0 for a null handle.
 *
 * # Safety
 * `s` must be a live handle or null.
 */
size_t matex_patterns_len(const struct MatexPatternSet *s);

/**
 * Copy of the pattern at `index`.
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum MatexStatus matex_patterns_get(const struct MatexPatternSet *s,
                                    size_t index,
                                    struct MatexMatrix **out);

/**
 * `L1`, `L2` or `L3`.
 *
 * # Safety
 * `out` must be writable.
 */
enum MatexStatus matex_pattern_l(uint8_t i, struct MatexMatrix **out);

/**
 * All-ones `r x c` pattern.
 *
 * # Safety
 * `out` must be writable.
 */
enum MatexStatus matex_pattern_p(size_t r, size_t c, struct MatexMatrix **out);

/**
 * The family `T_{r,s}`.
 *
 * # Safety
 * `out` must be writable.
 */
enum MatexStatus matex_generate_t(size_t r, size_t s, struct MatexPatternSet **out);

/**
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum MatexStatus matex_contains(const struct MatexMatrix *host,
                                const struct MatexMatrix *pattern,
                                bool *out);

/**
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum MatexStatus matex_avoids_all(const struct MatexMatrix *host,
                                  const struct MatexPatternSet *set,
                                  bool *out);

/**
 * Most ones in an `m x n` matrix avoiding every pattern of `set`. With a
 * non-null `witness`, an extremal matrix (or null) is written there.
 * `budget` caps search nodes; 0 means unlimited.
 *
 * # Safety
 * `set` must be live; `out` must be writable; `witness` writable or null.
 */
enum MatexStatus matex_ex_weight(size_t m,
                                 size_t n,
                                 const struct MatexPatternSet *set,
                                 uint64_t budget,
                                 struct MatexExtremal *out,
                                 struct MatexMatrix **witness);

/**
 * Most columns of an `m`-row matrix with at least `k` ones per column
 * avoiding `set`. Same conventions as [`matex_ex_weight`].
 *
 * # Safety
 * `set` must be live; `out` must be writable; `witness` writable or null.
 */
enum MatexStatus matex_ex_columns(size_t m,
                                  size_t k,
                                  const struct MatexPatternSet *set,
                                  uint64_t budget,
                                  struct MatexExtremal *out,
                                  struct MatexMatrix **witness);

/**
 * # Safety
 * `a` must be live; `out` must be writable.
 */
enum MatexStatus matex_cluster_split(const struct MatexMatrix *a,
                                     size_t k,
                                     struct MatexMatrix **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum MatexStatus matex_k_prime(size_t m, size_t k, struct MatexMatrix **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum MatexStatus matex_pigeonhole(size_t m, size_t k, size_t c, struct MatexMatrix **out);

/**
 * Witness matrix of the greedy-coloring lower bound for `P_{r,2}`.
 *
 * # Safety
 * `out` must be writable.
 */
enum MatexStatus matex_lower_bound_p_r2(size_t m, size_t r, size_t k, struct MatexMatrix **out);

/**
 * Number of edges of the bar `s`-visibility hypergraph of a layout given
 * as `y x_left x_right` lines.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum MatexStatus matex_layout_edge_count(const char *text, size_t s, size_t *out);

/**
 * Largest witness count of any edge in the visibility hypergraph of `m`
 * with respect to `T_{r,s}`.
 *
 * # Safety
 * `m` must be live; `out` must be writable.
 */
enum MatexStatus matex_matrix_max_multiplicity(const struct MatexMatrix *m,
                                               size_t r,
                                               size_t s,
                                               size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MATEX_H */
