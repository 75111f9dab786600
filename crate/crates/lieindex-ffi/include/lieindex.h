#ifndef LIEINDEX_H
#define LIEINDEX_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  LI_STATUS_OK = 0,
  /**
   * The computation finished and a checked statement failed.
   */
  LI_STATUS_VERIFIED_FAIL = 1,
  LI_STATUS_INVALID_INPUT = 2,
  LI_STATUS_DATA_INTEGRITY = 3,
  LI_STATUS_UNSUPPORTED = 4,
  LI_STATUS_NULL_POINTER = 5,
  LI_STATUS_INTERNAL = 6,
} LiStatus;

/**
 * A simple Lie algebra with its Chevalley basis.
 */
typedef struct LiAlgebra LiAlgebra;

/**
 * A validated orbit catalog.
 */
typedef struct LiCatalog LiCatalog;

/**
 * Random-form parameters for generic ranks.
 */
typedef struct {
  size_t trials;
  int64_t bound;
  uint64_t seed;
} LiRankConfig;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *li_last_error(void);

/**
 * Default rank parameters: 5 trials, bound 1000, seed 0.
 */
LiRankConfig li_rank_config_default(void);

/**
 * Build the algebra of type `letter` (one of A–G) and rank `rank`.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
LiStatus li_algebra_new(char letter, size_t rank, LiAlgebra **out);

/**
 * # Safety
 * `g` must be null or a handle from `li_algebra_new` not yet freed.
 */
void li_algebra_free(LiAlgebra *g);

/**
 * # Safety
 * `g` must be a live handle and `dim` valid for a write.
 */
LiStatus li_algebra_dim(const LiAlgebra *g, size_t *dim);

/**
 * # Safety
 * `g` must be a live handle and `count` valid for a write.
 */
LiStatus li_algebra_positive_roots(const LiAlgebra *g, size_t *count);

/**
 * Build report as JSON. `jacobi_samples` = 0 checks every triple.
 * Returns `LI_STATUS_VERIFIED_FAIL` if the Jacobi identity fails.
 *
 * # Safety
 * `json` must be valid for a pointer write.
 */
LiStatus li_build_report_json(char letter,
                              size_t rank,
                              size_t jacobi_samples,
                              uint64_t seed,
                              char **json);

/**
 * The bundled catalog of exceptional orbits.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
LiStatus li_catalog_default(LiCatalog **out);

/**
 * Parse and validate a catalog from its text.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` valid for a pointer write.
 */
LiStatus li_catalog_parse(const char *text, LiCatalog **out);

/**
 * # Safety
 * `c` must be null or a catalog handle not yet freed.
 */
void li_catalog_free(LiCatalog *c);

/**
 * # Safety
 * `c` must be a live handle and `len` valid for a write.
 */
LiStatus li_catalog_len(const LiCatalog *c, size_t *len);

/**
 * `TYPE:index` key of the orbit at position `i`.
 *
 * # Safety
 * `c` must be a live handle and `key` valid for a pointer write.
 */
LiStatus li_catalog_key(const LiCatalog *c, size_t i, char **key);

/**
 * Dimensions, weights and characteristic of one orbit as JSON.
 *
 * # Safety
 * `c` must be a live handle, `key` NUL-terminated, `json` valid for a pointer write.
 */
LiStatus li_orbit_info_json(const LiCatalog *c, const char *key, char **json);

/**
 * Verify one orbit and write its record as JSON. `cfg` may be null for
 * the defaults. Returns `LI_STATUS_VERIFIED_FAIL` with the record written when a
 * check fails.
 *
 * # Safety
 * `c` must be a live handle, `key` NUL-terminated, `cfg` null or valid,
 * `json` valid for a pointer write.
 */
LiStatus li_verify_orbit_json(const LiCatalog *c,
                              const char *key,
                              const LiRankConfig *cfg,
                              char **json);

/**
 * Closed-form checks for the nilpotent of `family` ("sl", "so", "sp")
 * with Jordan blocks given by `partition` (e.g. "5,3").
 *
 * # Safety
 * `family` and `partition` must be NUL-terminated, `cfg` null or valid,
 * `json` valid for a pointer write.
 */
LiStatus li_classical_json(const char *family,
                           const char *partition,
                           const LiRankConfig *cfg,
                           char **json);

/**
 * Release a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void li_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIEINDEX_H */
