#ifndef TILESCOPE_H
#define TILESCOPE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every call.
 */
typedef enum TsStatus {
  TS_STATUS_OK = 0,
  TS_STATUS_NULL_POINTER = 1,
  TS_STATUS_INVALID_UTF8 = 2,
  TS_STATUS_MALFORMED_INPUT = 3,
  TS_STATUS_PRECONDITION_VIOLATION = 4,
  TS_STATUS_INTERNAL_FAILURE = 5,
  TS_STATUS_PANIC = 6,
} TsStatus;

/**
 * Outcome of a lattice multiplicity check.
 */
typedef enum TsVerdict {
  TS_VERDICT_CONSTANT = 0,
  TS_VERDICT_NON_CONSTANT = 1,
  TS_VERDICT_NOT_COVERING = 2,
} TsVerdict;

/**
 * A full-rank lattice of translation vectors.
 */
typedef struct TsLattice TsLattice;

/**
 * A convex polygon or polyhedron with exact rational vertices.
 */
typedef struct TsPolytope TsPolytope;

/**
 * Parses `{"dim": d, "vertices": [["p/q", ...], ...]}` into a new handle.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum TsStatus ts_polytope_from_json(const char *json, struct TsPolytope **out);

/**
 * # Safety
 * `p` must come from [`ts_polytope_from_json`] and not be freed twice. Null is ignored.
 */
void ts_polytope_free(struct TsPolytope *p);

/**
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum TsStatus ts_polytope_dim(const struct TsPolytope *p, uint32_t *out);

/**
 * Exact volume (area in 2D) as a `"p/q"` string.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum TsStatus ts_polytope_volume(const struct TsPolytope *p, char **out);

/**
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum TsStatus ts_is_translative_tile(const struct TsPolytope *p, bool *out);

/**
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum TsStatus ts_is_twofold_translative_tile(const struct TsPolytope *p, bool *out);

/**
 * Writes up to `cap` belt sizes into `sizes` and the total belt count into `len`.
 * Pass `sizes = NULL, cap = 0` to query the count.
 *
 * # Safety
 * `p` must be a live handle, `len` a valid pointer, and `sizes` valid for `cap` writes.
 */
enum TsStatus ts_belt_sizes(const struct TsPolytope *p, size_t *sizes, size_t cap, size_t *len);

/**
 * Full analysis report as a JSON string.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum TsStatus ts_analyze_json(const struct TsPolytope *p, char **out);

/**
 * Parses `{"lattice": [[...], ...]}`, one basis vector per inner array.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum TsStatus ts_lattice_from_json(const char *json, struct TsLattice **out);

/**
 * # Safety
 * `l` must come from [`ts_lattice_from_json`] and not be freed twice. Null is ignored.
 */
void ts_lattice_free(struct TsLattice *l);

/**
 * Checks whether `P + Λ` covers space a constant number of times. `k` receives the
 * multiplicity for a constant verdict and 0 otherwise. `samples` and `seed` only affect 3D.
 *
 * # Safety
 * `p` and `l` must be live handles; `verdict` and `k` valid pointers.
 */
enum TsStatus ts_verify_lattice(const struct TsPolytope *p,
                                const struct TsLattice *l,
                                size_t samples,
                                uint64_t seed,
                                enum TsVerdict *verdict,
                                uint64_t *k);

/**
 * # Safety
 * `s` must come from this library and not be freed twice. Null is ignored.
 */
void ts_string_free(char *s);

/**
 * Message for the last failed call on this thread, or NULL. Valid until the next call.
 */
const char *ts_last_error_message(void);

#endif  /* TILESCOPE_H */
