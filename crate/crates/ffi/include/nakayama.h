#ifndef NAKAYAMA_H
#define NAKAYAMA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Stands in for an infinite dimension in `NakSummary`.
 */
#define NAK_INFINITE UINT32_MAX

typedef enum NakStatus {
  NAK_STATUS_OK = 0,
  NAK_STATUS_NULL_POINTER = 1,
  NAK_STATUS_INVALID_UTF8 = 2,
  NAK_STATUS_INVALID_INPUT = 3,
  NAK_STATUS_NOT_CYCLIC = 4,
  NAK_STATUS_BUFFER_TOO_SMALL = 5,
  NAK_STATUS_STEP_LIMIT = 6,
  NAK_STATUS_SELF_CHECK_FAILED = 7,
  NAK_STATUS_UNSUPPORTED = 8,
  NAK_STATUS_OVERFLOW = 9,
  NAK_STATUS_PANIC = 10,
} NakStatus;

/**
 * Opaque algebra handle.
 */
typedef struct NakAlgebra NakAlgebra;

typedef struct NakSummary {
  uint32_t gldim;
  uint32_t domdim;
  uint32_t findim;
  uint32_t defect;
  uint32_t num_relations;
  bool is_self_injective;
  bool is_gorenstein;
  bool is_higher_auslander;
} NakSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *nak_last_error(void);

/**
 * Parses text such as `4,3,3,3` or `(2,1)|(3,2,1)`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum NakStatus nak_algebra_parse(const char *text, struct NakAlgebra **out);

/**
 * Builds an algebra from a raw Kupisch series.
 *
 * # Safety
 * `series` must point to `len` values and `out` must be a valid pointer.
 */
enum NakStatus nak_algebra_from_series(const uint32_t *series, size_t len, struct NakAlgebra **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `a` must come from this library and must not be used afterwards.
 */
void nak_algebra_free(struct NakAlgebra *a);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `a` must be null or a live handle.
 */
size_t nak_algebra_rank(const struct NakAlgebra *a);

/**
 * Copies the Kupisch series into `buf`. `*len_out` always receives the
 * rank, so a first call with `cap = 0` can size the buffer.
 *
 * # Safety
 * `buf` must have room for `cap` values and `len_out` must be valid.
 */
enum NakStatus nak_algebra_series(const struct NakAlgebra *a,
                                  uint32_t *buf,
                                  size_t cap,
                                  size_t *len_out);

/**
 * Text form, released with `nak_string_free`.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum NakStatus nak_algebra_to_string(const struct NakAlgebra *a, char **out);

/**
 * # Safety
 * `s` must come from `nak_algebra_to_string` or be null.
 */
void nak_string_free(char *s);

/**
 * Homological summary. Infinite dimensions are reported as `NAK_INFINITE`.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum NakStatus nak_algebra_summary(const struct NakAlgebra *a, struct NakSummary *out);

/**
 * Syzygy filtered algebra of a cyclic algebra.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum NakStatus nak_epsilon(const struct NakAlgebra *a, struct NakAlgebra **out);

/**
 * Cyclic algebra whose syzygy filtered algebra is `a`.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum NakStatus nak_reverse_epsilon(const struct NakAlgebra *a, struct NakAlgebra **out);

/**
 * Global dimensions of cyclic higher Auslander algebras of rank `n`, in
 * increasing order. Sizing works as for `nak_algebra_series`.
 *
 * # Safety
 * `buf` must have room for `cap` values and `len_out` must be valid.
 */
enum NakStatus nak_expected_spectrum(size_t n, uint32_t *buf, size_t cap, size_t *len_out);

/**
 * Number of necklaces of length `n` over `t` colours.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum NakStatus nak_necklace_count(uint64_t t, uint32_t n, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NAKAYAMA_H */
