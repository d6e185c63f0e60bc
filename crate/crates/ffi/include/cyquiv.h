#ifndef CYQUIV_H
#define CYQUIV_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CyqStatus {
  CYQ_STATUS_OK = 0,
  CYQ_STATUS_NULL_ARGUMENT = 1,
  CYQ_STATUS_INVALID_UTF8 = 2,
  CYQ_STATUS_INVALID_ARGUMENT = 3,
  CYQ_STATUS_NOT_IN_CATALOG = 4,
  /**
   * A check ran to completion and failed (d² not in the ideal, series differ).
   */
  CYQ_STATUS_VERIFICATION_FAILED = 5,
  CYQ_STATUS_PANIC = 6,
} CyqStatus;

/**
 * Assembled monad complex together with its relation set.
 */
typedef struct CyqMonad CyqMonad;

/**
 * Truncated power series.
 */
typedef struct CyqSeries CyqSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static version string; do not free.
 */
const char *cyq_version(void);

/**
 * Copy of the message recorded by the last call on this thread, or NULL if there is none.
 * Free with `cyq_string_free`.
 */
char *cyq_last_error(void);

/**
 * # Safety
 * `s` must come from this library or be NULL.
 */
void cyq_string_free(char *s);

/**
 * Generating series of a combinatorial family: `partitions`, `tuples`, `nested`,
 * `plane`, `pyramid` or `blowup`. `rank` is used by `tuples` and `nested`.
 *
 * # Safety
 * `family` must be a NUL-terminated string; `out` must be writable.
 */
enum CyqStatus cyq_series_count(const char *family,
                                int64_t order,
                                uint32_t rank,
                                struct CyqSeries **out);

/**
 * `M(q) = ∏ (1 − q^k)^{−k}` in one variable.
 *
 * # Safety
 * `out` must be writable.
 */
enum CyqStatus cyq_series_macmahon(int64_t order, struct CyqSeries **out);

/**
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum CyqStatus cyq_series_from_json(const char *json, struct CyqSeries **out);

/**
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum CyqStatus cyq_series_to_json(const struct CyqSeries *s, char **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum CyqStatus cyq_series_mul(const struct CyqSeries *a,
                              const struct CyqSeries *b,
                              struct CyqSeries **out);

/**
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum CyqStatus cyq_series_inverse(const struct CyqSeries *a, struct CyqSeries **out);

/**
 * Coefficient of the monomial with exponent vector `exp[0..len]`, as a decimal string.
 *
 * # Safety
 * `s` must be a live handle, `exp` must point at `len` values, `out` must be writable.
 */
enum CyqStatus cyq_series_coefficient(const struct CyqSeries *s,
                                      const int64_t *exp,
                                      size_t len,
                                      char **out);

/**
 * Sets `*equal` and returns OK when the comparison ran; rings must match.
 * On a mismatch the first differing monomial is left in `cyq_last_error`.
 *
 * # Safety
 * `a`, `b` must be live handles; `equal` must be writable.
 */
enum CyqStatus cyq_series_compare(const struct CyqSeries *a,
                                  const struct CyqSeries *b,
                                  int64_t order,
                                  bool *equal);

/**
 * # Safety
 * `s` must come from this library or be NULL; it is invalid afterwards.
 */
void cyq_series_free(struct CyqSeries *s);

/**
 * Enumeration against closed form for a named target (`c3-dt`, `conifold-ncdt`,
 * `y20-ncdt`, `orbifold-ncdt`, `vw-rank1`, `nested`, `blowup`). Returns
 * `VERIFICATION_FAILED` on a mismatch.
 *
 * # Safety
 * `target` must be a NUL-terminated string.
 */
enum CyqStatus cyq_compare_target(const char *target, int64_t order, size_t m, uint32_t rank);

/**
 * Vacuum character of the shift `shift` (`"s21,s32,.."`, optionally `"U;L"`) for
 * `gl(m|n)` at family index `t`, as a JSON array of decimal strings.
 *
 * # Safety
 * `shift` must be a NUL-terminated string; `out` must be writable.
 */
enum CyqStatus cyq_character(size_t m,
                             size_t n,
                             const char *shift,
                             uint32_t t,
                             int64_t order,
                             char **out);

/**
 * # Safety
 * `id` must be a NUL-terminated string; `out` must be writable.
 */
enum CyqStatus cyq_monad_load(const char *id, struct CyqMonad **out);

/**
 * Certifies d² ≡ 0 modulo the relations, with marked arrows either symbolic or
 * bound to zero. On success `*certified` is the number of certified coefficients.
 *
 * # Safety
 * `m` must be a live handle; `certified` must be writable or NULL.
 */
enum CyqStatus cyq_monad_certify(const struct CyqMonad *m,
                                 bool bind_marked_zero,
                                 size_t *certified);

/**
 * # Safety
 * `m` must come from this library or be NULL; it is invalid afterwards.
 */
void cyq_monad_free(struct CyqMonad *m);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYQUIV_H */
