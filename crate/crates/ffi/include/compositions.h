#ifndef COMPOSITIONS_H
#define COMPOSITIONS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible function.
typedef enum CompStatus {
  COMP_STATUS_OK = 0,
  COMP_STATUS_NULL_POINTER = 1,
  COMP_STATUS_INVALID_PART_BOUND = 2,
  COMP_STATUS_NEGATIVE_N = 3,
  COMP_STATUS_PART_OUT_OF_RANGE = 4,
  COMP_STATUS_INVALID_DECIMALS = 5,
  COMP_STATUS_PRECISION_TOO_LOW = 6,
  COMP_STATUS_NO_CONVERGENCE = 7,
  COMP_STATUS_ROOT_STRUCTURE = 8,
  COMP_STATUS_INTERNAL = 99,
} CompStatus;

// Statistic selector for [`comp_roots_approx`].
typedef enum CompStatistic {
  // Number of compositions.
  COMP_STATISTIC_F = 0,
  // Total number of parts.
  COMP_STATISTIC_T = 1,
  // Average number of parts.
  COMP_STATISTIC_A = 2,
  // Number of parts equal to `j`.
  COMP_STATISTIC_C = 3,
  // Average number of parts equal to `j`.
  COMP_STATISTIC_AJ = 4,
} CompStatistic;

// Opaque handle for exact counts with parts bounded by `k`.
typedef struct CompExact CompExact;

// Opaque handle for the dominant root and the root spectrum of one `k`.
typedef struct CompRoots CompRoots;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL.
//
// The pointer stays valid until the next call into this library on the
// same thread. Do not free it.
const char *comp_last_error_message(void);

// Library version as a static string.
const char *comp_version(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and must not be freed twice.
void comp_string_free(char *s);

// Creates an exact-count handle for parts in `1..=k`.
//
// # Safety
// `out` must be valid for writes.
enum CompStatus comp_exact_new(int64_t k, struct CompExact **out);

// Destroys a handle from [`comp_exact_new`]. NULL is ignored.
//
// # Safety
// `h` must come from [`comp_exact_new`] and must not be freed twice.
void comp_exact_free(struct CompExact *h);

// `F_n` as a decimal string.
//
// # Safety
// `h` must be a live handle and `out` valid for writes.
enum CompStatus comp_exact_count(const struct CompExact *h, int64_t n, char **out);

// `T_n`, the total number of parts, as a decimal string.
//
// # Safety
// `h` must be a live handle and `out` valid for writes.
enum CompStatus comp_exact_total_parts(const struct CompExact *h, int64_t n, char **out);

// `C_{n,j}`, the number of parts equal to `j`, as a decimal string.
//
// # Safety
// `h` must be a live handle and `out` valid for writes.
enum CompStatus comp_exact_part_count(const struct CompExact *h, int64_t n, int64_t j, char **out);

// `A_n` as an exact fraction `p/q` (or `p`) in `fraction`, and rounded
// half-even to `decimals` places in `fixed`. Either out-pointer may be NULL.
//
// # Safety
// `h` must be a live handle; non-NULL out-pointers must be valid for writes.
enum CompStatus comp_exact_average_parts(const struct CompExact *h,
                                         int64_t n,
                                         uint32_t decimals,
                                         char **fraction,
                                         char **fixed);

// `A_{n,j}` in the same two renderings as [`comp_exact_average_parts`].
//
// # Safety
// `h` must be a live handle; non-NULL out-pointers must be valid for writes.
enum CompStatus comp_exact_average_part_count(const struct CompExact *h,
                                              int64_t n,
                                              int64_t j,
                                              uint32_t decimals,
                                              char **fraction,
                                              char **fixed);

// Computes the dominant root and the full root spectrum of
// `z^k - z^(k-1) - ... - 1` at `precision_bits` (at least 53).
//
// # Safety
// `out` must be valid for writes.
enum CompStatus comp_roots_new(int64_t k, uint32_t precision_bits, struct CompRoots **out);

// Destroys a handle from [`comp_roots_new`]. NULL is ignored.
//
// # Safety
// `h` must come from [`comp_roots_new`] and must not be freed twice.
void comp_roots_free(struct CompRoots *h);

// Number of roots of the characteristic polynomial, which is `k`.
//
// # Safety
// `h` must be a live handle and `out` valid for writes.
enum CompStatus comp_roots_count(const struct CompRoots *h, uintptr_t *out);

// Root `index` (sorted by descending modulus) as a pair of doubles.
//
// # Safety
// `h` must be a live handle; `re` and `im` must be valid for writes.
enum CompStatus comp_roots_root(const struct CompRoots *h, uintptr_t index, double *re, double *im);

// The dominant root `phi` rounded half-even to `decimals` places.
//
// # Safety
// `h` must be a live handle and `out` valid for writes.
enum CompStatus comp_roots_phi(const struct CompRoots *h, uint32_t decimals, char **out);

// Largest modulus among the non-dominant roots (0 when `k = 1`).
//
// # Safety
// `h` must be a live handle and `out` valid for writes.
enum CompStatus comp_roots_decay_rate(const struct CompRoots *h, uint32_t decimals, char **out);

// Closed-form approximation of `stat` at `n`, rounded to `decimals` places.
// `j` is only read for [`CompStatistic::C`] and [`CompStatistic::Aj`].
//
// # Safety
// `h` must be a live handle and `out` valid for writes.
enum CompStatus comp_roots_approx(const struct CompRoots *h,
                                  enum CompStatistic stat,
                                  int64_t n,
                                  int64_t j,
                                  uint32_t decimals,
                                  char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COMPOSITIONS_H */
