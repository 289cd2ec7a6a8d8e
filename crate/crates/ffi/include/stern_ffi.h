#ifndef STERN_FFI_H
#define STERN_FFI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Largest degree accepted by the matrix, verification and mining calls.
#define STERN_MAX_DEGREE 100

typedef enum SternStatus {
  STERN_STATUS_OK = 0,
  STERN_STATUS_NULL_POINTER = 1,
  STERN_STATUS_INVALID_ARGUMENT = 2,
  STERN_STATUS_RESOURCE_LIMIT = 3,
  // The computation ran but a check failed; the output is still set.
  STERN_STATUS_VERIFICATION_FAILED = 4,
  // A value does not fit the requested machine type.
  STERN_STATUS_OVERFLOW = 5,
  STERN_STATUS_PANIC = 6,
} SternStatus;

// An exact rational matrix.
typedef struct SternMatrixHandle SternMatrixHandle;

// A row of the Stern array.
typedef struct SternRowHandle SternRowHandle;

// A finite sequence of exact rationals.
typedef struct SternSequenceHandle SternSequenceHandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or an empty string.
// The pointer stays valid until the next library call on the same thread.
const char *stern_last_error_message(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string produced by this library and not yet freed.
void stern_string_free(char *s);

// Row `n` of the Stern array, `1 <= n <= 24`.
//
// # Safety
// `out` must be a valid pointer to writable storage.
enum SternStatus stern_row_new(uint32_t n, struct SternRowHandle **out);

// Number of entries, `2^n − 1`.
//
// # Safety
// `row` must be a live handle and `len` a valid pointer.
enum SternStatus stern_row_len(const struct SternRowHandle *row, uintptr_t *len);

// Entry `k` (1-based) as an unsigned 64-bit integer.
//
// # Safety
// `row` must be a live handle and `value` a valid pointer.
enum SternStatus stern_row_entry(const struct SternRowHandle *row, uintptr_t k, uint64_t *value);

// The row as a JSON report document.
//
// # Safety
// `row` must be a live handle and `json_out` a valid pointer; free the result
// with [`stern_string_free`].
enum SternStatus stern_row_to_json(const struct SternRowHandle *row, char **json_out);

// # Safety
// `row` must be null or a handle from [`stern_row_new`] not yet freed.
void stern_row_free(struct SternRowHandle *row);

// The transfer matrix for degree `r`, or with `sym` set its action on
// the quotient by `f(x, y) ~ f(y, x)`.
//
// # Safety
// `out` must be a valid pointer.
enum SternStatus stern_phi_matrix(uint32_t r, bool sym, struct SternMatrixHandle **out);

// # Safety
// `m` must be a live handle; `rows` and `cols` valid pointers.
enum SternStatus stern_matrix_shape(const struct SternMatrixHandle *m,
                                    uintptr_t *rows,
                                    uintptr_t *cols);

// Entry `(i, j)` (0-based) as a signed 64-bit integer.
//
// # Safety
// `m` must be a live handle and `value` a valid pointer.
enum SternStatus stern_matrix_entry(const struct SternMatrixHandle *m,
                                    uintptr_t i,
                                    uintptr_t j,
                                    int64_t *value);

// The matrix as text, e.g. `[[3,2],[6,4]]`.
//
// # Safety
// `m` must be a live handle and `text` a valid pointer; free the result
// with [`stern_string_free`].
enum SternStatus stern_matrix_to_string(const struct SternMatrixHandle *m, char **text);

// # Safety
// `m` must be null or a handle from this library not yet freed.
void stern_matrix_free(struct SternMatrixHandle *m);

// `S_1(f), ..., S_nmax(f)` for a form written as on the command line,
// e.g. `"x^2y"` or `"coeffs=[1,0,-1]"`.
//
// # Safety
// `form` must be a nul-terminated string and `out` a valid pointer.
enum SternStatus stern_power_sums(const char *form,
                                  uint32_t n_max,
                                  struct SternSequenceHandle **out);

// # Safety
// `seq` must be a live handle and `len` a valid pointer.
enum SternStatus stern_sequence_len(const struct SternSequenceHandle *seq, uintptr_t *len);

// Term `i` (0-based, so term 0 is `S_1`) as a decimal string `p` or `p/q`.
//
// # Safety
// `seq` must be a live handle and `text` a valid pointer; free the result
// with [`stern_string_free`].
enum SternStatus stern_sequence_entry(const struct SternSequenceHandle *seq,
                                      uintptr_t i,
                                      char **text);

// # Safety
// `seq` must be null or a handle from this library not yet freed.
void stern_sequence_free(struct SternSequenceHandle *seq);

// Verification reports for `r_min..=r_max` (at most 100) as a JSON report
// document. Returns [`SternStatus::VerificationFailed`] with the document
// still set when any check fails.
//
// # Safety
// `json_out` must be a valid pointer; free the result with
// [`stern_string_free`].
enum SternStatus stern_verify_json(uint32_t r_min, uint32_t r_max, char **json_out);

// Minimal recurrences for every monomial class of degree `r` as a JSON
// report document. `n_terms = 0` picks the default horizon.
//
// # Safety
// `json_out` must be a valid pointer; free the result with
// [`stern_string_free`].
enum SternStatus stern_mine_json(uint32_t r, uint32_t n_terms, char **json_out);

// Library version, a static string.
const char *stern_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STERN_FFI_H */
