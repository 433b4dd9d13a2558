#ifndef VSASM_H
#define VSASM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum VsasmStatus {
  VSASM_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  VSASM_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8, or input could not be parsed.
   */
  VSASM_STATUS_PARSE = 2,
  /**
   * The request is outside what the library computes.
   */
  VSASM_STATUS_UNSUPPORTED = 3,
  /**
   * Malformed combinatorial input.
   */
  VSASM_STATUS_STRUCTURE = 4,
  /**
   * Evaluation failed, for example a zero substituted into a negative power.
   */
  VSASM_STATUS_EVALUATION = 5,
  /**
   * Operands over different variable sets.
   */
  VSASM_STATUS_ALPHABET = 6,
  /**
   * An internal cross-check failed.
   */
  VSASM_STATUS_CONSISTENCY = 7,
  /**
   * A division that should have been exact was not.
   */
  VSASM_STATUS_DIVISIBILITY = 8,
  /**
   * The library panicked; the handle arguments are left untouched.
   */
  VSASM_STATUS_PANIC = 9,
} VsasmStatus;

/**
 * Opaque exact Laurent polynomial.
 */
typedef struct VsasmPoly VsasmPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or an empty string.
 * The pointer stays valid until the next call into the library on this thread.
 */
const char *vsasm_last_error(void);

/**
 * Library version as a static string.
 */
const char *vsasm_version(void);

/**
 * Generating function of a model (`"brute"`, `"jt4"`, ...) for the bottom
 * row `0, 2, ..., 2n-2`.
 *
 * # Safety
 * `model` must be a nul-terminated string and `out` a valid pointer.
 */
enum VsasmStatus vsasm_gf(const char *model, uint32_t n, struct VsasmPoly **out);

/**
 * Generating function of a triangle model for an arbitrary strictly
 * increasing bottom row of length `len`.
 *
 * # Safety
 * `model` must be a nul-terminated string, `bottom` must point to `len`
 * values and `out` must be a valid pointer.
 */
enum VsasmStatus vsasm_gf_bottom(const char *model,
                                 const int64_t *bottom,
                                 size_t len,
                                 struct VsasmPoly **out);

/**
 * Parses the JSON wire format (`{"vars": [...], "terms": [{"c": "..", "e": [..]}]}`).
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum VsasmStatus vsasm_poly_from_json(const char *json, struct VsasmPoly **out);

/**
 * Canonical JSON of a polynomial; release with [`vsasm_string_free`].
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum VsasmStatus vsasm_poly_to_json(const struct VsasmPoly *p, char **out);

/**
 * Human-readable form such as `u*X1 + w + v*X1^-1`.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum VsasmStatus vsasm_poly_to_string(const struct VsasmPoly *p, char **out);

/**
 * Number of nonzero terms.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum VsasmStatus vsasm_poly_num_terms(const struct VsasmPoly *p, size_t *out);

/**
 * Exact equality, including the variable set.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` a valid pointer.
 */
enum VsasmStatus vsasm_poly_equal(const struct VsasmPoly *a, const struct VsasmPoly *b, bool *out);

/**
 * `a + b` as a new handle.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` a valid pointer.
 */
enum VsasmStatus vsasm_poly_add(const struct VsasmPoly *a,
                                const struct VsasmPoly *b,
                                struct VsasmPoly **out);

/**
 * `a - b` as a new handle.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` a valid pointer.
 */
enum VsasmStatus vsasm_poly_sub(const struct VsasmPoly *a,
                                const struct VsasmPoly *b,
                                struct VsasmPoly **out);

/**
 * `a * b` as a new handle.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` a valid pointer.
 */
enum VsasmStatus vsasm_poly_mul(const struct VsasmPoly *a,
                                const struct VsasmPoly *b,
                                struct VsasmPoly **out);

/**
 * Value at integers given in the polynomial's variable order; the decimal
 * result is written to `out`.
 *
 * # Safety
 * `p` must be a live handle, `values` must point to `len` integers and `out`
 * must be a valid pointer.
 */
enum VsasmStatus vsasm_poly_eval(const struct VsasmPoly *p,
                                 const int64_t *values,
                                 size_t len,
                                 char **out);

/**
 * Generating function at integer values `u, v, w, X_1..X_n` (pass null and
 * zero length for the plain count `u = v = 1, w = -1, X_i = 1`), evaluated
 * through the determinant. Every `X_i` must be `1` or `-1`.
 *
 * # Safety
 * `values` must be null or point to `len` integers; `out` must be valid.
 */
enum VsasmStatus vsasm_count(uint32_t n, const int64_t *values, size_t len, char **out);

/**
 * `det C(i+j-1, 2j-i-1)` for `1 <= i, j <= n` in decimal.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum VsasmStatus vsasm_unrefined_det(uint32_t n, char **out);

/**
 * Releases a polynomial handle; null is ignored.
 *
 * # Safety
 * `p` must be null or a handle from this library not yet freed.
 */
void vsasm_poly_free(struct VsasmPoly *p);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void vsasm_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VSASM_H */
