/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef GADIM_H
#define GADIM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GadimSide {
  GADIM_SIDE_LEFT = 0,
  GADIM_SIDE_RIGHT = 1,
} GadimSide;

typedef enum GadimStatus {
  GADIM_STATUS_OK = 0,
  GADIM_STATUS_NULL_POINTER = 1,
  GADIM_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed spec, file or element text.
   */
  GADIM_STATUS_PARSE = 3,
  /**
   * Mathematically invalid request, e.g. a zero ideal where one is not
   * allowed or operands from different algebras.
   */
  GADIM_STATUS_DOMAIN = 4,
  GADIM_STATUS_BUDGET_EXCEEDED = 5,
  GADIM_STATUS_PANIC = 6,
} GadimStatus;

typedef struct GadimCode GadimCode;

typedef struct GadimElem GadimElem;

typedef struct GadimField GadimField;

typedef struct GadimGroup GadimGroup;

/**
 * Result of `gadim_dim_bound`.
 */
typedef struct GadimBound {
  size_t lower;
  size_t upper;
  /**
   * Multiplicity of `z` in the characteristic polynomial.
   */
  size_t k;
  /**
   * True when the generator is idempotent, so `lower` is the dimension.
   */
  bool exact;
} GadimBound;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or an empty string. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *gadim_last_error(void);

/**
 * Parses a field spec such as `gf:5`, `gf:2^4` or `gf:2^3:1,1,0,1`.
 *
 * # Safety
 * `spec` must be a nul-terminated string and `out` a valid pointer.
 */
enum GadimStatus gadim_field_new(const char *spec, struct GadimField **out_field);

/**
 * # Safety
 * `field` must be null or a live handle.
 */
uint64_t gadim_field_order(const struct GadimField *field);

/**
 * # Safety
 * `field` must be null or a handle not yet freed.
 */
void gadim_field_free(struct GadimField *field);

/**
 * Builds a group from a spec (`cyclic:n`, `symmetric:n`, ...). When
 * `order_path` is not null it names a Cayley file fixing the element order.
 *
 * # Safety
 * `spec` must be a nul-terminated string, `order_path` null or a
 * nul-terminated string, and `out_group` a valid pointer.
 */
enum GadimStatus gadim_group_new(const char *spec,
                                 const char *order_path,
                                 struct GadimGroup **out_group);

/**
 * # Safety
 * `group` must be null or a live handle.
 */
size_t gadim_group_order(const struct GadimGroup *group);

/**
 * # Safety
 * `group` must be null or a handle not yet freed.
 */
void gadim_group_free(struct GadimGroup *group);

/**
 * Parses an element in `index:coeff` text format, e.g. `"1:1,2:1"`.
 *
 * # Safety
 * `field` and `group` must be live handles, `text` a nul-terminated string
 * and `out_elem` a valid pointer.
 */
enum GadimStatus gadim_elem_parse(const struct GadimField *field,
                                  const struct GadimGroup *group,
                                  const char *text,
                                  struct GadimElem **out_elem);

/**
 * Product `a * b`.
 *
 * # Safety
 * `a` and `b` must be live handles and `out_elem` a valid pointer.
 */
enum GadimStatus gadim_elem_mul(const struct GadimElem *a,
                                const struct GadimElem *b,
                                struct GadimElem **out_elem);

/**
 * Single-line text of an element; release it with `gadim_string_free`.
 * Returns null for a null handle.
 *
 * # Safety
 * `elem` must be null or a live handle.
 */
char *gadim_elem_to_string(const struct GadimElem *elem);

/**
 * # Safety
 * `elem` must be null or a handle not yet freed.
 */
void gadim_elem_free(struct GadimElem *elem);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void gadim_string_free(char *s);

/**
 * Dimension of the ideal generated by `count` elements on `side`.
 *
 * # Safety
 * `elems` must point to `count` live handles and `out_dim` be valid.
 */
enum GadimStatus gadim_dim_ideal(const struct GadimElem *const *elems,
                                 size_t count,
                                 enum GadimSide side,
                                 size_t *out_dim);

/**
 * Bounds from the characteristic polynomial of the generator's matrix.
 *
 * # Safety
 * `elem` must be a live handle and `out_bound` valid.
 */
enum GadimStatus gadim_dim_bound(const struct GadimElem *elem,
                                 enum GadimSide side,
                                 struct GadimBound *out_bound);

/**
 * Idempotent generator of the principal ideal. Writes null to `out_elem`
 * when none exists.
 *
 * # Safety
 * `elem` must be a live handle and `out_elem` valid.
 */
enum GadimStatus gadim_idempotent(const struct GadimElem *elem,
                                  enum GadimSide side,
                                  struct GadimElem **out_elem);

/**
 * Exact dimension through the characteristic polynomial of `X M` with
 * symbolic `x`, `M` the symmetrized representation matrix.
 *
 * # Safety
 * `elem` must be a live handle and `out_dim` valid.
 */
enum GadimStatus gadim_dim_mulmuley_exact(const struct GadimElem *elem,
                                          enum GadimSide side,
                                          size_t *out_dim);

/**
 * Randomized variant of `gadim_dim_mulmuley_exact`; deterministic for a
 * given `seed`.
 *
 * # Safety
 * `elem` must be a live handle and `out_dim` valid.
 */
enum GadimStatus gadim_dim_mulmuley_random(const struct GadimElem *elem,
                                           enum GadimSide side,
                                           size_t trials,
                                           uint64_t seed,
                                           size_t *out_dim);

/**
 * Group code of the ideal generated by `count` elements.
 *
 * # Safety
 * `elems` must point to `count` live handles and `out_code` be valid.
 */
enum GadimStatus gadim_code_build(const struct GadimElem *const *elems,
                                  size_t count,
                                  enum GadimSide side,
                                  struct GadimCode **out_code);

/**
 * # Safety
 * `code` must be null or a live handle.
 */
size_t gadim_code_n(const struct GadimCode *code);

/**
 * # Safety
 * `code` must be null or a live handle.
 */
size_t gadim_code_k(const struct GadimCode *code);

/**
 * Minimum distance by exhaustive search over at most `budget` codewords.
 *
 * # Safety
 * `code` must be a live handle and `out_distance` valid.
 */
enum GadimStatus gadim_code_min_distance(const struct GadimCode *code,
                                         uint64_t budget,
                                         size_t *out_distance);

/**
 * Export format of the code; release it with `gadim_string_free`.
 *
 * # Safety
 * `code` must be null or a live handle.
 */
char *gadim_code_to_string(const struct GadimCode *code);

/**
 * # Safety
 * `code` must be null or a handle not yet freed.
 */
void gadim_code_free(struct GadimCode *code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GADIM_H */
