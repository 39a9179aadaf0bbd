#ifndef RIGIDITYLAB_H
#define RIGIDITYLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum RlStatus {
  RL_STATUS_OK = 0,
  // A required pointer argument was null.
  RL_STATUS_NULL_ARG = 1,
  // Invalid input: schema, field, tuple or root-system errors.
  RL_STATUS_INVALID = 2,
  // A work or size cap was exceeded.
  RL_STATUS_WORK_CAP = 3,
  // A guaranteed mathematical implication failed.
  RL_STATUS_THEOREM = 4,
  // A panic was caught at the boundary.
  RL_STATUS_INTERNAL = 5,
} RlStatus;

// A finite field `F_{p^k}`.
typedef struct RlField RlField;

// A validated generator tuple.
typedef struct RlTuple RlTuple;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failure on this thread, or an empty string. The
// pointer stays valid until the next failing call on the same thread.
const char *rl_last_error_message(void);

// Creates `F_{p^k}`.
//
// # Safety
// `out` must be a valid pointer to writable storage for one handle.
enum RlStatus rl_field_create(uint64_t p, uint32_t k, struct RlField **out);

// # Safety
// `field` must be null or a handle from [`rl_field_create`] not yet freed.
void rl_field_free(struct RlField *field);

// Number of elements, or 0 for a null handle.
//
// # Safety
// `field` must be null or a live handle.
uint64_t rl_field_order(const struct RlField *field);

// Product of two raw element encodings `Σ c_i p^i`.
//
// # Safety
// `field` and `out` must be valid pointers.
enum RlStatus rl_field_mul(const struct RlField *field, uint32_t a, uint32_t b, uint32_t *out);

// Parses and validates a tuple document (the CLI input schema).
//
// # Safety
// `json` must be a NUL-terminated UTF-8 string; `out` must be writable.
enum RlStatus rl_tuple_from_json(const char *json, struct RlTuple **out);

// # Safety
// `tuple` must be null or a handle from [`rl_tuple_from_json`] not yet freed.
void rl_tuple_free(struct RlTuple *tuple);

// Number of generators, or 0 for a null handle.
//
// # Safety
// `tuple` must be null or a live handle.
size_t rl_tuple_len(const struct RlTuple *tuple);

// Dimension of the span of the images of `I - Ad(c_i)` and of the coinvariants.
//
// # Safety
// All pointers must be valid; `tuple` must be a live handle.
enum RlStatus rl_coinvariant_dim(const struct RlTuple *tuple, size_t *span_dim, size_t *coinv_dim);

// The rigidity report as JSON. Free the string with [`rl_string_free`].
//
// # Safety
// `tuple` must be a live handle and `out` writable.
enum RlStatus rl_rigidity_report_json(const struct RlTuple *tuple,
                                      bool assert_irreducible,
                                      char **out);

// `j_d`, the largest dimension of a class of order-`d` elements.
//
// # Safety
// `out` must be writable.
enum RlStatus rl_j_value(char letter, size_t rank, uint64_t d, size_t *out);

// Determinant of the Cartan matrix.
//
// # Safety
// `out` must be writable.
enum RlStatus rl_cartan_det(char letter, size_t rank, int64_t *out);

// Census of `T(signature)` into `SL_{rank+1}(q)`, or `PSL` when
// `projective`, as JSON. Free the string with [`rl_string_free`].
//
// # Safety
// `signature` must point to `len` readable values and `out` be writable.
enum RlStatus rl_census_json(size_t rank,
                             uint64_t q,
                             const uint64_t *signature,
                             size_t len,
                             bool projective,
                             size_t workers,
                             char **out);

// Releases a string returned by this library.
//
// # Safety
// `s` must be null or a string from this library not yet freed.
void rl_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RIGIDITYLAB_H */
