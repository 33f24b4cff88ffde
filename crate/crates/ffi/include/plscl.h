#ifndef PLSCL_H
#define PLSCL_H

/* Generated by cbindgen from the plscl-ffi crate. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PlsclStatus {
  PLSCL_STATUS_OK = 0,
  PLSCL_STATUS_NULL_POINTER = 1,
  PLSCL_STATUS_INVALID_UTF8 = 2,
  PLSCL_STATUS_INVALID_INPUT = 3,
  PLSCL_STATUS_INVALID_MAP = 4,
  PLSCL_STATUS_DOMAIN_ERROR = 5,
  PLSCL_STATUS_UNBOUND_SYMBOL = 6,
  PLSCL_STATUS_BUDGET_EXHAUSTED = 7,
  PLSCL_STATUS_PRECONDITION_VIOLATED = 8,
  PLSCL_STATUS_SUPPORT_TOUCHES_BOUNDARY = 9,
  PLSCL_STATUS_PRODUCT_MISMATCH = 10,
  PLSCL_STATUS_VERIFICATION_FAILED = 11,
  PLSCL_STATUS_INVALID_INDEX = 12,
  PLSCL_STATUS_WRONG_ARITY = 13,
  PLSCL_STATUS_WRONG_TARGET = 14,
  PLSCL_STATUS_WRONG_BOUND = 15,
  PLSCL_STATUS_PANIC = 99,
} PlsclStatus;

/*
 A commutator-length certificate.
 */
typedef struct PlsclCertificate PlsclCertificate;

/*
 An element of PL⁺(I).
 */
typedef struct PlsclMap PlsclMap;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the most recent failure on this thread, or an empty string.

 The pointer stays valid until the next call into the library on the same thread.
 */
const char *plscl_last_error_message(void);

/*
 Releases a string returned by the library. Null is ignored.

 # Safety
 `s` must come from this library and not have been freed already.
 */
void plscl_string_free(char *s);

/*
 # Safety
 `out` must be valid for writes.
 */
enum PlsclStatus plscl_map_identity(struct PlsclMap **out);

/*
 Parses `{"breakpoints": [["p/q","p/q"], ...]}`.

 # Safety
 `json_text` must be a NUL-terminated string and `out` valid for writes.
 */
enum PlsclStatus plscl_map_from_json(const char *json_text, struct PlsclMap **out);

/*
 # Safety
 `map` must be a live handle and `out` valid for writes.
 */
enum PlsclStatus plscl_map_to_json(const struct PlsclMap *map, char **out);

/*
 Thompson's generator `x0` (index 0) or `x1` (index 1).

 # Safety
 `out` must be valid for writes.
 */
enum PlsclStatus plscl_thompson_generator(uint32_t index, struct PlsclMap **out);

/*
 `outer ∘ inner`: `inner` is applied first.

 # Safety
 Both handles must be live and `out` valid for writes.
 */
enum PlsclStatus plscl_map_compose(const struct PlsclMap *outer,
                                   const struct PlsclMap *inner,
                                   struct PlsclMap **out);

/*
 # Safety
 `map` must be a live handle and `out` valid for writes.
 */
enum PlsclStatus plscl_map_invert(const struct PlsclMap *map, struct PlsclMap **out);

/*
 # Safety
 `map` must be a live handle and `out` valid for writes.
 */
enum PlsclStatus plscl_map_power(const struct PlsclMap *map, int64_t k, struct PlsclMap **out);

/*
 Evaluates at the rational `"p/q"`, writing the value as `"p/q"`.

 # Safety
 `map` must be a live handle, `x` NUL-terminated and `out` valid for writes.
 */
enum PlsclStatus plscl_map_eval(const struct PlsclMap *map, const char *x, char **out);

/*
 Slopes at 0 and at 1.

 # Safety
 `map` must be a live handle and both outputs valid for writes.
 */
enum PlsclStatus plscl_map_eta(const struct PlsclMap *map, char **slope0, char **slope1);

/*
 # Safety
 Both handles must be live and `out` valid for writes.
 */
enum PlsclStatus plscl_map_equal(const struct PlsclMap *a, const struct PlsclMap *b, bool *out);

/*
 Whether the map lies in Thompson's group F.

 # Safety
 `map` must be a live handle and `out` valid for writes.
 */
enum PlsclStatus plscl_map_is_dyadic(const struct PlsclMap *map, bool *out);

/*
 Releases a map. Null is ignored.

 # Safety
 `map` must come from this library and not have been freed already.
 */
void plscl_map_free(struct PlsclMap *map);

/*
 Common fixed set of a generator environment and its complementary components, as JSON.

 # Safety
 `gens_json` must be NUL-terminated and `out` valid for writes.
 */
enum PlsclStatus plscl_fixed_set_json(const char *gens_json, char **out);

/*
 Searches for a word displacing every target interval, written as word JSON.

 # Safety
 Both inputs must be NUL-terminated and `out` valid for writes.
 */
enum PlsclStatus plscl_displace_json(const char *gens_json,
                                     const char *targets_json,
                                     size_t budget,
                                     char **out);

/*
 Builds a verified certificate for `g^(n+1)`. With a null `j_json` the
 displacer is searched for within word length `budget`.

 # Safety
 `gens_json` and `expr_json` must be NUL-terminated, `j_json` NUL-terminated
 or null, and `out` valid for writes.
 */
enum PlsclStatus plscl_certify(const char *gens_json,
                               const char *expr_json,
                               const char *j_json,
                               uint64_t n,
                               size_t budget,
                               struct PlsclCertificate **out);

/*
 # Safety
 `json_text` must be NUL-terminated and `out` valid for writes.
 */
enum PlsclStatus plscl_certificate_from_json(const char *json_text, struct PlsclCertificate **out);

/*
 # Safety
 `cert` must be a live handle and `out` valid for writes.
 */
enum PlsclStatus plscl_certificate_to_json(const struct PlsclCertificate *cert, char **out);

/*
 [`PlsclStatus::Ok`] if the certificate checks out, otherwise the rejection reason.

 # Safety
 `cert` must be a live handle.
 */
enum PlsclStatus plscl_certificate_verify(const struct PlsclCertificate *cert);

/*
 The claimed bound in lowest terms, as `"p/q"`.

 # Safety
 `cert` must be a live handle and `out` valid for writes.
 */
enum PlsclStatus plscl_certificate_bound(const struct PlsclCertificate *cert, char **out);

/*
 Releases a certificate. Null is ignored.

 # Safety
 `cert` must come from this library and not have been freed already.
 */
void plscl_certificate_free(struct PlsclCertificate *cert);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PLSCL_H */
