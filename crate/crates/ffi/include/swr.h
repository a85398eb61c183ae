#ifndef SWR_H
#define SWR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result codes. `SWR_STATUS_COUNTEREXAMPLE` is not an error: the call succeeded
 and found that the checked property fails.
 */
typedef enum SwrStatus {
  SWR_STATUS_OK = 0,
  SWR_STATUS_COUNTEREXAMPLE = 1,
  SWR_STATUS_NULL_ARGUMENT = 2,
  SWR_STATUS_INVALID_UTF8 = 3,
  SWR_STATUS_PARSE = 4,
  SWR_STATUS_PRECONDITION = 5,
  SWR_STATUS_INSUFFICIENT_TERMS = 6,
  SWR_STATUS_GUARD_EXCEEDED = 7,
  SWR_STATUS_ARITHMETIC = 8,
  SWR_STATUS_IO = 9,
  SWR_STATUS_OUT_OF_RANGE = 10,
  SWR_STATUS_INTERNAL = 11,
} SwrStatus;

/*
 Opaque triangle handle.
 */
typedef struct SwrTriangle SwrTriangle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread, or null. Valid until
 the next failing call on the same thread; do not free.
 */
const char *swr_last_error_message(void);

/*
 Library version as a static string; do not free.
 */
const char *swr_version(void);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must be null or a pointer obtained from this library and not yet
 freed.
 */
void swr_string_free(char *s);

/*
 Builds rows `0..=max_row` for `params` (e.g. `"stirling2"`,
 `"1,1,1,1,1"` or `"a1=sym,a2=0,b1=1,b2=1,lam=0"`).

 # Safety
 `params` must be a valid C string and `out` a valid pointer.
 */
enum SwrStatus swr_triangle_new(const char *params, size_t max_row, struct SwrTriangle **out);

/*
 Parses a triangle document as produced by `swr_triangle_to_json`.

 # Safety
 `json` must be a valid C string and `out` a valid pointer.
 */
enum SwrStatus swr_triangle_from_json(const char *json, struct SwrTriangle **out);

/*
 Releases a triangle. Null is ignored.

 # Safety
 `t` must be null or a handle from this library that was not yet freed.
 */
void swr_triangle_free(struct SwrTriangle *t);

/*
 Largest stored row index.

 # Safety
 `t` must be a live handle and `out` a valid pointer.
 */
enum SwrStatus swr_triangle_max_row(const struct SwrTriangle *t, size_t *out);

/*
 `T(n,k)` as an exact string: `"p/q"` for rationals, a sum of monomials
 for symbolic entries.

 # Safety
 `t` must be a live handle and `out` a valid pointer.
 */
enum SwrStatus swr_triangle_entry(const struct SwrTriangle *t, size_t n, size_t k, char **out);

/*
 The triangle as a JSON document.

 # Safety
 `t` must be a live handle and `out` a valid pointer.
 */
enum SwrStatus swr_triangle_to_json(const struct SwrTriangle *t, char **out);

/*
 Runs a verification suite. `config` is null or a JSON object with any
 of `params` (string), `rows`, `shift`, `order`, `matrix_size`, `guard`
 (integers), `symbolic` (bool) and `q` (rational string). The report
 JSON is written to `report` for both `SWR_STATUS_OK` and
 `SWR_STATUS_COUNTEREXAMPLE`.

 # Safety
 `suite` must be a valid C string, `config` null or a valid C string,
 and `report` a valid pointer.
 */
enum SwrStatus swr_verify(const char *suite, const char *config, char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SWR_H */
