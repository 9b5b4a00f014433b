#ifndef TETRATRIG_H
#define TETRATRIG_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define TRIG_OK 0

#define TRIG_ERR_NULL_POINTER 1

#define TRIG_ERR_PARSE 2

#define TRIG_ERR_INVALID_FIELD 3

#define TRIG_ERR_DEGENERATE_FORM 4

#define TRIG_ERR_MIXED_FIELDS 5

#define TRIG_ERR_UNDEFINED 6

#define TRIG_ERR_NOT_SKEW 7

#define TRIG_ERR_NULL_PERPENDICULAR 8

#define TRIG_ERR_UNKNOWN_KEY 9

#define TRIG_ERR_INVALID_ARGUMENT 10

#define TRIG_ERR_PANIC 99

#define TRIG_PAIRING_01_23 0

#define TRIG_PAIRING_02_13 1

#define TRIG_PAIRING_03_12 2

/**
 * Opaque invariant report handle.
 */
typedef struct TrigReport TrigReport;

/**
 * Opaque tetrahedron handle.
 */
typedef struct TrigTetrahedron TrigTetrahedron;

/**
 * Verdict counts from `trig_verify`.
 */
typedef struct TrigVerifySummary {
  uint64_t checked;
  uint64_t passed;
  uint64_t failed;
  uint64_t inapplicable;
} TrigVerifySummary;

/**
 * Parses an input document (the `report`/`verify` JSON format).
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
int32_t trig_tetrahedron_from_json(const char *json, struct TrigTetrahedron **out);

/**
 * Builds a tetrahedron from literals: `field` such as `"Q"` or `"F_7"`,
 * `form` the six entries `a1 a2 a3 b1 b2 b3`, and `coords` the twelve
 * coordinates of `A0..A3` in order.
 *
 * # Safety
 * `form` must point to 6 and `coords` to 12 nul-terminated strings.
 */
int32_t trig_tetrahedron_new(const char *field,
                             const char *const *form,
                             const char *const *coords,
                             struct TrigTetrahedron **out);

/**
 * # Safety
 * `t` must be null or a handle from this library, not yet freed.
 */
void trig_tetrahedron_free(struct TrigTetrahedron *t);

/**
 * # Safety
 * `t` must be a live tetrahedron handle and `out` a valid pointer.
 */
int32_t trig_analyze(const struct TrigTetrahedron *t, struct TrigReport **out);

/**
 * # Safety
 * `r` must be null or a handle from this library, not yet freed.
 */
void trig_report_free(struct TrigReport *r);

/**
 * Looks up one entry by key (`"Q01"`, `"s1;02"`, `"R"`, `"R03;12"`, ...)
 * and writes its literal. An undefined entry returns `TRIG_ERR_UNDEFINED`
 * with the reason name as the last error.
 *
 * # Safety
 * `r` must be a live report handle, `key` a nul-terminated string and
 * `out` a valid pointer.
 */
int32_t trig_report_get(const struct TrigReport *r, const char *key, char **out);

/**
 * Writes the `invariants` map as JSON.
 *
 * # Safety
 * `r` must be a live report handle and `out` a valid pointer.
 */
int32_t trig_report_to_json(const struct TrigReport *r, char **out);

/**
 * Runs the identity and factorization checks and writes the counts.
 *
 * # Safety
 * `t` must be a live tetrahedron handle and `out` a valid pointer.
 */
int32_t trig_verify(const struct TrigTetrahedron *t, struct TrigVerifySummary *out);

/**
 * Skew quadrance of a pair of opposite edges (`TRIG_PAIRING_*`).
 *
 * # Safety
 * `t` must be a live tetrahedron handle and `out` a valid pointer.
 */
int32_t trig_skew_quadrance(const struct TrigTetrahedron *t, int32_t pairing, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void trig_string_free(char *s);

/**
 * The last error message on this thread, or null. The pointer stays valid
 * until the next failing call on the same thread.
 */
const char *trig_last_error(void);

#endif  /* TETRATRIG_H */
