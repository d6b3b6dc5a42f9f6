#ifndef SPHERECERT_H
#define SPHERECERT_H

#pragma once

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SpherecertStatus {
  SPHERECERT_STATUS_OK = 0,
  SPHERECERT_STATUS_NULL_POINTER = 1,
  SPHERECERT_STATUS_INVALID_UTF8 = 2,
  SPHERECERT_STATUS_UNKNOWN_SUITE = 3,
  SPHERECERT_STATUS_UNKNOWN_TABLE = 4,
  SPHERECERT_STATUS_INVALID_ARGUMENT = 5,
  SPHERECERT_STATUS_DIMENSION_MISMATCH = 6,
  SPHERECERT_STATUS_INTERNAL = 7,
} SpherecertStatus;

/**
 * An element of ℂ, ℍ or 𝕆 with exact rational coefficients.
 */
typedef struct SpherecertElement SpherecertElement;

/**
 * A verification report produced by [`spherecert_run_suite`].
 */
typedef struct SpherecertReport SpherecertReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never null; do not free.
 */
const char *spherecert_status_message(enum SpherecertStatus status);

/**
 * Runs a suite (`algebra`, `s3`, `s3-cr`, `s3-hopf`, `s7-frame`, `s7-cr`,
 * `s7-quat` or `all`) with the given sample count and seed.
 *
 * # Safety
 * `suite` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SpherecertStatus spherecert_run_suite(const char *suite,
                                           uint64_t samples,
                                           uint64_t seed,
                                           struct SpherecertReport **out);

/**
 * # Safety
 * `report` must come from [`spherecert_run_suite`] and not be used after.
 */
void spherecert_report_free(struct SpherecertReport *report);

/**
 * The report as JSON, byte-identical to the CLI output.
 *
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
enum SpherecertStatus spherecert_report_json(const struct SpherecertReport *report, char **out);

/**
 * Total, passed and failed check counts. Any of the out-pointers may be null.
 *
 * # Safety
 * `report` must be a live handle.
 */
enum SpherecertStatus spherecert_report_summary(const struct SpherecertReport *report,
                                                size_t *total,
                                                size_t *passed,
                                                size_t *failed);

/**
 * 0 if every check passed, 1 otherwise, -1 for a null handle.
 *
 * # Safety
 * `report` must be a live handle or null.
 */
int32_t spherecert_report_exit_code(const struct SpherecertReport *report);

/**
 * CSV table `oct-mult` or `commutators`.
 *
 * # Safety
 * `kind` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SpherecertStatus spherecert_emit_table(const char *kind, char **out);

/**
 * # Safety
 * `s` must come from this library, or be null.
 */
void spherecert_string_free(char *s);

/**
 * Builds an element from `dim` coefficients `num[i] / den[i]`. `dim` must be
 * 2, 4 or 8 and every denominator nonzero.
 *
 * # Safety
 * `num` and `den` must point to `dim` readable values; `out` must be valid.
 */
enum SpherecertStatus spherecert_element_new(const int64_t *num,
                                             const int64_t *den,
                                             size_t dim,
                                             struct SpherecertElement **out);

/**
 * # Safety
 * `e` must come from this library and not be used after.
 */
void spherecert_element_free(struct SpherecertElement *e);

/**
 * Dimension of the element, or 0 for a null handle.
 *
 * # Safety
 * `e` must be a live handle or null.
 */
size_t spherecert_element_dim(const struct SpherecertElement *e);

/**
 * Product `a·b` in the algebra of their common dimension.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be valid.
 */
enum SpherecertStatus spherecert_element_mul(const struct SpherecertElement *a,
                                             const struct SpherecertElement *b,
                                             struct SpherecertElement **out);

/**
 * Coefficient `index` as a `"p/q"` string.
 *
 * # Safety
 * `e` must be a live handle and `out` a valid pointer.
 */
enum SpherecertStatus spherecert_element_coeff(const struct SpherecertElement *e,
                                               size_t index,
                                               char **out);

/**
 * Squared norm as a `"p/q"` string.
 *
 * # Safety
 * `e` must be a live handle and `out` a valid pointer.
 */
enum SpherecertStatus spherecert_element_norm_sq(const struct SpherecertElement *e, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPHERECERT_H */
