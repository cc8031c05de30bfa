#ifndef PROJRICH_H
#define PROJRICH_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum PrStatus {
  PR_STATUS_OK = 0,
  /**
   * Bad type, rank, coweight or parameter.
   */
  PR_STATUS_INVALID_INPUT = 1,
  /**
   * The computation ran and at least one identity failed.
   */
  PR_STATUS_VERIFICATION_FAILED = 2,
  /**
   * A polynomial division was not exact.
   */
  PR_STATUS_INEXACT_DIVISION = 3,
  /**
   * A required pointer was null.
   */
  PR_STATUS_NULL_POINTER = 4,
  /**
   * The output buffer is shorter than `*out_len`.
   */
  PR_STATUS_BUFFER_TOO_SMALL = 5,
  /**
   * An internal panic was caught.
   */
  PR_STATUS_PANIC = 6,
} PrStatus;

/**
 * Verification suites, as in the command-line `--suite`.
 */
typedef enum PrSuite {
  PR_SUITE_COMBINATORICS = 0,
  PR_SUITE_DEMAZURE = 1,
  PR_SUITE_COHOMOLOGY = 2,
  PR_SUITE_KTHEORY = 3,
  PR_SUITE_MATRIX = 4,
  PR_SUITE_GENFUN = 5,
  PR_SUITE_ALL = 6,
} PrSuite;

/**
 * A root system together with a dominant coweight.
 */
typedef struct PrInstance PrInstance;

/**
 * Bounds for the randomized and ball-limited parts of a verification run.
 */
typedef struct PrVerifyOptions {
  uint64_t seed;
  uint32_t max_len;
  uint32_t samples;
} PrVerifyOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last nonzero status on this thread. Empty after success.
 * The pointer stays valid until the next call on this thread.
 */
const char *pr_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *pr_version(void);

/**
 * Builds an instance from a type letter (`"A"`..`"D"`), a rank and the
 * coweight's `rank` coordinates in the fundamental-coweight basis.
 *
 * # Safety
 * `type_name` must be a NUL-terminated string, `coweight` must point to
 * `len` values and `out` must be writable.
 */
enum PrStatus pr_instance_new(const char *type_name,
                              uint32_t rank,
                              const int32_t *coweight,
                              size_t len,
                              struct PrInstance **out);

/**
 * Releases an instance. Null is ignored.
 *
 * # Safety
 * `h` must come from [`pr_instance_new`] and not be used afterwards.
 */
void pr_instance_free(struct PrInstance *h);

/**
 * `|Adm(λ)|`.
 *
 * # Safety
 * `h` must be a live instance and `out` writable.
 */
enum PrStatus pr_instance_admissible_count(const struct PrInstance *h, uint64_t *out);

/**
 * Length generating function of `Adm(λ)` by enumeration.
 *
 * # Safety
 * `h` must be a live instance, `buf` must hold `cap` values and `out_len`
 * must be writable.
 */
enum PrStatus pr_instance_length_genfun(const struct PrInstance *h,
                                        int64_t *buf,
                                        size_t cap,
                                        size_t *out_len);

/**
 * Rank generating function of `Q_J` by enumeration.
 *
 * # Safety
 * As for [`pr_instance_length_genfun`].
 */
enum PrStatus pr_instance_rank_genfun(const struct PrInstance *h,
                                      int64_t *buf,
                                      size_t cap,
                                      size_t *out_len);

/**
 * Closed-form length generating function for the Grassmannian `Gr(k, n)`.
 *
 * # Safety
 * `buf` must hold `cap` values and `out_len` must be writable.
 */
enum PrStatus pr_type_a_genfun(uint32_t k, uint32_t n, int64_t *buf, size_t cap, size_t *out_len);

/**
 * Poset dump of `Q_J` and `Adm(λ)` as JSON, as printed by `projrich poset`.
 *
 * # Safety
 * `h` must be a live instance and `out_json` writable. Free the result with
 * [`pr_string_free`].
 */
enum PrStatus pr_instance_poset_json(const struct PrInstance *h, char **out_json);

/**
 * Runs the [`PrSuite`] numbered `suite` and returns its reports as a JSON array.
 * The status is [`PrStatus::VerificationFailed`] if any report failed; the
 * JSON is produced in both cases.
 *
 * # Safety
 * `h` must be a live instance, `opts` readable and `out_json` writable.
 * Free the result with [`pr_string_free`].
 */
enum PrStatus pr_instance_verify(const struct PrInstance *h,
                                 uint32_t suite,
                                 const struct PrVerifyOptions *opts,
                                 char **out_json);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void pr_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PROJRICH_H */
