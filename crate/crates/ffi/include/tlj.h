#ifndef TLJ_H
#define TLJ_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. `Ok` is zero; everything else is a failure.
 */
typedef enum TljStatus {
  TLJ_STATUS_OK = 0,
  TLJ_STATUS_NULL_POINTER = 1,
  TLJ_STATUS_INVALID_UTF8 = 2,
  TLJ_STATUS_PARSE = 3,
  TLJ_STATUS_INVALID_ARGUMENT = 4,
  TLJ_STATUS_MISMATCH = 5,
  TLJ_STATUS_MATH = 6,
  TLJ_STATUS_PANIC = 7,
} TljStatus;

/**
 * A diagram category with a fixed evaluation kernel.
 */
typedef struct TljEngine TljEngine;

/**
 * A linear combination of diagrams.
 */
typedef struct TljVector TljVector;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *tlj_last_error(void);

/**
 * Builds an engine. `flavor` is `tl`, `otl` or `brauer`; `ring` is a ring
 * selector such as `laurent:d`; `regime` is `standard`, `renorm`,
 * `infinity` or `oriented:c1,c2,z,zs`. `delta` may be null, in which case
 * the ring's first variable is used where a circle value is needed.
 *
 * # Safety
 * String arguments must be null or valid NUL-terminated strings; `out`
 * must be a valid pointer.
 */
enum TljStatus tlj_engine_new(const char *flavor,
                              const char *ring,
                              const char *regime,
                              const char *delta,
                              struct TljEngine **out);

/**
 * # Safety
 * `engine` must be null or a handle from [`tlj_engine_new`] not yet freed.
 */
void tlj_engine_free(struct TljEngine *engine);

/**
 * Dimension of End(word). For TL engines only the length of `word` matters.
 *
 * # Safety
 * Pointers must be valid as described for [`tlj_engine_new`].
 */
enum TljStatus tlj_engine_end_dim(const struct TljEngine *engine, const char *word, size_t *out);

/**
 * Identity of `word`.
 *
 * # Safety
 * Pointers must be valid as described for [`tlj_engine_new`].
 */
enum TljStatus tlj_vector_identity(const struct TljEngine *engine,
                                   const char *word,
                                   struct TljVector **out);

/**
 * Parses a vector from its JSON form.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum TljStatus tlj_vector_from_json(const char *json, struct TljVector **out);

/**
 * `upper ∘ lower`, evaluated in the engine's kernel.
 *
 * # Safety
 * Handles must be live; `out` must be a valid pointer.
 */
enum TljStatus tlj_vector_compose(const struct TljEngine *engine,
                                  const struct TljVector *upper,
                                  const struct TljVector *lower,
                                  struct TljVector **out);

/**
 * Writes 1 to `out` when the two vectors are equal, 0 otherwise.
 *
 * # Safety
 * Handles must be live; `out` must be a valid pointer.
 */
enum TljStatus tlj_vector_equal(const struct TljVector *a, const struct TljVector *b, int32_t *out);

/**
 * Number of diagrams with nonzero coefficient.
 *
 * # Safety
 * `v` must be live; `out` must be a valid pointer.
 */
enum TljStatus tlj_vector_term_count(const struct TljVector *v, size_t *out);

/**
 * JSON form of a vector; release the string with [`tlj_string_free`].
 *
 * # Safety
 * `v` must be live; `out` must be a valid pointer.
 */
enum TljStatus tlj_vector_to_json(const struct TljVector *v, char **out);

/**
 * # Safety
 * `v` must be null or a live vector handle.
 */
void tlj_vector_free(struct TljVector *v);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void tlj_string_free(char *s);

/**
 * Writes 1 to `out` when the n!×n! pairing matrix over S_n is the identity.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum TljStatus tlj_phi_is_identity(size_t n, int32_t *out);

/**
 * Number of acceptance criteria.
 */
size_t tlj_criteria_count(void);

/**
 * Runs acceptance criterion `id` (1-based) and writes 1 to `out` on pass.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum TljStatus tlj_run_criterion(size_t id, uint64_t seed, int32_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TLJ_H */
