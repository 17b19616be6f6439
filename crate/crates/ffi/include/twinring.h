#ifndef TWINRING_H
#define TWINRING_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Mirrors the command-line exit codes, plus two ABI-only conditions.
 */
typedef enum TrStatus {
  TR_STATUS_OK = 0,
  TR_STATUS_INVALID_INPUT = 1,
  TR_STATUS_NOT_TWIN_GOOD = 2,
  TR_STATUS_VERIFICATION_FAILED = 3,
  TR_STATUS_BOUND_EXCEEDED = 4,
  TR_STATUS_NULL_POINTER = 5,
  TR_STATUS_PANIC = 6,
} TrStatus;

typedef struct TrCertificate TrCertificate;

typedef struct TrMatrix TrMatrix;

typedef struct TrRing TrRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread. Never null; owned by the
 * library and valid until the next failing call on the same thread.
 */
const char *tr_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void tr_string_free(char *s);

/**
 * Parses a ring descriptor such as `Z/12`, `GF(4)` or `Z/2 x Z/3`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum TrStatus tr_ring_parse(const char *text, struct TrRing **out);

/**
 * # Safety
 * `ring` must be null or a handle from [`tr_ring_parse`], not yet freed.
 */
void tr_ring_free(struct TrRing *ring);

/**
 * Canonical descriptor text, or null on failure.
 *
 * # Safety
 * `ring` must be a live handle.
 */
char *tr_ring_to_string(const struct TrRing *ring);

/**
 * Exhaustive goodness report for `ring` as a `key: value` document.
 *
 * # Safety
 * `ring` must be a live handle; `out` must be writable.
 */
enum TrStatus tr_ring_check(const struct TrRing *ring, uint64_t bound, uint32_t k_max, char **out);

/**
 * Parses a matrix document with `ring:` and `rows:` fields.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum TrStatus tr_matrix_parse(const char *text, struct TrMatrix **out);

/**
 * Parses rows such as `[[1, 2], [3, 4]]` over `ring`.
 *
 * # Safety
 * `ring` must be a live handle, `rows` a NUL-terminated string, `out` writable.
 */
enum TrStatus tr_matrix_from_rows(const struct TrRing *ring,
                                  const char *rows,
                                  struct TrMatrix **out);

/**
 * # Safety
 * `m` must be null or a live matrix handle.
 */
void tr_matrix_free(struct TrMatrix *m);

/**
 * Number of rows (matrices are square when decomposed; 0 for null).
 *
 * # Safety
 * `m` must be null or a live matrix handle.
 */
uintptr_t tr_matrix_rows(const struct TrMatrix *m);

/**
 * Matrix document (`ring:` and `rows:`), or null on failure.
 *
 * # Safety
 * `m` must be a live matrix handle.
 */
char *tr_matrix_to_string(const struct TrMatrix *m);

/**
 * Twin decomposition of `m`. On success `*out` holds a verified certificate.
 *
 * # Safety
 * `m` must be a live matrix handle; `out` must be writable.
 */
enum TrStatus tr_twin_decompose(const struct TrMatrix *m, struct TrCertificate **out);

/**
 * # Safety
 * `c` must be null or a live certificate handle.
 */
void tr_certificate_free(struct TrCertificate *c);

/**
 * Re-checks all six identity products. Null yields false.
 *
 * # Safety
 * `c` must be null or a live certificate handle.
 */
bool tr_certificate_verify(const struct TrCertificate *c);

/**
 * Certificate document, or null on failure.
 *
 * # Safety
 * `c` must be a live certificate handle.
 */
char *tr_certificate_to_string(const struct TrCertificate *c);

/**
 * Replays a certificate document. Writes whether the products check out and what
 * the document's `verified` flag claims.
 *
 * # Safety
 * `text` must be a NUL-terminated string; both out pointers must be writable.
 */
enum TrStatus tr_certificate_replay(const char *text, bool *recomputed, bool *claimed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TWINRING_H */
