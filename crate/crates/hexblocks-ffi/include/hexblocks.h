/* C interface to the hexblocks polyomino enumeration engine. */

#ifndef HEXBLOCKS_H
#define HEXBLOCKS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every fallible call.
 */
typedef enum HbStatus {
  HB_STATUS_OK = 0,
  /**
   * A pointer was null or a parameter was out of range.
   */
  HB_STATUS_INVALID_ARGUMENT = 1,
  /**
   * The request is structurally valid but not supported (for example a
   * closed form for a level that has none).
   */
  HB_STATUS_UNSUPPORTED = 2,
  /**
   * The caller's buffer is too small; the required size was reported.
   */
  HB_STATUS_BUFFER_TOO_SMALL = 3,
  /**
   * A verification suite ran and at least one check failed.
   */
  HB_STATUS_VERIFICATION_FAILED = 4,
  /**
   * An internal invariant failed.
   */
  HB_STATUS_INTERNAL = 5,
} HbStatus;

/**
 * Opaque table of exact counts indexed by area.
 */
typedef struct HbCountTable HbCountTable;

/**
 * Growth data of one blocks level.
 */
typedef struct HbGrowth {
  double growth;
  double amplitude;
  double dominant_root;
  double next_modulus;
  double margin;
} HbGrowth;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Counts of level-`level` polyominoes with cheesy blocks for areas
 * `1..=max_area`, by the transfer recursion.
 */
enum HbStatus hb_count_blocks(uint32_t level, uint32_t max_area, struct HbCountTable **out);

/**
 * Counts of level-`level` cheesy polyominoes.
 */
enum HbStatus hb_count_cheesy(uint32_t level, uint32_t max_area, struct HbCountTable **out);

/**
 * Counts of incomplete figures (one column short of membership).
 */
enum HbStatus hb_count_incomplete(uint32_t level, uint32_t max_area, struct HbCountTable **out);

/**
 * Largest area stored in the table.
 */
uint32_t hb_count_table_max_area(const struct HbCountTable *table);

/**
 * Copies the exact decimal count for `area` into `buf` (NUL-terminated).
 * `*needed` always receives the required buffer size including the NUL.
 */
enum HbStatus hb_count_table_get(const struct HbCountTable *table,
                                 uint32_t area,
                                 char *buf,
                                 uintptr_t buf_len,
                                 uintptr_t *needed);

/**
 * Frees a count table. Passing null is a no-op.
 */
void hb_count_table_free(struct HbCountTable *table);

/**
 * Growth constant, amplitude, dominant root and modulus margin of the
 * closed form for `level` 1, 2 or 3.
 */
enum HbStatus hb_growth(uint32_t level, struct HbGrowth *out);

/**
 * Exact decimal coefficient of the closed-form series at `area`, for
 * `level` 1, 2 or 3.
 */
enum HbStatus hb_gf_coefficient(uint32_t level,
                                uint32_t area,
                                char *buf,
                                uintptr_t buf_len,
                                uintptr_t *needed);

/**
 * Runs a verification suite by name (`table1`, `gf-cross`, `oracle`,
 * `eq1`, `eq2`, `reflection`, `asymptotics`, `extrapolate`, `all`).
 * `oracle_max_area` caps the exhaustive suites; pass 0 for the default.
 */
enum HbStatus hb_verify(const char *suite, uint32_t oracle_max_area);

/**
 * Static, NUL-terminated library version string.
 */
const char *hb_version(void);

/**
 * Static, NUL-terminated description of a status code.
 */
const char *hb_status_message(enum HbStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HEXBLOCKS_H */
