#ifndef APLOCO_H
#define APLOCO_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AplocoDirection {
  APLOCO_DIRECTION_MAX = 0,
  APLOCO_DIRECTION_MIN = 1,
} AplocoDirection;

typedef enum AplocoStatus {
  APLOCO_STATUS_OK = 0,
  APLOCO_STATUS_NULL_POINTER = 1,
  APLOCO_STATUS_INVALID_UTF8 = 2,
  APLOCO_STATUS_INVALID_INPUT = 3,
  APLOCO_STATUS_IO = 4,
  APLOCO_STATUS_OUT_OF_RANGE = 5,
  APLOCO_STATUS_INTERNAL = 6,
  APLOCO_STATUS_PANIC = 7,
} AplocoStatus;

// A validated decision problem.
typedef struct AplocoProblem AplocoProblem;

// A ranking computed from a problem.
typedef struct AplocoReport AplocoReport;

// Score of one alternative. `index` is its position in the input matrix;
// `rank` starts at 1.
typedef struct AplocoScore {
  size_t index;
  double alpha;
  double theta;
  double distance;
  size_t rank;
} AplocoScore;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. The pointer stays
// valid until the next call into this library from the same thread.
const char *aploco_last_error(void);

// Library version as a static NUL-terminated string.
const char *aploco_version(void);

// Builds a problem from a row-major `n_criteria × n_alternatives` matrix.
// Criteria are named C1.., alternatives A1..
//
// # Safety
// `values` must point to `n_criteria * n_alternatives` doubles, `weights` and
// `directions` to `n_criteria` elements each, and `out` must be writable.
// Each direction is an [`AplocoDirection`] value.
enum AplocoStatus aploco_problem_new(size_t n_criteria,
                                     size_t n_alternatives,
                                     const double *values,
                                     const double *weights,
                                     const int32_t *directions,
                                     bool normalize_weights,
                                     struct AplocoProblem **out);

// Loads a problem from matrix and criteria CSV files. `weights_path` may be
// null; otherwise its weights replace those of the criteria file.
//
// # Safety
// Paths must be null or NUL-terminated strings; `out` must be writable.
enum AplocoStatus aploco_problem_load(const char *matrix_path,
                                      const char *criteria_path,
                                      const char *weights_path,
                                      bool decimal_comma,
                                      bool normalize_weights,
                                      struct AplocoProblem **out);

// # Safety
// `problem` must be null or a handle from this library not yet freed.
void aploco_problem_free(struct AplocoProblem *problem);

// # Safety
// `problem` must be a live handle; the out pointers must be writable.
enum AplocoStatus aploco_problem_shape(const struct AplocoProblem *problem,
                                       size_t *n_criteria,
                                       size_t *n_alternatives);

// Replaces the weights of a problem in place.
//
// # Safety
// `problem` must be a live handle and `weights` must point to one double per criterion.
enum AplocoStatus aploco_problem_set_weights(struct AplocoProblem *problem,
                                             const double *weights,
                                             bool normalize_weights);

// Ranks a problem. `timestamp` is copied into the JSON report and may be null.
//
// # Safety
// `problem` must be a live handle, `timestamp` null or a NUL-terminated
// string, and `out` writable.
enum AplocoStatus aploco_rank(const struct AplocoProblem *problem,
                              const char *timestamp,
                              struct AplocoReport **out);

// # Safety
// `report` must be null or a handle from this library not yet freed.
void aploco_report_free(struct AplocoReport *report);

// Number of alternatives in a report, or 0 for a null handle.
//
// # Safety
// `report` must be null or a live handle.
size_t aploco_report_len(const struct AplocoReport *report);

// # Safety
// `report` must be a live handle and `out` writable.
enum AplocoStatus aploco_report_beta_sum(const struct AplocoReport *report, double *out);

// Row maximum of the weighted matrix for criterion `index`.
//
// # Safety
// `report` must be a live handle and `out` writable.
enum AplocoStatus aploco_report_beta(const struct AplocoReport *report, size_t index, double *out);

// Score of the alternative at input position `index`.
//
// # Safety
// `report` must be a live handle and `out` writable.
enum AplocoStatus aploco_report_score(const struct AplocoReport *report,
                                      size_t index,
                                      struct AplocoScore *out);

// Input position of the alternative holding `rank` (1-based).
//
// # Safety
// `report` must be a live handle and `out` writable.
enum AplocoStatus aploco_report_index_of_rank(const struct AplocoReport *report,
                                              size_t rank,
                                              size_t *out);

// The report as JSON. Release the string with [`aploco_string_free`].
//
// # Safety
// `report` must be a live handle and `out` writable.
enum AplocoStatus aploco_report_to_json(const struct AplocoReport *report, char **out);

// # Safety
// `s` must be null or a string returned by this library not yet freed.
void aploco_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* APLOCO_H */
