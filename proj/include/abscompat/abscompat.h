// Copyright 2026 The abscompat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the abscompat library.
 *
 * Matrices are passed through the opaque ac_matrix handle. Every fallible
 * call returns an ac_status; on failure, ac_last_error_message() and
 * ac_last_error_reason() describe the most recent error on the calling
 * thread. Strings returned through char** out-parameters are owned by the
 * caller and must be released with ac_string_free(). Reports are JSON
 * documents in the same schema the CLI prints.
 */
#ifndef ABSCOMPAT_H
#define ABSCOMPAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ABSCOMPAT_BUILDING_LIBRARY)
#    define ABSCOMPAT_API __declspec(dllexport)
#  else
#    define ABSCOMPAT_API __declspec(dllimport)
#  endif
#else
#  define ABSCOMPAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ac_status {
  AC_OK = 0,
  AC_ERR_INVALID_ARGUMENT = 1,
  AC_ERR_DIMENSION = 2,
  AC_ERR_PARSE = 3,
  AC_ERR_IO = 4,
  /* Input is valid data but violates the operation's precondition (not
   * strict, not compatible, not generic, ...). */
  AC_ERR_PRECONDITION = 5,
  /* Numerical breakdown or failed self-verification. */
  AC_ERR_NUMERICAL = 6,
  AC_ERR_INTERNAL = 7
} ac_status;

typedef struct ac_tolerance {
  double eig; /* eigenvalue classification threshold */
  double res; /* operator-norm residual threshold */
} ac_tolerance;

typedef enum ac_gen_kind {
  AC_GEN_STRICT = 0,
  AC_GEN_STRICT_COMMUTING = 1,
  AC_GEN_COMPATIBLE_PAIR = 2,
  AC_GEN_GENERIC_PROJECTIONS = 3,
  AC_GEN_ARBITRARY_UNIT_INTERVAL = 4
} ac_gen_kind;

typedef struct ac_matrix ac_matrix;

ABSCOMPAT_API const char* ac_version(void);
ABSCOMPAT_API ac_tolerance ac_default_tolerance(void);
ABSCOMPAT_API const char* ac_status_name(ac_status status);

/* Message and snake_case reason of the last failure on this thread; empty
 * strings when the last call succeeded. */
ABSCOMPAT_API const char* ac_last_error_message(void);
ABSCOMPAT_API const char* ac_last_error_reason(void);

ABSCOMPAT_API void ac_string_free(char* s);

/* Row-major n*n real and imaginary parts; `im` may be NULL. The matrix is
 * stored as given (no symmetrization). */
ABSCOMPAT_API ac_status ac_matrix_create(size_t n, const double* re,
                                         const double* im, ac_matrix** out);
/* Parses the matrix JSON format and rejects asymmetry above tol.res. */
ABSCOMPAT_API ac_status ac_matrix_from_json(const char* text, ac_tolerance tol,
                                            ac_matrix** out);
ABSCOMPAT_API ac_status ac_matrix_load(const char* path, ac_tolerance tol,
                                       ac_matrix** out);
ABSCOMPAT_API ac_status ac_matrix_to_json(const ac_matrix* m, char** out);
ABSCOMPAT_API ac_status ac_matrix_save(const ac_matrix* m, const char* path);
ABSCOMPAT_API size_t ac_matrix_dim(const ac_matrix* m);
ABSCOMPAT_API ac_status ac_matrix_get(const ac_matrix* m, size_t row,
                                      size_t col, double* re, double* im);
ABSCOMPAT_API void ac_matrix_free(ac_matrix* m);

/* Absolute compatibility |a - b| + |1 - a - b| = 1. `verdict`, `residual`
 * and `report_json` may each be NULL. */
ABSCOMPAT_API ac_status ac_check_compatible(const ac_matrix* a,
                                            const ac_matrix* b,
                                            ac_tolerance tol, int* verdict,
                                            double* residual,
                                            char** report_json);

/* Block conditions with witness projection p1. */
ABSCOMPAT_API ac_status ac_characterize(const ac_matrix* a, const ac_matrix* b,
                                        const ac_matrix* p1, ac_tolerance tol,
                                        int* certified, char** report_json);

ABSCOMPAT_API ac_status ac_orthogonality(const ac_matrix* a, const ac_matrix* b,
                                         ac_tolerance tol, char** report_json);

/* Canonical form of a strict compatible pair. */
ABSCOMPAT_API ac_status ac_canonical_decompose(const ac_matrix* a,
                                               const ac_matrix* b,
                                               ac_tolerance tol,
                                               char** report_json);

ABSCOMPAT_API ac_status ac_five_block_decompose(const ac_matrix* a,
                                                const ac_matrix* b,
                                                ac_tolerance tol,
                                                char** report_json);

/* Doubled-space compatible pair from a strict commuting pair. */
ABSCOMPAT_API ac_status ac_construct_pair(const ac_matrix* a,
                                          const ac_matrix* b, ac_tolerance tol,
                                          ac_matrix** a_out, ac_matrix** b_out);

ABSCOMPAT_API ac_status ac_halmos_decompose(const ac_matrix* p,
                                            const ac_matrix* q,
                                            ac_tolerance tol,
                                            char** report_json);

/* Writes two matrices (a, b or p, q). For AC_GEN_GENERIC_PROJECTIONS `n` is
 * the full even dimension; otherwise it is the base dimension. */
ABSCOMPAT_API ac_status ac_generate(ac_gen_kind kind, size_t n, uint64_t seed,
                                    double margin, ac_matrix** first,
                                    ac_matrix** second);

ABSCOMPAT_API ac_status ac_run_suite(int trials, size_t max_n, uint64_t seed,
                                     ac_tolerance tol, unsigned threads,
                                     int include_timing, int* all_passed,
                                     char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* ABSCOMPAT_H */
