/*
   Copyright 2026 The discres Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* C interface to the discres library. Objects are opaque handles owned by
 * the caller and released with the matching *_free function. Every call that
 * can fail returns a discres_status; on failure the message is available from
 * discres_last_error() until the next failing call on the same thread.
 * Strings returned through char** are released with discres_string_free. */

#ifndef DISCRES_H
#define DISCRES_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DISCRES_API __declspec(dllexport)
#else
#define DISCRES_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum discres_status {
  DISCRES_OK = 0,
  DISCRES_INCOMPATIBLE_VARIABLES = 1,
  DISCRES_UNKNOWN_VARIABLE = 2,
  DISCRES_PARSE_ERROR = 3,
  DISCRES_NOT_DIVISIBLE = 4,
  DISCRES_DIVISION_BY_ZERO = 5,
  DISCRES_ZERO_POLYNOMIAL = 6,
  DISCRES_BOTH_CONSTANT_IN_V = 7,
  DISCRES_CONSTANT_IN_V = 8,
  DISCRES_VARIABLE_NOT_IN_ORDER = 9,
  DISCRES_INVALID_DIMENSION = 10,
  DISCRES_DEGENERATE_MINOR = 11,
  DISCRES_INHOMOGENEOUS_INPUT = 12,
  DISCRES_VARIABLE_COLLISION = 13,
  DISCRES_NOT_A_SQUARE = 14,
  DISCRES_INFEASIBLE_SIZE = 15,
  DISCRES_DEGENERATE_TRIAL = 16,
  DISCRES_TIMEOUT = 17,
  DISCRES_INVALID_ARGUMENT = 18,
  DISCRES_IO = 19,
  DISCRES_NULL_ARGUMENT = 98,
  DISCRES_INTERNAL = 99
} discres_status;

typedef enum discres_verdict {
  DISCRES_PASS = 0,
  DISCRES_FAIL = 1,
  DISCRES_INCONCLUSIVE = 2
} discres_verdict;

typedef struct discres_poly discres_poly;
typedef struct discres_cache discres_cache;
typedef struct discres_report discres_report;

DISCRES_API const char* discres_version(void);
DISCRES_API const char* discres_status_name(discres_status status);
DISCRES_API const char* discres_last_error(void);
DISCRES_API void discres_string_free(char* s);

/* Wall-clock budget for subsequent calls on this thread; 0 disables it.
 * Calls that exceed it return DISCRES_TIMEOUT, except checks, which return a
 * partial report marked as timed out. */
DISCRES_API discres_status discres_set_timeout(double seconds);

/* Polynomials. `vars` is a comma-separated variable order, or NULL to take
 * variables in order of first appearance. */
DISCRES_API discres_status discres_poly_parse(const char* text, const char* vars, discres_poly** out);
DISCRES_API discres_status discres_poly_from_json(const char* json, discres_poly** out);
/* "generic:n,d", "buse-witness:d" or "remark". Builtins carry their form
 * variables. */
DISCRES_API discres_status discres_poly_builtin(const char* builtin, discres_poly** out);
DISCRES_API void discres_poly_free(discres_poly* p);
DISCRES_API discres_status discres_poly_to_string(const discres_poly* p, char** out);
DISCRES_API discres_status discres_poly_to_json(const discres_poly* p, char** out);
DISCRES_API discres_status discres_poly_variables(const discres_poly* p, char** out);
/* Form variables (the homogeneous x-variables), comma-separated. Empty when
 * unset. */
DISCRES_API discres_status discres_poly_form_variables(const discres_poly* p, char** out);
DISCRES_API discres_status discres_poly_set_form_variables(discres_poly* p, const char* vars);
DISCRES_API discres_status discres_poly_equal(const discres_poly* a, const discres_poly* b, int* out);

/* Operators. Results are new handles. */
DISCRES_API discres_status discres_sqrfree(const discres_poly* p, discres_poly** out);
DISCRES_API discres_status discres_gcd(const discres_poly* p, const discres_poly* q, discres_poly** out);
DISCRES_API discres_status discres_resultant(const discres_poly* p, const discres_poly* q, const char* var,
                                             discres_poly** out);
DISCRES_API discres_status discres_discriminant(const discres_poly* p, const char* var, discres_poly** out);
/* `order` is comma-separated; `cache` may be NULL. */
DISCRES_API discres_status discres_bproj(const discres_poly* p, const char* order, discres_cache* cache,
                                         discres_poly** out);
DISCRES_API discres_status discres_hproj(const discres_poly* p, const char* order, discres_cache* cache,
                                         discres_poly** out);
/* Multivariate discriminant over `vars`, or over the form variables of p
 * when `vars` is NULL. */
DISCRES_API discres_status discres_multi_discriminant(const discres_poly* p, const char* vars, discres_poly** out);
/* Macaulay resultant of `count` forms in `vars`. */
DISCRES_API discres_status discres_macaulay(const discres_poly* const* forms, size_t count, const char* vars,
                                            int allow_large, discres_poly** out);
DISCRES_API discres_status discres_taylor_delta(const discres_poly* p, int i, const char* var,
                                                const char* var_prime, discres_poly** out);

/* Projection cache. `dir` NULL or empty gives a memory-only cache. */
typedef struct discres_cache_stats {
  uint64_t hits;
  uint64_t misses;
  uint64_t verified;
  uint64_t disk_entries;
  uint64_t disk_bytes;
} discres_cache_stats;

DISCRES_API discres_status discres_cache_open(const char* dir, int verify, discres_cache** out);
DISCRES_API void discres_cache_free(discres_cache* c);
DISCRES_API discres_status discres_cache_clear(discres_cache* c);
DISCRES_API discres_status discres_cache_stats_get(const discres_cache* c, discres_cache_stats* out);

/* Verification checks: "main", "main2", "buse", "witness", "remark". */
typedef struct discres_check_options {
  int n;
  int d;
  uint64_t seed;
  int trials;
  long range;
  const char* kept_symbolic; /* comma-separated, or NULL */
  int conjecture_mode;
  int force;
  int fault_trial; /* -1 for none */
  discres_cache* cache;
} discres_check_options;

DISCRES_API void discres_check_options_init(discres_check_options* opts);
DISCRES_API discres_status discres_check(const char* name, const discres_check_options* opts,
                                         discres_report** out);
DISCRES_API void discres_report_free(discres_report* r);
DISCRES_API discres_verdict discres_report_verdict(const discres_report* r);
DISCRES_API int discres_report_timed_out(const discres_report* r);
DISCRES_API discres_status discres_report_to_json(const discres_report* r, int include_timing, char** out);
DISCRES_API discres_status discres_report_to_text(const discres_report* r, int include_timing, char** out);

#ifdef __cplusplus
}
#endif

#endif /* DISCRES_H */
