/*
 * instcone -- framed instanton homology of Dehn surgeries from bent-complex
 * knot data.
 *
 * C interface to the shared library. Handles are opaque; every function
 * returns a status code, with a thread-local message available through
 * instcone_last_error(). Strings returned through char** are heap-allocated
 * and must be released with instcone_string_free().
 */

#ifndef INSTCONE_H
#define INSTCONE_H

#include <stddef.h>

#if defined(_WIN32)
#define INSTCONE_API __declspec(dllexport)
#else
#define INSTCONE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct instcone_knot instcone_knot;

typedef enum instcone_status {
    INSTCONE_OK = 0,
    INSTCONE_ERR_IO = 1,
    INSTCONE_ERR_PARSE = 2,
    INSTCONE_ERR_SCHEMA = 3,
    INSTCONE_ERR_VALIDATION = 4,
    INSTCONE_ERR_PRECONDITION = 5,
    INSTCONE_ERR_TAU_ZERO = 6,
    INSTCONE_ERR_CONVENTION = 7,
    INSTCONE_ERR_UNSTABLE = 8,
    INSTCONE_ERR_INTERNAL = 9
} instcone_status;

/* Message for the most recent failure on this thread ("" when none). */
INSTCONE_API const char* instcone_last_error(void);

INSTCONE_API void instcone_string_free(char* s);

/* spec is a file path, "catalog:NAME", or "catalog:random-SEED". The knot is
 * validated on open. */
INSTCONE_API instcone_status instcone_knot_open(const char* spec, instcone_knot** out);
INSTCONE_API instcone_status instcone_knot_from_json(const char* json_text,
                                                     instcone_knot** out);
INSTCONE_API void instcone_knot_free(instcone_knot* knot);

INSTCONE_API const char* instcone_knot_name(const instcone_knot* knot);
INSTCONE_API instcone_status instcone_knot_to_json(const instcone_knot* knot, char** out_json);
INSTCONE_API instcone_status instcone_knot_save(const instcone_knot* knot, const char* path);

INSTCONE_API instcone_status instcone_mirror(const instcone_knot* knot, instcone_knot** out);
INSTCONE_API instcone_status instcone_reverse(const instcone_knot* knot, instcone_knot** out);

/* Validation report for a spec; succeeds (with "valid": false in the JSON)
 * even when invariants fail, as long as the file parses. */
INSTCONE_API instcone_status instcone_validate_json(const char* spec, char** out_json);

/* {"name", "tau", "nu", "nu_sharp", "r0"}; the last two are null when
 * tau = 0. */
INSTCONE_API instcone_status instcone_invariants_json(const instcone_knot* knot,
                                                      char** out_json);

/* dim I#(S^3_n(K)) for n != 0. */
INSTCONE_API instcone_status instcone_surgery_dim(const instcone_knot* knot, long n,
                                                  size_t* out_dim);
INSTCONE_API instcone_status instcone_surgery_range_json(const instcone_knot* knot, long from,
                                                         long to, char** out_json);

/* Per-grading 0-surgery; "indeterminate": true marks entries the input does
 * not pin down. */
INSTCONE_API instcone_status instcone_zero_surgery_json(const instcone_knot* knot,
                                                        char** out_json);

/* Dual-knot homology after -m-framed filling. grading is an exact value
 * like "3" or "-5/2"; pass NULL for the whole table. */
INSTCONE_API instcone_status instcone_dual_json(const instcone_knot* knot, long m,
                                                const char* grading, char** out_json);

/* dim H(A(s)) for s in [-g, g]. */
INSTCONE_API instcone_status instcone_large_table_json(const instcone_knot* knot,
                                                       char** out_json);

/* Property suite for one knot under the given seed. */
INSTCONE_API instcone_status instcone_check_suite_json(const instcone_knot* knot,
                                                       unsigned long long seed,
                                                       char** out_json);

INSTCONE_API instcone_status instcone_catalog_json(char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* INSTCONE_H */
