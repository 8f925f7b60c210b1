/*
 * C interface to the feq library: filter-equivariant list functions,
 * finite-scope symmetry checks, NFE enumeration, permutation families and
 * amalgamation-based extrapolation.
 *
 * Conventions:
 *   - Every fallible call returns feq_status; FEQ_OK is zero.
 *   - On failure, feq_last_error() returns a message for the calling thread,
 *     valid until that thread's next feq_* call.
 *   - Objects and buffers handed out by the library are released with the
 *     matching feq_*_free function. Passing NULL to any free is a no-op.
 *   - Functions, lists and collections cross the boundary as JSON text in the
 *     schemas documented in README.md, or as uint32_t arrays.
 */
#ifndef FEQ_H
#define FEQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(FEQ_BUILDING_LIBRARY)
#define FEQ_API __declspec(dllexport)
#else
#define FEQ_API __declspec(dllimport)
#endif
#else
#define FEQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum feq_status {
  FEQ_OK = 0,
  FEQ_ERR_INVALID_ARGUMENT = 1,
  FEQ_ERR_PARSE = 2,
  FEQ_ERR_EMPTY_LIST = 3,
  FEQ_ERR_OUT_OF_SCOPE = 4,
  FEQ_ERR_INVALID_SCOPE = 5,
  FEQ_ERR_INVALID_BLOCK = 6,
  FEQ_ERR_INVALID_INCLUSION = 7,
  FEQ_ERR_INVALID_PERMUTATION = 8,
  FEQ_ERR_NOT_AN_NFE = 9,
  FEQ_ERR_UNIVERSE_TOO_SMALL = 10,
  /* amalgamation outcomes */
  FEQ_ERR_NO_UNIQUE_HEAD = 11,
  FEQ_ERR_INCONSISTENT = 12,
  FEQ_ERR_MISSING_SUBLIST = 13,
  FEQ_ERR_INVALID_EXAMPLE = 14,
  FEQ_ERR_INTERNAL = 99
} feq_status;

typedef enum feq_law {
  FEQ_LAW_MAP = 0,
  FEQ_LAW_FILTER = 1,
  FEQ_LAW_TAIL = 2,
  FEQ_LAW_NO_NEW_VALUES = 3,
  FEQ_LAW_NFE_COUNTS = 4,
  FEQ_LAW_MULTISET_PROFILE = 5
} feq_law;

typedef enum feq_verdict {
  FEQ_VERDICT_PASS = 0,
  FEQ_VERDICT_FAIL = 1,
  FEQ_VERDICT_PRECONDITION_FAILED = 2
} feq_verdict;

typedef struct feq_scope {
  uint32_t alphabet_size;
  uint32_t max_len;
} feq_scope;

/* Library-owned list; release with feq_list_free. */
typedef struct feq_list {
  uint32_t* items;
  size_t len;
} feq_list;

typedef struct feq_function feq_function;
typedef struct feq_report feq_report;

FEQ_API const char* feq_version(void);
FEQ_API const char* feq_last_error(void);
FEQ_API const char* feq_status_name(feq_status status);

FEQ_API void feq_list_free(feq_list* list);
FEQ_API void feq_string_free(char* str);

/* Parses "[1,2,3]" or "1,2,3". */
FEQ_API feq_status feq_list_parse(const char* text, feq_list* out);

/* ---- list functions ---- */

FEQ_API feq_status feq_function_parse(const char* json, feq_function** out);
FEQ_API feq_status feq_function_builtin(const char* name, feq_function** out);
/* outer after inner */
FEQ_API feq_status feq_function_compose(const feq_function* outer, const feq_function* inner,
                                        feq_function** out);
FEQ_API feq_status feq_function_concat(const feq_function* left, const feq_function* right,
                                       feq_function** out);
FEQ_API void feq_function_free(feq_function* fn);

FEQ_API feq_status feq_function_to_json(const feq_function* fn, char** out);
FEQ_API feq_status feq_function_describe(const feq_function* fn, char** out);
FEQ_API feq_status feq_function_apply(const feq_function* fn, const uint32_t* xs, size_t len,
                                      feq_list* out);
FEQ_API feq_status feq_functions_equal(const feq_function* f, const feq_function* g,
                                       feq_scope scope, int* equal);

/* ---- finite-scope checks ---- */

FEQ_API feq_status feq_check(const feq_function* fn, feq_law law, feq_scope scope,
                             feq_report** out);
FEQ_API feq_status feq_law_parse(const char* name, feq_law* out);
FEQ_API feq_verdict feq_report_verdict(const feq_report* report);
FEQ_API size_t feq_report_witness_count(const feq_report* report);
FEQ_API feq_status feq_report_to_json(const feq_report* report, char** out);
FEQ_API feq_status feq_report_to_text(const feq_report* report, char** out);
FEQ_API void feq_report_free(feq_report* report);

/* ---- NFE terms ---- */

FEQ_API feq_status feq_nfe_count(uint32_t k, uint64_t* out);
/* JSON array of {"blocks":[...]} in enumeration order. */
FEQ_API feq_status feq_nfe_enumerate(uint32_t k, char** out);
/* Nested constructor text, e.g. "P 2 (N 1 Z)", of an {"blocks":...} term. */
FEQ_API feq_status feq_nfe_constructors(const char* term_json, char** out);

/* ---- permutation families ---- */

/* {"k":k,"members":[[...],...]} */
FEQ_API feq_status feq_family_of_function(const feq_function* fn, uint32_t k, uint32_t bound,
                                          char** out);
/* Writes {"verdict":...,"violations":[...]}; *passed is 1 when coherent. */
FEQ_API feq_status feq_check_cone(const char* family_json, int* passed, char** report_json);

/* ---- amalgamation ---- */

/* Collection JSON for x -> filter (/= x) xs. */
FEQ_API feq_status feq_decompose(const uint32_t* xs, size_t len, char** out);
FEQ_API feq_status feq_amal(const char* collection_json, feq_list* out);
/* Reconstructs f xs from f's outputs on the two-value sublists of xs. */
FEQ_API feq_status feq_extrapolate_fe(const char* table_json, const uint32_t* xs, size_t len,
                                      feq_list* out);
/* Reconstructs f xs for an NFE f from f [x, y] = example_out. */
FEQ_API feq_status feq_extrapolate_nfe(const uint32_t* example_in, size_t in_len,
                                       const uint32_t* example_out, size_t out_len,
                                       const uint32_t* xs, size_t len, feq_list* out);
/* As feq_extrapolate_nfe, with the example given as JSON
 * {"input":[x,y],"output":[...]} (optionally wrapped in a one-element array). */
FEQ_API feq_status feq_extrapolate_nfe_json(const char* example_json, const uint32_t* xs,
                                            size_t len, feq_list* out);
/* Sublist-output table of fn for input xs: [{"keep":[x,y],"output":[...]}]. */
FEQ_API feq_status feq_sublist_outputs(const feq_function* fn, const uint32_t* xs, size_t len,
                                       char** out);

#ifdef __cplusplus
}
#endif

#endif /* FEQ_H */
