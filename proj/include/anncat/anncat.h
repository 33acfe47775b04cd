/* C interface to the anncat library.
 *
 * Handles are opaque and owned by the caller; free each with its _free
 * function. Strings returned through char** are heap copies released with
 * anncat_string_free. Every function returning anncat_status leaves a
 * message for anncat_last_error on failure (per thread). */

#ifndef ANNCAT_ANNCAT_H
#define ANNCAT_ANNCAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ANNCAT_API __declspec(dllexport)
#else
#define ANNCAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct anncat_instance anncat_instance;
typedef struct anncat_suite_result anncat_suite_result;
typedef struct anncat_center anncat_center;
typedef struct anncat_report anncat_report;

typedef enum anncat_status {
  ANNCAT_OK = 0,
  ANNCAT_ERR_MALFORMED_SPEC = 1,
  ANNCAT_ERR_AXIOM_VIOLATION = 2,
  ANNCAT_ERR_OBJECT_MISMATCH = 3,
  ANNCAT_ERR_ARITY_MISMATCH = 4,
  ANNCAT_ERR_BRAIDING_ABSENT = 5,
  ANNCAT_ERR_NOT_SYMMETRIC = 6,
  ANNCAT_ERR_INVALID_BASE = 7,
  ANNCAT_ERR_NOT_IN_CENTER = 8,
  ANNCAT_ERR_CLOSURE_VIOLATION = 9,
  ANNCAT_ERR_PARSE = 10,
  ANNCAT_ERR_SHAPE = 11,
  ANNCAT_ERR_BUDGET_EXCEEDED = 12,
  ANNCAT_ERR_IO = 13,
  ANNCAT_ERR_INVALID_ARGUMENT = 14,
  ANNCAT_ERR_INTERNAL = 15
} anncat_status;

typedef enum anncat_format { ANNCAT_FORMAT_TEXT = 0, ANNCAT_FORMAT_MACHINE = 1 } anncat_format;

typedef struct anncat_diagram_info {
  const char* name; /* static storage */
  int passed;
  uint64_t tuples_checked;
  uint64_t mismatches;
  size_t witness_count;
} anncat_diagram_info;

typedef struct anncat_search_hit {
  uint64_t candidate;
  const uint32_t* parameters;
  size_t parameter_count;
  const char* document; /* canonical instance document */
  const char* line;     /* one-line JSON record: candidate, parameters, instance */
} anncat_search_hit;

typedef struct anncat_search_summary {
  size_t generator_count;
  uint64_t candidates;
  uint64_t well_defined;
  uint64_t survivors;
} anncat_search_summary;

/* Return nonzero to stop the search early. */
typedef int (*anncat_search_callback)(const anncat_search_hit* hit, void* user);

ANNCAT_API const char* anncat_version(void);
ANNCAT_API const char* anncat_status_name(anncat_status status);
ANNCAT_API const char* anncat_last_error(void);
ANNCAT_API void anncat_string_free(char* s);

ANNCAT_API anncat_status anncat_instance_load(const char* path, anncat_instance** out);
ANNCAT_API anncat_status anncat_instance_parse(const char* text, size_t length, anncat_instance** out);
ANNCAT_API void anncat_instance_free(anncat_instance* instance);
ANNCAT_API anncat_status anncat_instance_serialize(const anncat_instance* instance, char** out);
ANNCAT_API anncat_status anncat_instance_digest(const anncat_instance* instance, char** out);
ANNCAT_API int anncat_instance_has_braiding(const anncat_instance* instance);
ANNCAT_API size_t anncat_instance_ring_size(const anncat_instance* instance);

/* suite: "full", "braided", "core", "laplaza", "ringlike" or an upper-case
 * suite name; NULL selects braided when the instance has a braiding and
 * full otherwise. witness_cap 0 is treated as 1; threads 0 as 1. */
ANNCAT_API anncat_status anncat_check_suite(const anncat_instance* instance, const char* suite, size_t witness_cap,
                                            unsigned threads, anncat_suite_result** out);
ANNCAT_API void anncat_suite_result_free(anncat_suite_result* result);
ANNCAT_API const char* anncat_suite_result_name(const anncat_suite_result* result);
ANNCAT_API int anncat_suite_result_passed(const anncat_suite_result* result);
ANNCAT_API size_t anncat_suite_result_diagram_count(const anncat_suite_result* result);
ANNCAT_API anncat_status anncat_suite_result_diagram(const anncat_suite_result* result, size_t index,
                                                     anncat_diagram_info* out);
/* Copies up to capacity object indices; *arity receives the tuple length. */
ANNCAT_API anncat_status anncat_suite_result_witness(const anncat_suite_result* result, size_t diagram,
                                                     size_t witness, uint32_t* objects, size_t capacity,
                                                     size_t* arity, uint32_t* left, uint32_t* right);
ANNCAT_API anncat_status anncat_suite_result_render(const anncat_suite_result* result, anncat_format format,
                                                    char** out);

/* Fails with ANNCAT_ERR_INVALID_BASE when the instance fails FULL_ANN. */
ANNCAT_API anncat_status anncat_center_build(const anncat_instance* instance, anncat_center** out);
ANNCAT_API void anncat_center_free(anncat_center* center);
ANNCAT_API size_t anncat_center_size(const anncat_center* center);
/* u receives ring_size entries when capacity allows; *ring_size is always set. */
ANNCAT_API anncat_status anncat_center_object(const anncat_center* center, size_t index, uint32_t* a, uint32_t* u,
                                              size_t capacity, size_t* ring_size);
/* One line per object: "<index> a=<a> u=[...]". */
ANNCAT_API anncat_status anncat_center_render(const anncat_center* center, char** out);
ANNCAT_API anncat_status anncat_center_verify(const anncat_center* center, unsigned threads,
                                              anncat_suite_result** out);
/* *found is 0 when the braiding is a symmetry; otherwise *p, *q are indices. */
ANNCAT_API anncat_status anncat_center_find_nonsymmetric(const anncat_center* center, int* found, size_t* p,
                                                         size_t* q);

/* ring_spec: cyclic(n), dual(n), upper(n), product(...); module_spec: regular. */
ANNCAT_API anncat_status anncat_search(const char* ring_spec, const char* module_spec, uint64_t budget,
                                       anncat_search_callback callback, void* user, anncat_search_summary* summary);

ANNCAT_API anncat_status anncat_report_build(const anncat_instance* instance, unsigned threads,
                                             anncat_report** out);
ANNCAT_API void anncat_report_free(anncat_report* report);
ANNCAT_API int anncat_report_exit_status(const anncat_report* report);
ANNCAT_API anncat_status anncat_report_render(const anncat_report* report, anncat_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ANNCAT_ANNCAT_H */
