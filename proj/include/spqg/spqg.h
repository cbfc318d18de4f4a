#ifndef SPQG_H
#define SPQG_H

#include <stddef.h>
#include <stdint.h>

#if defined(SPQG_BUILDING_LIBRARY)
#define SPQG_API __attribute__((visibility("default")))
#else
#define SPQG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Nonzero values match the library's error categories. */
typedef enum spqg_status {
  SPQG_OK = 0,
  SPQG_ERR_OVERLAP = 1,
  SPQG_ERR_COVERAGE = 2,
  SPQG_ERR_RANGE = 3,
  SPQG_ERR_DIVISIBILITY = 4,
  SPQG_ERR_LEVEL_MISMATCH = 5,
  SPQG_ERR_INTERFACE_MISMATCH = 6,
  SPQG_ERR_EMPTY_ROW = 7,
  SPQG_ERR_SHAPE_MISMATCH = 8,
  SPQG_ERR_NOT_APPLICABLE = 9,
  SPQG_ERR_BOUND_EXCEEDED = 10,
  SPQG_ERR_GRADING = 11,
  SPQG_ERR_SIZE = 12,
  SPQG_ERR_SHAPE = 13,
  SPQG_ERR_INCOMPLETE_MODEL = 14,
  SPQG_ERR_ORACLE_MISMATCH = 15,
  SPQG_ERR_PRECONDITION = 16,
  SPQG_ERR_PARSE = 17,
  SPQG_ERR_IO = 18,
  SPQG_ERR_INTERNAL = 19,
  SPQG_ERR_INVALID_ARGUMENT = 20
} spqg_status;

typedef struct spqg_partition spqg_partition;
typedef struct spqg_closure spqg_closure;

typedef struct spqg_bounds {
  uint32_t max_cols;
  uint64_t max_set;
  uint32_t max_rounds;
  uint64_t max_ops; /* 0: unlimited */
} spqg_bounds;

/* Message of the last failed call on this thread; never NULL. */
SPQG_API const char* spqg_last_error(void);
SPQG_API const char* spqg_status_name(spqg_status status);
/* Frees strings returned through char** out-parameters. */
SPQG_API void spqg_string_free(char* s);

/* 0 restores the default (hardware concurrency). */
SPQG_API void spqg_set_threads(unsigned threads);
SPQG_API void spqg_set_max_cells(uint64_t cells);

/* Partitions. Input is JSON, the text form P(k,l;m){...}, or a catalog name. */
SPQG_API spqg_status spqg_partition_parse(const char* input, spqg_partition** out);
SPQG_API void spqg_partition_free(spqg_partition* p);
SPQG_API void spqg_partition_shape(const spqg_partition* p, uint32_t* k, uint32_t* l, uint32_t* m);
SPQG_API int spqg_partition_equal(const spqg_partition* a, const spqg_partition* b);
SPQG_API spqg_status spqg_partition_to_json(const spqg_partition* p, char** out);
SPQG_API spqg_status spqg_partition_to_text(const spqg_partition* p, char** out);
SPQG_API spqg_status spqg_partition_render(const spqg_partition* p, char** out);
/* Newline-separated catalog names. */
SPQG_API spqg_status spqg_catalog_names(char** out);

SPQG_API spqg_status spqg_tensor(const spqg_partition* a, const spqg_partition* b, spqg_partition** out);
/* upper in (k,r), lower in (r,l); loops may be NULL. */
SPQG_API spqg_status spqg_compose(const spqg_partition* upper, const spqg_partition* lower, spqg_partition** out,
                                  uint32_t* loops);
SPQG_API spqg_status spqg_involution(const spqg_partition* p, spqg_partition** out);
/* corner: left-upper-down, left-lower-up, right-upper-down, right-lower-up */
SPQG_API spqg_status spqg_rotate(const spqg_partition* p, const char* corner, spqg_partition** out);
SPQG_API spqg_status spqg_amplify(const spqg_partition* p, uint32_t m, spqg_partition** out);
SPQG_API spqg_status spqg_stack(const spqg_partition* const* parts, size_t count, spqg_partition** out);
SPQG_API spqg_status spqg_flatten(const spqg_partition* p, spqg_partition** out);
SPQG_API spqg_status spqg_unflatten(const spqg_partition* p, uint32_t m, spqg_partition** out);

/* classes: "all", "table", or comma-separated class names. JSON object
   {"partition": text, "classes": {name: true | false | null}}. */
SPQG_API spqg_status spqg_classify(const spqg_partition* p, const char* classes, char** json_out);

/* Closures. */
SPQG_API void spqg_bounds_default(spqg_bounds* b);
SPQG_API spqg_status spqg_closure_generate(const spqg_partition* const* gens, size_t count, uint32_t m,
                                           const spqg_bounds* bounds, spqg_closure** out);
SPQG_API void spqg_closure_free(spqg_closure* c);
SPQG_API size_t spqg_closure_size(const spqg_closure* c);
SPQG_API int spqg_closure_saturated(const spqg_closure* c);
/* Copy of member i in generation order. */
SPQG_API spqg_status spqg_closure_member_at(const spqg_closure* c, size_t i, spqg_partition** out);
/* Metadata: m, size, generators, bounds, saturated, stop_reason, rounds, ops. */
SPQG_API spqg_status spqg_closure_info(const spqg_closure* c, char** json_out);
/* Writes path (JSONL) and path.meta.json. */
SPQG_API spqg_status spqg_closure_write(const spqg_closure* c, const char* path);
SPQG_API spqg_status spqg_closure_read(const char* path, spqg_closure** out);
/* {"verdict": ..., "trace": [...]} or {"verdict": "SeparatedBy", "separator": ...} */
SPQG_API spqg_status spqg_closure_member(const spqg_closure* c, const spqg_partition* target, const char* classes,
                                         char** json_out);
SPQG_API spqg_status spqg_kronecker(const spqg_closure* a, const spqg_closure* b, spqg_closure** out);
SPQG_API spqg_status spqg_amalgamated(const spqg_closure* a, const spqg_closure* b, const spqg_partition* const* extra,
                                      size_t count, const spqg_bounds* bounds, spqg_closure** out);

/* Linear maps. dims: "n1,n2,...". */
SPQG_API spqg_status spqg_smap(const spqg_partition* p, const char* dims, char** matrix_market);
SPQG_API spqg_status spqg_hom_dim(const spqg_partition* const* parts, size_t count, const char* dims, size_t* out);

/* Relations. */
SPQG_API spqg_status spqg_relations_emit(const spqg_partition* p, const char* dims, int as_json, int skip_tautologies,
                                         char** out);
SPQG_API spqg_status spqg_relations_check(const spqg_partition* p, const char* model_json, char** json_out);
SPQG_API spqg_status spqg_ring(const char* model_json, char** json_out);

/* Acceptance suite. dims: relation dims "n,n"; criteria: NULL or "1,3,9". */
SPQG_API spqg_status spqg_verify_suite(const char* dims, const char* criteria, int as_json, char** report,
                                       int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
