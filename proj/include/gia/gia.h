#ifndef GIA_GIA_H
#define GIA_GIA_H

#include <stddef.h>

#if defined(GIA_BUILDING_LIBRARY)
#define GIA_API __attribute__((visibility("default")))
#else
#define GIA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gia_status {
  GIA_OK = 0,
  GIA_ERR_INVALID_ARGUMENT = 1,
  GIA_ERR_PARSE = 2,
  GIA_ERR_CAP_EXCEEDED = 3,
  GIA_ERR_PRECONDITION = 4,
  GIA_ERR_INTERNAL = 5,
  /* a checking command ran to completion and found a mismatch */
  GIA_ERR_CHECK_FAILED = 6
} gia_status;

typedef struct gia_graph gia_graph;
typedef struct gia_poset gia_poset;
typedef struct gia_matrix gia_matrix;

/* Message for the last failing call on this thread; empty when none. */
GIA_API const char* gia_last_error(void);
/* Strings returned through char** out-parameters are owned by the caller. */
GIA_API void gia_string_free(char* s);
GIA_API const char* gia_version(void);

/* Worker count for parallel builds; 0 or less means one per hardware thread. */
GIA_API gia_status gia_set_parallelism(int width);
GIA_API int gia_parallelism(void);

/* graph6 or edge list "0-1,1-2" */
GIA_API gia_status gia_graph_parse(const char* text, gia_graph** out);
GIA_API void gia_graph_free(gia_graph* g);
GIA_API gia_status gia_graph_order(const gia_graph* g, int* out);
GIA_API gia_status gia_graph_edge_count(const gia_graph* g, int* out);
GIA_API gia_status gia_graph_graph6(const gia_graph* g, char** out);
/* graph6 of the canonical representative on its non-isolated vertices */
GIA_API gia_status gia_graph_canonical(const gia_graph* g, char** out);
GIA_API gia_status gia_graph_isomorphic(const gia_graph* a, const gia_graph* b, int* out);
/* number of subgraphs of host isomorphic to pattern, as a decimal string */
GIA_API gia_status gia_count_subgraphs(const gia_graph* pattern, const gia_graph* host, char** out);

/* all graphs on n vertices with at most max_degree edges (-1: no limit); cache_dir may be NULL */
GIA_API gia_status gia_poset_full(int n, int max_degree, const char* cache_dir, gia_poset** out);
GIA_API void gia_poset_free(gia_poset* p);
GIA_API gia_status gia_poset_size(const gia_poset* p, size_t* out);
GIA_API gia_status gia_poset_member(const gia_poset* p, size_t i, char** graph6);
GIA_API gia_status gia_poset_index_of(const gia_poset* p, const gia_graph* g, size_t* out);

GIA_API gia_status gia_mtransform(const gia_poset* p, gia_matrix** out);
/* entries k^(deg i - deg j) e_ij; k = -1 gives the inverse */
GIA_API gia_status gia_mtransform_power(const gia_poset* p, const gia_matrix* e, long k, gia_matrix** out);
GIA_API void gia_matrix_free(gia_matrix* m);
GIA_API gia_status gia_matrix_dims(const gia_matrix* m, size_t* rows, size_t* cols);
GIA_API gia_status gia_matrix_entry(const gia_matrix* m, size_t i, size_t j, char** out);
GIA_API gia_status gia_matrix_csv(const gia_matrix* m, char** out);

/* product of two invariants over n vertices; method is kocay, fleischmann, mtransform or all.
   Writes a JSON document. */
GIA_API gia_status gia_product(const gia_graph* a, const gia_graph* b, int n, const char* method, char** out);

/* Runs a named command on a JSON object request; format is json, csv or table.
   On GIA_ERR_CHECK_FAILED the report is still written to out. */
GIA_API gia_status gia_run(const char* command, const char* request_json, const char* format, char** out);

/* Acceptance criteria; criterion 0 runs all. Writes a JSON report. */
GIA_API gia_status gia_selftest(int criterion, const char* cache_dir, char** out);

#ifdef __cplusplus
}
#endif

#endif
