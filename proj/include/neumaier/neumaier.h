/* C interface to the Neumaier Cayley graph library.
 *
 * Handles are opaque and owned by the caller. Every call returning nm_status
 * sets a thread-local message readable through nm_last_error() on failure.
 * Reports are UTF-8 JSON strings released with nm_string_free(). */
#ifndef NEUMAIER_NEUMAIER_H
#define NEUMAIER_NEUMAIER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(NM_BUILDING_LIBRARY)
#    define NM_API __declspec(dllexport)
#  else
#    define NM_API __declspec(dllimport)
#  endif
#else
#  define NM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nm_status {
  NM_OK = 0,
  NM_ERR_INVALID_ARGUMENT = 1,
  NM_ERR_PARSE = 2,
  NM_ERR_GROUP_TOO_LARGE = 3,
  NM_ERR_UNBOUND_NAME = 4,
  NM_ERR_IDENTITY_IN_SET = 5,
  NM_ERR_NOT_INVERSE_CLOSED = 6,
  NM_ERR_NOT_A_SUBGROUP = 7,
  NM_ERR_NOT_A_CLIQUE = 8,
  NM_ERR_GROUP_MISMATCH = 9,
  NM_ERR_NOT_CONNECTED = 10,
  NM_ERR_NON_SQUARE_DISCRIMINANT = 11,
  NM_ERR_SEARCH_TOO_LARGE = 12,
  NM_ERR_UNKNOWN_ENTRY = 13,
  NM_ERR_INTERNAL = 99
} nm_status;

typedef struct nm_group nm_group;
typedef struct nm_connection_set nm_connection_set;

typedef struct nm_params {
  int64_t n, k, lambda, a, c;
  int has_mu;
  int64_t mu;
} nm_params;

typedef struct nm_search_options {
  int all;           /* nonzero: every match; zero: the first in enumeration order */
  int anchor_clique; /* force a subgroup of order c into S */
  unsigned threads;  /* 0 or 1 runs single-threaded */
  uint64_t cap;      /* refuse searches with more candidates */
} nm_search_options;

NM_API const char* nm_version(void);
NM_API const char* nm_last_error(void);
NM_API const char* nm_status_name(nm_status status);
NM_API void nm_string_free(char* s);

/* Groups. See the README for the JSON description format. */
NM_API nm_status nm_group_from_json(const char* json, nm_group** out);
NM_API nm_status nm_group_cyclic(size_t n, nm_group** out);
NM_API nm_status nm_group_dihedral(size_t m, nm_group** out);
NM_API void nm_group_free(nm_group* g);
NM_API size_t nm_group_order(const nm_group* g);
NM_API int nm_group_is_abelian(const nm_group* g);
NM_API nm_status nm_group_resolve(const nm_group* g, const char* word, uint32_t* out);
/* Shortest generator word for an element; free with nm_string_free. */
NM_API nm_status nm_group_label(const nm_group* g, uint32_t element, char** out);

/* Connection sets keep their group alive. */
NM_API nm_status nm_set_from_json(const nm_group* g, const char* json, nm_connection_set** out);
NM_API nm_status nm_set_from_words(const nm_group* g, const char* const* words, size_t count, nm_connection_set** out);
NM_API nm_status nm_set_from_indices(const nm_group* g, const uint32_t* elements, size_t count,
                                     nm_connection_set** out);
NM_API void nm_set_free(nm_connection_set* s);
NM_API size_t nm_set_size(const nm_connection_set* s);

/* Classification of Cay(G,S). *neumaier receives 1 for a Neumaier graph. */
NM_API nm_status nm_check(const nm_connection_set* s, int* neumaier, char** report_json);
/* Group-ring identities; clique_words may be NULL to use the first regular clique. */
NM_API nm_status nm_algebra_report(const nm_connection_set* s, const char* const* clique_words, size_t clique_count,
                                   char** report_json);

NM_API nm_status nm_vertex_bound(int64_t k, int64_t* out);
/* max_n <= 0 means no limit beyond the vertex bound. */
NM_API nm_status nm_feasible(int64_t k, int64_t max_n, char** report_json);

NM_API void nm_search_options_default(nm_search_options* options);
/* *found receives the number of matching connection sets. */
NM_API nm_status nm_search(const nm_group* g, const nm_params* target, const nm_search_options* options,
                           size_t* found, char** report_json);

NM_API nm_status nm_catalog_list(char** report_json);
/* *pass receives 1 when every check of the entry passes. */
NM_API nm_status nm_catalog_verify(const char* name, int* pass, char** report_json);
/* *failures receives the number of failing entries. threads = 0 uses all cores. */
NM_API nm_status nm_catalog_verify_all(unsigned threads, size_t* failures, char** report_json);

#ifdef __cplusplus
}
#endif

#endif
