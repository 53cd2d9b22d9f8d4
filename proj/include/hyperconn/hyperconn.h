/* hyperconn: degree-sequence conditions for forcible edge-connectivity of
 * uniform hypergraphs, with exhaustive realization oracles.
 *
 * All handles are opaque. Functions returning hc_status report HC_OK (0) on
 * success; on failure the thread-local hc_last_error_message() describes the
 * problem. Strings returned through char** are owned by the caller and must
 * be released with hc_string_free(). Degree-sequence indices are 0-based in
 * this API (d_1 is value 0).
 */
#ifndef HYPERCONN_HYPERCONN_H
#define HYPERCONN_HYPERCONN_H

#include <stddef.h>
#include <stdint.h>

#if defined(HYPERCONN_BUILDING)
#define HC_API __attribute__((visibility("default")))
#else
#define HC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
  HC_OK = 0,
  HC_ERR_RANK_TOO_SMALL = 1,
  HC_ERR_VALUE_OUT_OF_RANGE = 2,
  HC_ERR_EMPTY_SEQUENCE = 3,
  HC_ERR_LENGTH_MISMATCH = 4,
  HC_ERR_DUPLICATE_EDGE = 5,
  HC_ERR_BAD_EDGE_SIZE = 6,
  HC_ERR_VERTEX_OUT_OF_RANGE = 7,
  HC_ERR_CONNECTIVITY_UNDEFINED = 8,
  HC_ERR_TOO_FEW_VERTICES = 9,
  HC_ERR_INSTANCE_TOO_LARGE = 10,
  HC_ERR_BUDGET_EXHAUSTED = 11,
  HC_ERR_NOT_HYPERGRAPHIC = 12,
  HC_ERR_INFEASIBLE_PROFILE = 13,
  HC_ERR_SPEC_INVALID = 14,
  HC_ERR_VERDICT_MISMATCH = 15,
  HC_ERR_DELTA_MISMATCH = 16,
  HC_ERR_INVALID_ARGUMENT = 17,
  HC_ERR_PARSE = 18,
  HC_ERR_IO = 19,
  HC_ERR_INTERNAL = 100
} hc_status;

typedef enum hc_mode { HC_MODE_SOUND = 0, HC_MODE_PAPER_LITERAL = 1 } hc_mode;

typedef enum hc_property { HC_PROPERTY_K_EDGE = 0, HC_PROPERTY_SUPER = 1, HC_PROPERTY_MAXIMALLY = 2 } hc_property;

typedef struct hc_sequence hc_sequence;
typedef struct hc_hypergraph hc_hypergraph;
typedef struct hc_verdict hc_verdict;
typedef struct hc_profile_list hc_profile_list;

HC_API const char* hc_version(void);
HC_API const char* hc_status_string(hc_status status);
HC_API const char* hc_last_error_message(void);
HC_API void hc_string_free(char* s);

/* Default node budget of the realization oracles. */
HC_API uint64_t hc_default_budget(void);

/* ---- degree sequences ---- */

HC_API hc_status hc_sequence_create(const int64_t* values, size_t n, int r, hc_sequence** out);
/* Comma- or whitespace-separated integers. */
HC_API hc_status hc_sequence_parse(const char* text, int r, hc_sequence** out);
HC_API void hc_sequence_free(hc_sequence* d);
HC_API size_t hc_sequence_length(const hc_sequence* d);
HC_API int hc_sequence_rank(const hc_sequence* d);
/* Sorted value at 0-based position i; -1 when out of range. */
HC_API int hc_sequence_value(const hc_sequence* d, size_t i);
HC_API hc_status hc_sequence_to_text(const hc_sequence* d, char** out);
HC_API hc_status hc_sequence_majorizes(const hc_sequence* dprime, const hc_sequence* d, int* out);
/* budget 0 selects the default. */
HC_API hc_status hc_sequence_is_hypergraphic(const hc_sequence* d, uint64_t budget, int* out);

/* ---- hypergraphs ---- */

/* `vertices` holds edge_count * r vertex indices, r per edge. */
HC_API hc_status hc_hypergraph_create(int n, int r, const int* vertices, size_t edge_count, hc_hypergraph** out);
HC_API hc_status hc_hypergraph_parse(const char* text, hc_hypergraph** out);
HC_API hc_status hc_hypergraph_read_file(const char* path, hc_hypergraph** out);
HC_API hc_status hc_hypergraph_write_file(const hc_hypergraph* h, const char* path);
HC_API hc_status hc_hypergraph_to_text(const hc_hypergraph* h, char** out);
HC_API hc_status hc_hypergraph_to_json(const hc_hypergraph* h, char** out);
HC_API void hc_hypergraph_free(hc_hypergraph* h);
HC_API int hc_hypergraph_vertex_count(const hc_hypergraph* h);
HC_API int hc_hypergraph_rank(const hc_hypergraph* h);
HC_API size_t hc_hypergraph_edge_count(const hc_hypergraph* h);
HC_API hc_status hc_hypergraph_degree_sequence(const hc_hypergraph* h, hc_sequence** out);

HC_API hc_status hc_is_connected(const hc_hypergraph* h, int* out);
HC_API hc_status hc_edge_connectivity(const hc_hypergraph* h, int* out);
HC_API hc_status hc_edge_connectivity_bruteforce(const hc_hypergraph* h, int* out);
HC_API hc_status hc_is_super_edge_connected(const hc_hypergraph* h, int* out);

/* ---- condition checks ---- */

/* theorem: "2.1" "2.2" "2.3" "2.4" "2.5" "2.8" "2.9" "3.1" "3.2" "3.3" "3.4"
 * "4.2" "4.3" "4.4". k is read by 2.1, 2.3, 2.9 and 4.2 only; mode by 2.3,
 * 2.4 and 3.2 only. */
HC_API hc_status hc_check(const hc_sequence* d, const char* theorem, int k, hc_mode mode, hc_verdict** out);
HC_API void hc_verdict_free(hc_verdict* v);
HC_API int hc_verdict_satisfied(const hc_verdict* v);
/* Condition label such as "T23-4"; NULL when satisfied. Owned by v. */
HC_API const char* hc_verdict_condition(const hc_verdict* v);
/* Side size of the violation; 0 when satisfied or not partition-based. */
HC_API int hc_verdict_j(const hc_verdict* v);
/* Single-line JSON record. */
HC_API hc_status hc_verdict_to_json(const hc_verdict* v, char** out);
/* One summary line followed by indented clause lines. */
HC_API hc_status hc_verdict_to_text(const hc_verdict* v, char** out);

/* ---- oracles and constructions ---- */

/* k is read for HC_PROPERTY_K_EDGE only. budget 0 selects the default.
 * *counterexample is set (caller frees) when the property fails, else NULL. */
HC_API hc_status hc_oracle(const hc_sequence* d, hc_property property, int k, uint64_t budget, int workers,
                           int* holds, hc_hypergraph** counterexample);

/* t and s hold c entries each. */
HC_API hc_status hc_build_extremal(int n, int j, int r, int c, const int* t, const int* s, hc_hypergraph** out);

/* v must be a violation of check "2.3" on (d, k). */
HC_API hc_status hc_strongest_witness(const hc_sequence* d, int k, const hc_verdict* v, hc_sequence** dprime,
                                      hc_hypergraph** h);

/* ---- thresholds and profiles ---- */

HC_API hc_status hc_compute_g(int k, int r, int* out);
/* *found is 0 when no j qualifies. */
HC_API hc_status hc_compute_jstar(int n, int r, int c, int* found, int* out);
HC_API hc_status hc_compute_j0(int n, int z, int r, int* found, int* out);
/* Decimal string of C(n-j-1, r-1) - C(j-1, r-1). */
HC_API hc_status hc_delta_gap(int n, int j, int r, char** out);

HC_API hc_status hc_profiles_enumerate(int c, int r, int j, int n, hc_profile_list** out);
HC_API void hc_profile_list_free(hc_profile_list* list);
HC_API size_t hc_profile_list_size(const hc_profile_list* list);
/* Copies the c entries of t and s of profile i. */
HC_API hc_status hc_profile_list_get(const hc_profile_list* list, size_t i, int* t, int* s);
HC_API hc_status hc_profile_list_to_json(const hc_profile_list* list, char** out);

#ifdef __cplusplus
}
#endif

#endif
