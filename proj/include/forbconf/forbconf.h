#ifndef FORBCONF_H
#define FORBCONF_H

/* C interface to the forbconf library. Every handle is opaque and owned by the
 * caller once returned; release it with the matching _free function. Strings
 * returned through char** are heap copies released with fc_string_free.
 *
 * Functions returning fc_status leave their outputs untouched on failure and
 * record a message readable through fc_last_error() on the calling thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FC_API __declspec(dllexport)
#else
#define FC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fc_status {
  FC_OK = 0,
  FC_INVALID_ARGUMENT = 1,
  FC_OUT_OF_RANGE = 2,
  FC_PARSE_ERROR = 3,
  FC_LIMIT_EXCEEDED = 4,
  FC_PRECONDITION = 5,
  FC_INTERNAL = 6,
  FC_NULL_ARGUMENT = 7
} fc_status;

typedef enum fc_search_status {
  FC_SEARCH_EXACT = 0,
  FC_SEARCH_LOWER_BOUND_ONLY = 1,
  FC_SEARCH_TIMEOUT = 2
} fc_search_status;

typedef enum fc_q9_outcome {
  FC_Q9_PARTITION = 0,
  FC_Q9_REFUTED = 1,
  FC_Q9_UNCLASSIFIED = 2
} fc_q9_outcome;

typedef struct fc_matrix fc_matrix;
typedef struct fc_family fc_family;
typedef struct fc_search_result fc_search_result;

FC_API const char* fc_last_error(void);
FC_API const char* fc_status_name(fc_status status);
FC_API void fc_string_free(char* s);
/* Grammar accepted by fc_matrix_from_spec and fc_family_parse. */
FC_API const char* fc_spec_grammar(void);

/* Matrices */
FC_API fc_status fc_matrix_parse(const char* text, fc_matrix** out);
FC_API fc_status fc_matrix_from_spec(const char* spec, fc_matrix** out);
FC_API void fc_matrix_free(fc_matrix* m);
FC_API size_t fc_matrix_rows(const fc_matrix* m);
FC_API size_t fc_matrix_cols(const fc_matrix* m);
FC_API fc_status fc_matrix_get(const fc_matrix* m, size_t row, size_t col, int* value);
FC_API fc_status fc_matrix_to_text(const fc_matrix* m, char** text);
FC_API fc_status fc_matrix_complement(const fc_matrix* m, fc_matrix** out);
FC_API fc_status fc_matrix_is_simple(const fc_matrix* m, int* simple);
FC_API fc_status fc_matrix_canonical_key(const fc_matrix* m, char** key);

/* Containment. `certificate` may be NULL; otherwise it receives the witness
 * text when contained and an avoidance note when not. */
FC_API fc_status fc_contains(const fc_matrix* f, const fc_matrix* a, int* contained, char** certificate);

/* Families */
FC_API fc_status fc_family_parse(const char* spec, fc_family** out);
FC_API void fc_family_free(fc_family* family);
FC_API size_t fc_family_size(const fc_family* family);

/* Search. A negative min_sum or max_sum means no bound. */
typedef struct fc_search_options {
  uint64_t time_budget_ms; /* 0: no limit */
  int symmetry_pruning;
  long min_sum;
  long max_sum;
} fc_search_options;

FC_API void fc_search_options_init(fc_search_options* opts);
FC_API fc_status fc_forb(size_t m, const fc_family* family, const fc_search_options* opts, fc_search_result** out);
FC_API void fc_search_result_free(fc_search_result* r);
FC_API size_t fc_search_result_value(const fc_search_result* r);
FC_API fc_search_status fc_search_result_status(const fc_search_result* r);
FC_API double fc_search_result_seconds(const fc_search_result* r);
FC_API uint64_t fc_search_result_nodes(const fc_search_result* r);
FC_API fc_status fc_search_result_witness(const fc_search_result* r, fc_matrix** out);
FC_API const char* fc_search_status_name(fc_search_status s);

/* Least-squares slope of log forb against log m, as a text report. */
FC_API fc_status fc_slope(const fc_family* family, size_t m_lo, size_t m_hi, const fc_search_options* opts,
                          char** report);

/* Named constructions */
FC_API fc_status fc_construct(const char* name, size_t m, size_t k, size_t l, fc_matrix** out);
FC_API fc_status fc_construction_size(const char* name, size_t m, size_t k, size_t l, size_t* size);
FC_API fc_status fc_construction_family(const char* name, size_t k, size_t l, char** family);
FC_API fc_status fc_construction_list(char** text);

/* Extremal numbers. Edges are flattened: edge i occupies
 * edges[i*k .. i*k+k-1] (k = 2 for graphs). `witness` may be NULL. */
FC_API fc_status fc_ex_graph(size_t m, size_t vertices, const size_t* edges, size_t edge_count, size_t* value,
                             char** witness);
FC_API fc_status fc_ex_hypergraph(size_t m, size_t k, size_t vertices, const size_t* edges, size_t edge_count,
                                  size_t* value, char** witness);
FC_API fc_status fc_zarankiewicz(size_t r, size_t s, size_t* value, char** witness);

/* Structure */
FC_API fc_status fc_induction_decompose(const fc_matrix* a, size_t row, char** report);
/* low_ones = 0 selects the default threshold 3t-2. ratio and report may be NULL. */
FC_API fc_status fc_q3_stability(const fc_matrix* a, size_t t, size_t low_ones, double* ratio, char** report);
FC_API fc_status fc_q9_classify(const fc_matrix* a, size_t t, fc_q9_outcome* outcome, char** report);
FC_API fc_status fc_find_tik(const fc_matrix* a, size_t t, size_t* k);

/* Claim verification. claims_text NULL selects the builtin set; group NULL
 * keeps every claim. The report holds one line per claim, followed by the
 * claim's detail when with_details is set. */
typedef struct fc_verify_options {
  const size_t* sizes;
  size_t size_count;
  size_t max_contain_size;
  uint64_t search_budget_ms;
  size_t max_m;
  int with_details;
} fc_verify_options;

FC_API void fc_verify_options_init(fc_verify_options* opts);
FC_API fc_status fc_verify(const char* claims_text, const char* group, const fc_verify_options* opts, char** report,
                           size_t* failures);
FC_API fc_status fc_table3(size_t m_lo, size_t m_hi, uint64_t search_budget_ms, size_t factor_size, char** markdown);

#ifdef __cplusplus
}
#endif

#endif
