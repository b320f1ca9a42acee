#ifndef EQUITAB_H
#define EQUITAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define EQUITAB_API __attribute__((visibility("default")))
#else
#define EQUITAB_API
#endif

typedef enum equitab_status {
    EQUITAB_OK = 0,
    EQUITAB_ERR_INVALID = 1,
    EQUITAB_ERR_PARSE = 2,
    EQUITAB_ERR_RESOURCE = 3,
    EQUITAB_ERR_IO = 4,
    EQUITAB_ERR_INTERNAL = 5
} equitab_status;

typedef enum equitab_basis { EQUITAB_BASIS_S = 0, EQUITAB_BASIS_H = 1 } equitab_basis;

typedef enum equitab_verdict {
    EQUITAB_EQUAL = 0,
    EQUITAB_GREATER = 1,
    EQUITAB_LESS = 2,
    EQUITAB_INCOMPARABLE = 3
} equitab_verdict;

typedef struct equitab_engine equitab_engine;
typedef struct equitab_vector equitab_vector;
typedef struct equitab_comparison equitab_comparison;
typedef struct equitab_poset equitab_poset;
typedef struct equitab_report equitab_report;

typedef struct equitab_engine_options {
    int cell_guard;          /* largest ribbon expanded, in cells */
    long long poset_guard;   /* largest C(n+m, m) accepted by poset builds */
    unsigned threads;        /* 0 = hardware concurrency */
    const char* cache_path;  /* NDJSON expansion cache, or NULL */
} equitab_engine_options;

typedef struct equitab_suite_options {
    int a_values[8];
    int a_count;
    int chain_max;
    int ftom_max_n;
    int ftom_max_m;
    int ftom_max_k;
    int max_cells;
    int max_cells_small;
    int product_pairs;
    unsigned long long seed;
    int jensen_range;
    int jensen_max_v;
} equitab_suite_options;

/* Library version string. */
EQUITAB_API const char* equitab_version(void);

/* Message for the last failed call on this thread; "" if none. */
EQUITAB_API const char* equitab_last_error(void);

/* Frees strings returned through char** out-parameters. */
EQUITAB_API void equitab_string_free(char* s);

EQUITAB_API void equitab_engine_options_init(equitab_engine_options* options);
EQUITAB_API equitab_status equitab_engine_create(const equitab_engine_options* options, equitab_engine** out);
EQUITAB_API void equitab_engine_destroy(equitab_engine* engine);
/* Lines of the cache file that were skipped when it was opened. */
EQUITAB_API size_t equitab_engine_warning_count(const equitab_engine* engine);
EQUITAB_API const char* equitab_engine_warning(const equitab_engine* engine, size_t index);

/* Ribbons are comma-separated positive integers, rows from the top. */
EQUITAB_API equitab_status equitab_expand(equitab_engine* engine, const char* ribbon, equitab_basis basis,
                                          equitab_vector** out);
EQUITAB_API size_t equitab_vector_size(const equitab_vector* v);
EQUITAB_API size_t equitab_vector_term_length(const equitab_vector* v, size_t index);
EQUITAB_API const int* equitab_vector_term_parts(const equitab_vector* v, size_t index);
EQUITAB_API long long equitab_vector_term_coefficient(const equitab_vector* v, size_t index);
EQUITAB_API const char* equitab_vector_json(const equitab_vector* v);
EQUITAB_API void equitab_vector_destroy(equitab_vector* v);

EQUITAB_API equitab_status equitab_compare(equitab_engine* engine, const char* alpha, const char* beta,
                                           equitab_comparison** out);
EQUITAB_API equitab_verdict equitab_comparison_verdict(const equitab_comparison* c);
EQUITAB_API const char* equitab_comparison_json(const equitab_comparison* c);
EQUITAB_API void equitab_comparison_destroy(equitab_comparison* c);

/* The poset of ribbons with n rows of length a+1 and m rows of length a.
   With fast != 0, pairs ruled out by the necessary conditions in both
   directions are not expanded. */
EQUITAB_API equitab_status equitab_poset_build(equitab_engine* engine, int a, int n, int m, int fast,
                                               equitab_poset** out);
EQUITAB_API size_t equitab_poset_element_count(const equitab_poset* p);
EQUITAB_API int equitab_poset_is_chain(const equitab_poset* p);
EQUITAB_API const char* equitab_poset_json(const equitab_poset* p);
EQUITAB_API const char* equitab_poset_dot(const equitab_poset* p);
EQUITAB_API void equitab_poset_destroy(equitab_poset* p);

/* JSON with the ribbon P_{R,S}, its parameters and the geometric cross-check. */
EQUITAB_API equitab_status equitab_box_diagonal(int rows, int cols, char** json_out);

EQUITAB_API void equitab_suite_options_init(equitab_suite_options* options);
/* Suites: chains, ftom, shortends, smalls, minimal, maximal, jensen, oracles. */
EQUITAB_API equitab_status equitab_verify(equitab_engine* engine, const char* suite, const equitab_suite_options* options,
                                          equitab_report** out);
EQUITAB_API int equitab_report_passed(const equitab_report* r);
EQUITAB_API size_t equitab_report_check_count(const equitab_report* r);
EQUITAB_API const char* equitab_report_check_name(const equitab_report* r, size_t index);
EQUITAB_API int equitab_report_check_passed(const equitab_report* r, size_t index);
EQUITAB_API const char* equitab_report_check_detail(const equitab_report* r, size_t index);
EQUITAB_API double equitab_report_check_seconds(const equitab_report* r, size_t index);
/* With include_timing == 0 the JSON is identical across runs. */
EQUITAB_API char* equitab_report_json(const equitab_report* r, int include_timing);
EQUITAB_API void equitab_report_destroy(equitab_report* r);

#ifdef __cplusplus
}
#endif

#endif
