#ifndef SEGALKIT_H
#define SEGALKIT_H

/* C interface to the segalkit library.
 *
 * Values live behind opaque handles created by the *_parse and operation
 * functions and released with the matching *_free. Every fallible call returns
 * an sk_status; on failure sk_last_error() describes the problem until the
 * next call on the same thread. Strings handed out through char** belong to
 * the caller and are released with sk_string_free. */

#include <stdint.h>

#if defined(_WIN32)
#  define SK_API __declspec(dllexport)
#else
#  define SK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sk_status {
    SK_OK = 0,
    SK_INVALID_INPUT,
    SK_DOMAIN_MISMATCH,
    SK_INDEX_OUT_OF_RANGE,
    SK_TRUNCATION_MISMATCH,
    SK_BUDGET_EXCEEDED,
    SK_NON_TERMINATING,
    SK_ILL_FORMED_QUOTIENT,
    SK_NOT_SEGAL,
    SK_ILL_DEFINED_COMPOSITION,
    SK_ORACLE_UNAVAILABLE,
    SK_INTERNAL
} sk_status;

typedef enum sk_mode { SK_MODE_STRICT = 0, SK_MODE_PI0, SK_MODE_NERVE_EQUIVALENCE } sk_mode;

typedef struct sk_category sk_category;
typedef struct sk_relcat sk_relcat;
typedef struct sk_sset sk_sset;
typedef struct sk_map sk_map;
typedef struct sk_space sk_space;

SK_API const char* sk_version(void);
SK_API const char* sk_status_name(sk_status status);
SK_API const char* sk_last_error(void);
SK_API void sk_string_free(char* s);

/* "category", "relative-category", "functor", "sset", "sset-map", "space",
 * "simplex-map", or "" when the document is not recognised. */
SK_API sk_status sk_document_kind(const char* json, char** kind);
/* Parses any known document kind and prints it back in normal form. */
SK_API sk_status sk_validate(const char* json, char** normalized);

SK_API sk_status sk_category_parse(const char* json, sk_category** out);
/* point | empty | linear | interval | bar_interval; n is read by linear. */
SK_API sk_status sk_category_builtin(const char* name, int n, sk_category** out);
SK_API sk_status sk_category_json(const sk_category* c, char** json);
SK_API int sk_category_object_count(const sk_category* c);
SK_API int sk_category_arrow_count(const sk_category* c);
SK_API sk_status sk_category_is_rigid(const sk_category* c, int* rigid);
SK_API void sk_category_free(sk_category* c);

SK_API sk_status sk_relcat_parse(const char* json, sk_relcat** out);
SK_API sk_status sk_relcat_json(const sk_relcat* r, char** json);
SK_API void sk_relcat_free(sk_relcat* r);

SK_API sk_status sk_sset_parse(const char* json, sk_sset** out);
SK_API sk_status sk_sset_json(const sk_sset* x, char** json);
SK_API int sk_sset_truncation(const sk_sset* x);
/* Number of degree-n cells, or -1 when n is out of range. */
SK_API int sk_sset_count(const sk_sset* x, int n);
SK_API void sk_sset_free(sk_sset* x);

SK_API sk_status sk_map_parse(const char* json, sk_map** out);
SK_API sk_status sk_map_json(const sk_map* f, char** json);
SK_API void sk_map_free(sk_map* f);

SK_API sk_status sk_space_parse(const char* json, sk_space** out);
SK_API sk_status sk_space_json(const sk_space* x, char** json);
SK_API int sk_space_outer_truncation(const sk_space* x);
SK_API int sk_space_inner_truncation(const sk_space* x);
SK_API void sk_space_free(sk_space* x);

/* Result documents: every function below that writes char** result produces
 * a tagged JSON object; *passed (when given) receives 1 or 0. */

/* All monotone maps [n] -> [m] with their count. */
SK_API sk_status sk_delta_maps(int n, int m, uint64_t budget, char** result);
/* Automorphisms of the simplex category truncated at max_degree. */
SK_API sk_status sk_delta_automorphisms(int max_degree, uint64_t budget, char** result);

SK_API sk_status sk_nerve(const sk_category* c, int truncation, sk_sset** out);
SK_API sk_status sk_discrete_levels(const sk_sset* x, int inner_truncation, sk_space** out);

SK_API sk_status sk_sset_segal(const sk_sset* x, int* passed, char** result);
SK_API sk_status sk_space_segal(const sk_space* x, sk_mode mode, int* passed, char** result);
SK_API sk_status sk_space_complete(const sk_space* x, sk_mode mode, int* passed, char** result);

SK_API sk_status sk_realize(const sk_space* x, sk_sset** out);
SK_API sk_status sk_diagonal(const sk_space* x, sk_sset** out);
/* The nerve of p in simplicial spaces, built through standard(1). */
SK_API sk_status sk_c_nerve(const sk_map* p, int outer_truncation, uint64_t budget, sk_space** out);
SK_API sk_status sk_classification_diagram(const sk_relcat* r, int outer_truncation, int inner_truncation,
                                           uint64_t budget, sk_space** out);

/* One named check (NULL runs every check) over the default corpus. */
SK_API sk_status sk_axiom_check(const char* name, uint64_t seed, int timings, int* passed, char** result);
/* Names of the available checks, one JSON array. */
SK_API sk_status sk_check_names(char** result);
SK_API sk_status sk_interval_search(int max_objects, int max_arrows, uint64_t budget, int* passed,
                                    char** result);
/* Every category up to isomorphism within the bounds, plus `relative` seeded
 * random relative categories. */
SK_API sk_status sk_corpus(int max_objects, int max_arrows, uint64_t seed, int relative, uint64_t budget,
                           char** result);

#ifdef __cplusplus
}
#endif

#endif
