/* Exercises the C interface from plain C. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "segalkit/segalkit.h"

static int failures = 0;

#define EXPECT(cond)                                                      \
    do {                                                                  \
        if (!(cond)) {                                                    \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                   \
        }                                                                 \
    } while (0)

static int contains(const char* haystack, const char* needle) { return haystack && strstr(haystack, needle) != NULL; }

static void delta(void) {
    char* out = NULL;
    EXPECT(sk_delta_maps(1, 1, 1000000, &out) == SK_OK);
    EXPECT(contains(out, "\"count\": 3"));
    EXPECT(contains(out, "\"1->1:[0,1]\""));
    sk_string_free(out);
    EXPECT(sk_delta_maps(-1, 1, 1000000, &out) == SK_INVALID_INPUT);
    EXPECT(strlen(sk_last_error()) > 0);
    EXPECT(sk_delta_maps(5, 5, 10, &out) == SK_BUDGET_EXCEEDED);
    EXPECT(sk_delta_automorphisms(3, 1000000, &out) == SK_OK);
    EXPECT(contains(out, "\"count\": 2"));
    sk_string_free(out);
}

static void nerves(void) {
    sk_category* bar = NULL;
    sk_category* i = NULL;
    EXPECT(sk_category_builtin("bar_interval", 0, &bar) == SK_OK);
    EXPECT(sk_category_builtin("interval", 0, &i) == SK_OK);
    EXPECT(sk_category_builtin("nonsense", 0, &i) == SK_INVALID_INPUT);
    EXPECT(sk_category_object_count(bar) == 2 && sk_category_arrow_count(bar) == 4);
    int rigid = -1;
    /* objects of I-bar have no non-trivial automorphisms, though it is not complete */
    EXPECT(sk_category_is_rigid(bar, &rigid) == SK_OK && rigid == 1);
    EXPECT(sk_category_is_rigid(i, &rigid) == SK_OK && rigid == 1);

    /* JSON round trip */
    char* text = NULL;
    EXPECT(sk_category_json(bar, &text) == SK_OK);
    sk_category* again = NULL;
    EXPECT(sk_category_parse(text, &again) == SK_OK);
    char* text2 = NULL;
    EXPECT(sk_category_json(again, &text2) == SK_OK);
    EXPECT(strcmp(text, text2) == 0);
    char* kind = NULL;
    EXPECT(sk_document_kind(text, &kind) == SK_OK && strcmp(kind, "category") == 0);
    sk_string_free(kind);
    sk_string_free(text);
    sk_string_free(text2);
    sk_category_free(again);

    sk_sset* n = NULL;
    EXPECT(sk_nerve(bar, 2, &n) == SK_OK);
    EXPECT(sk_sset_truncation(n) == 2 && sk_sset_count(n, 1) == 4 && sk_sset_count(n, 3) == -1);
    int passed = -1;
    char* out = NULL;
    EXPECT(sk_sset_segal(n, &passed, &out) == SK_OK && passed == 1);
    sk_string_free(out);

    sk_space* x = NULL;
    EXPECT(sk_discrete_levels(n, 2, &x) == SK_OK);
    EXPECT(sk_space_outer_truncation(x) == 2 && sk_space_inner_truncation(x) == 2);
    EXPECT(sk_space_complete(x, SK_MODE_PI0, &passed, &out) == SK_OK && passed == 0);
    EXPECT(contains(out, "incomplete"));
    sk_string_free(out);
    EXPECT(sk_space_segal(x, SK_MODE_STRICT, &passed, &out) == SK_OK && passed == 1);
    sk_string_free(out);

    sk_sset* r = NULL;
    sk_sset* d = NULL;
    EXPECT(sk_realize(x, &r) == SK_OK && sk_diagonal(x, &d) == SK_OK);
    for (int k = 0; k <= 2; ++k) EXPECT(sk_sset_count(r, k) == sk_sset_count(d, k));
    sk_sset_free(r);
    sk_sset_free(d);
    sk_space_free(x);
    sk_sset_free(n);
    sk_category_free(bar);
    sk_category_free(i);
}

static void errors(void) {
    sk_sset* x = NULL;
    EXPECT(sk_sset_parse("{\"truncation\": 1,", &x) == SK_INVALID_INPUT);
    EXPECT(contains(sk_last_error(), "line"));
    EXPECT(x == NULL);
    EXPECT(sk_sset_json(NULL, NULL) == SK_INVALID_INPUT);
    char* out = NULL;
    EXPECT(sk_validate("{\"objects\": [\"x\"], \"arrows\": [], \"identities\": {}, \"compose\": []}", &out) ==
           SK_INVALID_INPUT);
    EXPECT(strcmp(sk_status_name(SK_NOT_SEGAL), "NotSegal") == 0);
    EXPECT(strcmp(sk_status_name(SK_OK), "Ok") == 0);
    EXPECT(sk_axiom_check("A2", 0, 0, NULL, &out) == SK_INVALID_INPUT);
}

static void checks(void) {
    int passed = -1;
    char* out = NULL;
    EXPECT(sk_axiom_check("A7", 0, 0, &passed, &out) == SK_OK && passed == 1);
    EXPECT(contains(out, "segalkit/batch/v1"));
    sk_string_free(out);
    EXPECT(sk_interval_search(1, 3, 1000000, &passed, &out) == SK_OK && passed == 0);
    sk_string_free(out);
    EXPECT(sk_corpus(1, 3, 5, 2, 1000000, &out) == SK_OK);
    EXPECT(contains(out, "\"relative\""));
    sk_string_free(out);
    EXPECT(sk_check_names(&out) == SK_OK && contains(out, "interval-uniqueness"));
    sk_string_free(out);
}

int main(void) {
    delta();
    nerves();
    errors();
    checks();
    if (failures) fprintf(stderr, "%d failures\n", failures);
    else printf("capi: all checks passed (%s)\n", sk_version());
    return failures ? 1 : 0;
}
