#include "segalkit/segalkit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <random>
#include <string>

#include "segalkit/corpus.hpp"
#include "segalkit/harness.hpp"

using namespace segalkit;

struct sk_category { FinCategory value; };
struct sk_relcat { RelCategory value; };
struct sk_sset { FinSSet value; };
struct sk_map { SSetMap value; };
struct sk_space { SimplicialSpace value; };

namespace {

thread_local std::string last_error;

sk_status status_of(ErrorCode code) { return static_cast<sk_status>(static_cast<int>(code) + 1); }

// Runs body, translating exceptions into a status and the thread's error text.
template <class F>
sk_status guarded(F&& body) {
    last_error.clear();
    try {
        body();
        return SK_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
    } catch (const std::exception& e) {
        last_error = e.what();
    }
    return SK_INTERNAL;
}

char* copy_string(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* what) {
    if (!p) fail(ErrorCode::InvalidInput, std::string(what) + " is null");
}

void emit(const Json& j, char** out) {
    require(out, "output pointer");
    *out = copy_string(dump(j));
}

template <class Handle, class V>
void hand_out(V value, Handle** out) {
    require(out, "output pointer");
    *out = new Handle{std::move(value)};
}

Json result(const char* operation) {
    Json j;
    j["$schema"] = schema::kResult;
    j["operation"] = operation;
    return j;
}

CheckMode mode_of(sk_mode mode) {
    switch (mode) {
        case SK_MODE_STRICT: return CheckMode::Strict;
        case SK_MODE_PI0: return CheckMode::Pi0;
        case SK_MODE_NERVE_EQUIVALENCE: return CheckMode::NerveEquivalence;
    }
    fail(ErrorCode::InvalidInput, "unknown check mode");
}

void set_flag(int* passed, bool value) {
    if (passed) *passed = value ? 1 : 0;
}

Json parsed(const char* text) {
    require(text, "document");
    return parse_json(text);
}

}  // namespace

extern "C" {

const char* sk_version(void) { return "0.1.0"; }

const char* sk_status_name(sk_status status) {
    if (status == SK_OK) return "Ok";
    if (status == SK_INTERNAL) return "Internal";
    if (status < SK_OK || status > SK_INTERNAL) return "Unknown";
    return to_string(static_cast<ErrorCode>(static_cast<int>(status) - 1));
}

const char* sk_last_error(void) { return last_error.c_str(); }

void sk_string_free(char* s) { std::free(s); }

sk_status sk_document_kind(const char* json, char** kind) {
    return guarded([&] {
        require(kind, "output pointer");
        *kind = copy_string(document_kind(parsed(json)));
    });
}

sk_status sk_validate(const char* json, char** normalized) {
    return guarded([&] {
        const Json j = parsed(json);
        const auto kind = document_kind(j);
        Json out;
        if (kind == "category") out = to_json(category_from_json(j));
        else if (kind == "relative-category") out = to_json(relative_category_from_json(j));
        else if (kind == "sset") out = to_json(sset_from_json(j));
        else if (kind == "sset-map") out = to_json(sset_map_from_json(j));
        else if (kind == "space") out = to_json(space_from_json(j));
        else if (kind == "simplex-map") out = to_json(simplex_map_from_json(j));
        else if (kind == "functor") {
            if (!j.contains("source") || !j.contains("target"))
                fail(ErrorCode::InvalidInput, "a functor document validates only with embedded source and target categories");
            const auto a = category_from_json(j["source"]), b = category_from_json(j["target"]);
            out = to_json(functor_from_json(j, a, b), a, b);
            out["source"] = to_json(a, false);
            out["target"] = to_json(b, false);
        } else
            fail(ErrorCode::InvalidInput, "unrecognised document kind");
        emit(out, normalized);
    });
}

sk_status sk_category_parse(const char* json, sk_category** out) {
    return guarded([&] { hand_out(category_from_json(parsed(json)), out); });
}

sk_status sk_category_builtin(const char* name, int n, sk_category** out) {
    return guarded([&] {
        require(name, "name");
        hand_out(builtin(name, n), out);
    });
}

sk_status sk_category_json(const sk_category* c, char** json) {
    return guarded([&] {
        require(c, "category");
        emit(to_json(c->value), json);
    });
}

int sk_category_object_count(const sk_category* c) { return c ? c->value.object_count() : -1; }
int sk_category_arrow_count(const sk_category* c) { return c ? c->value.arrow_count() : -1; }

sk_status sk_category_is_rigid(const sk_category* c, int* rigid) {
    return guarded([&] {
        require(c, "category");
        require(rigid, "output pointer");
        *rigid = is_rigid(c->value) ? 1 : 0;
    });
}

void sk_category_free(sk_category* c) { delete c; }

sk_status sk_relcat_parse(const char* json, sk_relcat** out) {
    return guarded([&] { hand_out(relative_category_from_json(parsed(json)), out); });
}

sk_status sk_relcat_json(const sk_relcat* r, char** json) {
    return guarded([&] {
        require(r, "relative category");
        emit(to_json(r->value), json);
    });
}

void sk_relcat_free(sk_relcat* r) { delete r; }

sk_status sk_sset_parse(const char* json, sk_sset** out) {
    return guarded([&] { hand_out(sset_from_json(parsed(json)), out); });
}

sk_status sk_sset_json(const sk_sset* x, char** json) {
    return guarded([&] {
        require(x, "simplicial set");
        emit(to_json(x->value), json);
    });
}

int sk_sset_truncation(const sk_sset* x) { return x ? x->value.truncation() : -1; }

int sk_sset_count(const sk_sset* x, int n) {
    if (!x || n < 0 || n > x->value.truncation()) return -1;
    return x->value.count(n);
}

void sk_sset_free(sk_sset* x) { delete x; }

sk_status sk_map_parse(const char* json, sk_map** out) {
    return guarded([&] { hand_out(sset_map_from_json(parsed(json)), out); });
}

sk_status sk_map_json(const sk_map* f, char** json) {
    return guarded([&] {
        require(f, "map");
        emit(to_json(f->value), json);
    });
}

void sk_map_free(sk_map* f) { delete f; }

sk_status sk_space_parse(const char* json, sk_space** out) {
    return guarded([&] { hand_out(space_from_json(parsed(json)), out); });
}

sk_status sk_space_json(const sk_space* x, char** json) {
    return guarded([&] {
        require(x, "space");
        emit(to_json(x->value), json);
    });
}

int sk_space_outer_truncation(const sk_space* x) { return x ? x->value.outer_truncation() : -1; }
int sk_space_inner_truncation(const sk_space* x) { return x ? x->value.inner_truncation() : -1; }

void sk_space_free(sk_space* x) { delete x; }

sk_status sk_delta_maps(int n, int m, uint64_t budget, char** out) {
    return guarded([&] {
        if (n < 0 || m < 0) fail(ErrorCode::InvalidInput, "degrees must be non-negative");
        const auto maps = enumerate_maps(n, m, budget);
        Json j = result("delta-hom");
        j["n"] = n;
        j["m"] = m;
        j["count"] = maps.size();
        Json list = Json::array();
        for (const auto& f : maps) list.push_back(f.to_string());
        j["maps"] = std::move(list);
        emit(j, out);
    });
}

sk_status sk_delta_automorphisms(int max_degree, uint64_t budget, char** out) {
    return guarded([&] {
        const auto auts = automorphisms(max_degree, budget);
        Json j = result("delta-aut");
        j["maxDegree"] = max_degree;
        j["count"] = auts.size();
        Json list = Json::array();
        for (const auto& a : auts) {
            bool reversal = true, involution = true;
            Json generators = Json::object();
            for (const auto& [f, g] : a.table) {
                reversal = reversal && g == reverse_map(f);
                involution = involution && a.apply(g) == f;
                const auto word = factorize(f);
                if (word.size() == 1) generators[word.front().to_string()] = g.to_string();
            }
            list.push_back({{"identity", a.is_identity()}, {"reversal", reversal}, {"involution", involution},
                            {"generators", std::move(generators)}});
        }
        j["automorphisms"] = std::move(list);
        emit(j, out);
    });
}

sk_status sk_nerve(const sk_category* c, int truncation, sk_sset** out) {
    return guarded([&] {
        require(c, "category");
        hand_out(nerve(c->value, truncation), out);
    });
}

sk_status sk_discrete_levels(const sk_sset* x, int inner_truncation, sk_space** out) {
    return guarded([&] {
        require(x, "simplicial set");
        hand_out(discrete_levels(x->value, inner_truncation), out);
    });
}

sk_status sk_sset_segal(const sk_sset* x, int* passed, char** out) {
    return guarded([&] {
        require(x, "simplicial set");
        const auto w = is_strict_segal(x->value);
        Json j = result("segal-check");
        j["input"] = "sset";
        j["mode"] = "strict";
        j["segal"] = w.segal;
        if (!w.segal) j["counterexample"] = {{"degree", w.degree}, {"spine", w.tuple}, {"detail", w.detail}};
        set_flag(passed, w.segal);
        emit(j, out);
    });
}

sk_status sk_space_segal(const sk_space* x, sk_mode mode, int* passed, char** out) {
    return guarded([&] {
        require(x, "space");
        const auto v = is_segal(x->value, mode_of(mode));
        Json j = result("segal-check");
        j["input"] = "space";
        j["mode"] = to_string(v.mode);
        j["segal"] = v.segal;
        if (!v.segal) j["counterexample"] = {{"degree", v.degree}, {"detail", v.detail}};
        set_flag(passed, v.segal);
        emit(j, out);
    });
}

sk_status sk_space_complete(const sk_space* x, sk_mode mode, int* passed, char** out) {
    return guarded([&] {
        require(x, "space");
        const auto v = is_complete(x->value, mode_of(mode));
        Json j = result("complete-check");
        j["mode"] = to_string(v.mode);
        j["verdict"] = v.complete ? "complete" : "incomplete";
        j["complete"] = v.complete;
        j["level0Components"] = v.level0_components;
        j["hoequivComponents"] = v.hoequiv_components;
        if (!v.detail.empty()) j["counterexample"] = v.detail;
        j["notes"] = v.notes;
        set_flag(passed, v.complete);
        emit(j, out);
    });
}

sk_status sk_realize(const sk_space* x, sk_sset** out) {
    return guarded([&] {
        require(x, "space");
        hand_out(realize(x->value), out);
    });
}

sk_status sk_diagonal(const sk_space* x, sk_sset** out) {
    return guarded([&] {
        require(x, "space");
        hand_out(diagonal(x->value), out);
    });
}

sk_status sk_c_nerve(const sk_map* p, int outer_truncation, uint64_t budget, sk_space** out) {
    return guarded([&] {
        require(p, "map");
        hand_out(c_nerve(p->value, outer_truncation, budget).space, out);
    });
}

sk_status sk_classification_diagram(const sk_relcat* r, int outer_truncation, int inner_truncation,
                                    uint64_t budget, sk_space** out) {
    return guarded([&] {
        require(r, "relative category");
        hand_out(classification_diagram(r->value, outer_truncation, inner_truncation, budget), out);
    });
}

sk_status sk_axiom_check(const char* name, uint64_t seed, int timings, int* passed, char** out) {
    return guarded([&] {
        std::vector<std::string> names = check_names();
        if (name) {
            const std::string n = name;
            bool known = false;
            for (const auto& list : {check_names(), extra_check_names()})
                for (const auto& k : list) known = known || k == n;
            if (!known) fail(ErrorCode::InvalidInput, "unknown check '" + n + "'");
            names = {n};
        }
        const Json j = run_checks(default_corpus(seed), names, timings != 0);
        set_flag(passed, j["summary"]["fail"].get<int>() == 0);
        emit(j, out);
    });
}

sk_status sk_check_names(char** out) {
    return guarded([&] {
        Json j = result("check-names");
        j["checks"] = check_names();
        j["extra"] = extra_check_names();
        emit(j, out);
    });
}

sk_status sk_interval_search(int max_objects, int max_arrows, uint64_t budget, int* passed, char** out) {
    return guarded([&] {
        const auto r = interval_uniqueness_search(max_objects, max_arrows, budget);
        set_flag(passed, r.passed());
        emit(r.to_json(), out);
    });
}

sk_status sk_corpus(int max_objects, int max_arrows, uint64_t seed, int relative, uint64_t budget, char** out) {
    return guarded([&] {
        if (relative < 0) fail(ErrorCode::InvalidInput, "relative count must be non-negative");
        Json j = result("corpus-gen");
        j["maxObjects"] = max_objects;
        j["maxArrows"] = max_arrows;
        j["seed"] = seed;
        Json cats = Json::array();
        for (const auto& c : small_categories(max_objects, max_arrows, budget)) cats.push_back(to_json(c, false));
        j["categories"] = std::move(cats);
        std::mt19937_64 rng(seed);
        Json rels = Json::array();
        for (int k = 0; k < relative; ++k) rels.push_back(to_json(random_relative_category(rng, 3), false));
        j["relative"] = std::move(rels);
        emit(j, out);
    });
}

}  // extern "C"
