// Acceptance suite: one line per criterion with its pinned time limit.
// `acceptance` runs all twelve; `acceptance N` runs criterion N alone.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "segalkit/corpus.hpp"
#include "segalkit/harness.hpp"

using namespace segalkit;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

// Every weakly increasing sequence in {0..m}^(n+1), by counting through all
// tuples in lexicographic order.
std::vector<std::vector<int>> brute_force_maps(int n, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(static_cast<std::size_t>(n + 1), 0);
    while (true) {
        bool monotone = true;
        for (std::size_t k = 1; k < t.size(); ++k) monotone = monotone && t[k - 1] <= t[k];
        if (monotone) out.push_back(t);
        std::size_t pos = t.size();
        while (pos > 0 && t[pos - 1] == m) t[--pos] = 0;
        if (pos == 0) break;
        ++t[pos - 1];
    }
    return out;
}

const Corpus& corpus() {
    static const Corpus c = default_corpus(0);
    return c;
}

Outcome hom_count() {
    Outcome o;
    const auto maps = enumerate_maps(1, 1);
    o.pass = maps.size() == 3;
    int pairs = 0;
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m) {
            const auto got = enumerate_maps(n, m);
            const auto want = brute_force_maps(n, m);
            bool same = got.size() == want.size() && count_maps(n, m) == want.size();
            for (std::size_t k = 0; same && k < got.size(); ++k)
                same = std::vector<int>(got[k].images().begin(), got[k].images().end()) == want[k];
            o.pass = o.pass && same;
            pairs += same;
        }
    o.detail = "|hom([1],[1])| = " + std::to_string(maps.size()) + "; " + std::to_string(pairs) +
               "/36 pairs n,m <= 5 match brute force";
    return o;
}

Outcome delta_automorphisms() {
    const auto auts = automorphisms(4);
    int identities = 0, reversals = 0, involutions = 0;
    for (const auto& a : auts) {
        identities += a.is_identity();
        bool rev = true, inv = true;
        for (const auto& [f, g] : a.table) {
            rev = rev && g == reverse_map(f);
            inv = inv && a.apply(g) == f;
        }
        reversals += rev && !a.is_identity();
        involutions += inv;
    }
    Outcome o;
    o.pass = auts.size() == 2 && identities == 1 && reversals == 1 && involutions == 2;
    o.detail = std::to_string(auts.size()) + " automorphisms: " + std::to_string(identities) + " identity, " +
               std::to_string(reversals) + " reversal, " + std::to_string(involutions) + " square to identity";
    return o;
}

Outcome spine_pushout() {
    Outcome o;
    std::ostringstream d;
    for (int n = 1; n <= 5; ++n) {
        const auto start = std::chrono::steady_clock::now();
        const bool iso = find_isomorphism(spine_category(n), linear(n)).has_value();
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.pass = o.pass && iso && s < 1.0;
        d << "n=" << n << (iso ? " iso" : " NOT iso") << (s < 1.0 ? "" : " (over 1 s)") << (n < 5 ? ", " : "");
    }
    o.detail = d.str();
    return o;
}

Outcome report_outcome(const Report& r) {
    Outcome o;
    o.pass = r.passed();
    o.detail = r.metrics.dump();
    if (!r.passed()) o.detail += "; first witness " + r.witnesses.front().dump();
    return o;
}

Outcome nerve_segal() { return report_outcome(check_nerve_segal(corpus().categories)); }

Outcome completeness_rigidity() {
    const auto r = check_completeness_rigidity(corpus().categories);
    const bool i = is_complete(discrete_levels(nerve(interval_category(), 2), 2)).complete;
    const bool bar = is_complete(discrete_levels(nerve(bar_interval(), 2), 2)).complete;
    Outcome o;
    o.pass = r.passed() && i && !bar;
    std::ostringstream d;
    d << "nerve(I) " << (i ? "complete" : "incomplete") << ", nerve(I-bar) " << (bar ? "complete" : "incomplete") << "; "
      << r.witnesses.size() << " of " << r.metrics["categories"] << " categories disagree";
    for (const auto& w : r.witnesses)
        d << "; disagreement: " << w["category"]["objects"].size() << " objects, " << w["category"]["arrows"].size()
          << " arrows, complete=" << w["complete"] << ", rigid=" << w["rigid"];
    o.detail = d.str();
    return o;
}

Outcome realization_oracle() {
    std::mt19937_64 rng(2024);
    int mismatches = 0, total = 0;
    for (int k = 0; k < 100; ++k) {
        const int outer = 1 + static_cast<int>(rng() % 3);
        const int inner = 1 + static_cast<int>(rng() % 3);
        const auto x = random_space(rng, outer, inner, 20);
        bool bounded = true;
        for (const auto& l : x.levels())
            for (int d = 0; d <= inner; ++d) bounded = bounded && l.count(d) <= 20;
        const bool ok = bounded && isomorphic(realize(x), diagonal(x)) && realization_to_diagonal(x).is_isomorphism();
        mismatches += !ok;
        ++total;
    }
    Outcome o;
    o.pass = mismatches == 0;
    o.detail = std::to_string(total) + " seeded spaces, " + std::to_string(mismatches) + " mismatches";
    return o;
}

Outcome a5() {
    int passed = 0;
    Outcome o;
    for (const auto& c : corpus().categories) {
        const auto r = check_A5(c);
        passed += r.passed();
        if (!r.passed() && o.detail.empty()) o.detail = "first failure " + r.witnesses.front().dump() + "; ";
    }
    o.pass = passed == static_cast<int>(corpus().categories.size());
    o.detail += std::to_string(passed) + "/" + std::to_string(corpus().categories.size()) + " categories";
    return o;
}

Outcome interval() {
    const auto r = check_interval();
    Outcome o = report_outcome(r);
    o.pass = o.pass && r.metrics.contains("strictSpaceSegal") && r.metrics["strictSpaceSegal"] == false;
    return o;
}

Outcome a7() {
    Outcome o;
    int pairs = 0;
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m) pairs += check_A7(n, m).passed();
    const auto r = check_A7(2, 3);
    o.pass = pairs == 16 && r.metrics["isoClasses"] == 20 && r.metrics["spaceMaps"] == 20 &&
             r.metrics["simplexMaps"] == 20 && r.metrics["functors"] == 20;
    o.detail = std::to_string(pairs) + "/16 pairs agree; (2,3): " + r.metrics.dump();
    return o;
}

Outcome interval_uniqueness() {
    const auto r = interval_uniqueness_search(2, 5);
    const auto cats = small_categories(2, 5);
    const auto matches = characterize_interval(cats);
    bool is_i = !matches.empty();
    for (const auto& m : matches) is_i = is_i && find_isomorphism(cats[m.index], interval_category()).has_value();
    Outcome o;
    o.pass = r.passed() && r.metrics["classes"] == 1 && is_i;
    o.detail = r.metrics.dump() + (is_i ? "; the class is I" : "; the class is not I");
    return o;
}

Outcome classification() {
    std::mt19937_64 rng(1);  // seed 0 would repeat the corpus draws
    std::vector<RelCategory> rels = corpus().relative;
    for (int k = 0; k < 20; ++k) rels.push_back(random_relative_category(rng, 3));
    int passed = 0;
    Outcome o;
    for (const auto& rel : rels) {
        const auto r = check_classification(rel);
        passed += r.passed();
        if (!r.passed() && o.detail.empty()) o.detail = "first failure " + r.witnesses.front().dump() + "; ";
    }
    o.pass = passed == static_cast<int>(rels.size());
    o.detail += std::to_string(passed) + "/" + std::to_string(rels.size()) + " relative categories (<= 3 objects)";
    return o;
}

Outcome hmono() {
    int complete = 0, passed = 0;
    for (const auto& c : corpus().categories) {
        const auto x = discrete_levels(nerve(c, 2), 2);
        if (!is_complete(x).complete) continue;
        ++complete;
        passed += check_hmono(x).passed();
    }
    const bool initial = check_initial().passed();
    Outcome o;
    o.pass = complete > 0 && passed == complete && initial;
    o.detail = "h-mono " + std::to_string(passed) + "/" + std::to_string(complete) + " complete corpus spaces; initial " +
               (initial ? "pass" : "fail");
    return o;
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list{
        {1, "hom-count", 1, hom_count},
        {2, "delta-automorphisms", 10, delta_automorphisms},
        {3, "spine-pushout", 5, spine_pushout},
        {4, "nerve-strict-segal", 30, nerve_segal},
        {5, "completeness-rigidity", 30, completeness_rigidity},
        {6, "realization-oracle", 60, realization_oracle},
        {7, "A5", 60, a5},
        {8, "interval", 5, interval},
        {9, "A7", 5, a7},
        {10, "interval-uniqueness", 120, interval_uniqueness},
        {11, "classification", 60, classification},
        {12, "h-mono", 5, hmono},
    };
    return list;
}

bool run(const Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = c.run();
    } catch (const std::exception& e) {
        o = {false, std::string("error: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = s <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    std::printf("criterion %2d %-22s %s  %7.3fs (limit %gs)%s  %s\n", c.id, c.name, pass ? "PASS" : "FAIL", s,
                c.limit_seconds, in_time ? "" : " OVER TIME", o.detail.c_str());
    std::fflush(stdout);
    return pass;
}

}  // namespace

int main(int argc, char** argv) {
    int failures = 0;
    if (argc > 1) {
        const int id = std::atoi(argv[1]);
        for (const auto& c : criteria())
            if (c.id == id) return run(c) ? 0 : 1;
        std::fprintf(stderr, "no criterion %s\n", argv[1]);
        return 2;
    }
    for (const auto& c : criteria()) failures += !run(c);
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria().size()) - failures, criteria().size());
    return failures ? 1 : 0;
}
