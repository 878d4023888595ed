#include "doctest.h"

#include <map>

#include "segalkit/corpus.hpp"

using namespace segalkit;

namespace {

// Naive oracle for two-object categories: every composition table, no
// pruning, validity decided by the FinCategory constructor, isomorphism
// classes by functor search.
std::map<int, int> naive_two_object_counts(int max_arrows) {
    std::vector<FinCategory> reps;
    for (int h00 = 1; h00 <= max_arrows; ++h00)
        for (int h11 = 1; h00 + h11 <= max_arrows; ++h11)
            for (int h01 = 0; h00 + h11 + h01 <= max_arrows; ++h01)
                for (int h10 = 0; h00 + h11 + h01 + h10 <= max_arrows; ++h10) {
                    const int h[2][2] = {{h00, h01}, {h10, h11}};
                    std::vector<Arrow> arrows;
                    std::vector<int> ids(2);
                    for (int x = 0; x < 2; ++x)
                        for (int y = 0; y < 2; ++y)
                            for (int m = 0; m < h[x][y]; ++m) {
                                if (x == y && m == 0) ids[static_cast<std::size_t>(x)] = static_cast<int>(arrows.size());
                                arrows.push_back({"a" + std::to_string(arrows.size()), x, y});
                            }
                    auto is_id = [&](int a) { return ids[static_cast<std::size_t>(arrows[static_cast<std::size_t>(a)].source)] == a; };
                    std::vector<std::pair<int, int>> open;
                    const int n = static_cast<int>(arrows.size());
                    for (int g = 0; g < n; ++g)
                        for (int f = 0; f < n; ++f)
                            if (!is_id(g) && !is_id(f) && arrows[static_cast<std::size_t>(f)].target == arrows[static_cast<std::size_t>(g)].source)
                                open.push_back({g, f});
                    std::vector<int> choice(open.size(), 0);
                    auto options = [&](std::size_t k) {
                        std::vector<int> out;
                        const auto [g, f] = open[k];
                        for (int r = 0; r < n; ++r)
                            if (arrows[static_cast<std::size_t>(r)].source == arrows[static_cast<std::size_t>(f)].source &&
                                arrows[static_cast<std::size_t>(r)].target == arrows[static_cast<std::size_t>(g)].target)
                                out.push_back(r);
                        return out;
                    };
                    std::vector<std::vector<int>> opts;
                    bool possible = true;
                    for (std::size_t k = 0; k < open.size(); ++k) {
                        opts.push_back(options(k));
                        possible = possible && !opts.back().empty();
                    }
                    if (!possible) continue;
                    while (true) {
                        std::vector<Composite> comps;
                        for (std::size_t k = 0; k < open.size(); ++k)
                            comps.push_back({open[k].first, open[k].second, opts[k][static_cast<std::size_t>(choice[k])]});
                        try {
                            FinCategory c({"x", "y"}, arrows, ids, comps);
                            bool known = false;
                            for (const auto& r : reps)
                                if (find_isomorphism(r, c)) { known = true; break; }
                            if (!known) reps.push_back(c);
                        } catch (const Error&) {
                        }
                        std::size_t pos = 0;
                        while (pos < choice.size() && choice[pos] + 1 == static_cast<int>(opts[pos].size())) choice[pos++] = 0;
                        if (pos == choice.size()) break;
                        ++choice[pos];
                    }
                }
    std::map<int, int> counts;
    for (const auto& r : reps) ++counts[r.arrow_count()];
    return counts;
}

}  // namespace

TEST_CASE("small category corpus") {
    const auto corpus = small_categories(2, 5);
    std::map<std::pair<int, int>, int> counts;
    for (const auto& c : corpus) ++counts[{c.object_count(), c.arrow_count()}];
    CHECK(counts[{0, 0}] == 1);
    // monoids of order 1..5 up to isomorphism (OEIS A058133)
    CHECK(counts[{1, 1}] == 1);
    CHECK(counts[{1, 2}] == 2);
    CHECK(counts[{1, 3}] == 7);
    CHECK(counts[{1, 4}] == 35);
    CHECK(counts[{1, 5}] == 228);
    const auto naive = naive_two_object_counts(5);
    for (int a = 2; a <= 5; ++a) {
        CAPTURE(a);
        CHECK(counts[{2, a}] == (naive.count(a) ? naive.at(a) : 0));
    }
    // no two corpus entries are isomorphic (spot check among two-object ones)
    std::vector<FinCategory> two;
    for (const auto& c : corpus)
        if (c.object_count() == 2) two.push_back(c);
    for (std::size_t i = 0; i < two.size(); ++i)
        for (std::size_t j = i + 1; j < two.size(); ++j) CHECK_FALSE(find_isomorphism(two[i], two[j]).has_value());
}

TEST_CASE("canonical form identifies isomorphic categories") {
    CHECK(canonical_form(linear(1)) == canonical_form(opposite(linear(1))));
    CHECK(canonical_form(bar_interval()) == canonical_form(opposite(bar_interval())));
    CHECK(find_isomorphism(canonical_form(linear(3)), linear(3)).has_value());
    CHECK_FALSE(canonical_form(linear(1)) == canonical_form(bar_interval()));
    const auto corpus = small_categories(2, 4);
    for (const auto& c : corpus) CHECK(canonical_form(c) == c);
}

TEST_CASE("seeded random relative categories are reproducible") {
    std::mt19937_64 a(7), b(7);
    for (int k = 0; k < 20; ++k) {
        const auto r = random_relative_category(a, 3);
        const auto s = random_relative_category(b, 3);
        CHECK(r.base() == s.base());
        CHECK(r.weq() == s.weq());
        CHECK(r.base().object_count() <= 3);
    }
}

TEST_CASE("composition closure") {
    const auto l2 = linear(2);
    const auto closed = composition_closure(l2, {l2.find_arrow("0->1"), l2.find_arrow("1->2")});
    CHECK(closed.size() == 6);
}
