#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "segalkit/simplex.hpp"

using namespace segalkit;

namespace {

// Independent oracle: filter every sequence in [0,m]^(n+1) for monotonicity.
std::vector<std::vector<int>> brute_force_monotone(int n, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> seq(static_cast<std::size_t>(n) + 1, 0);
    while (true) {
        if (std::is_sorted(seq.begin(), seq.end())) out.push_back(seq);
        int pos = n;
        while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == m) seq[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++seq[static_cast<std::size_t>(pos)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> as_vector(const SimplexMap& f) { return {f.images().begin(), f.images().end()}; }

// Independent oracle for object-fixing automorphisms: such a functor is fixed
// by the permutation it induces on each vertex set Hom([0],[n]), since
// F(f) o F(v) = F(f o v). Enumerate all vertex permutations and keep the
// functorial bijections.
std::vector<std::map<SimplexMap, SimplexMap>> oracle_automorphisms(int max_degree) {
    std::vector<std::vector<int>> perms(static_cast<std::size_t>(max_degree) + 1);
    for (int n = 0; n <= max_degree; ++n) {
        perms[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
        std::iota(perms[static_cast<std::size_t>(n)].begin(), perms[static_cast<std::size_t>(n)].end(), 0);
    }
    std::vector<std::map<SimplexMap, SimplexMap>> found;
    while (true) {
        std::map<SimplexMap, SimplexMap> table;
        bool ok = true;
        for (int k = 0; k <= max_degree && ok; ++k) {
            for (int n = 0; n <= max_degree && ok; ++n) {
                std::set<std::vector<int>> seen;
                for (const auto& seq : brute_force_monotone(k, n)) {
                    std::vector<int> image(static_cast<std::size_t>(k) + 1);
                    for (int j = 0; j <= k; ++j) {
                        const int src = perms[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                        image[static_cast<std::size_t>(src)] =
                            perms[static_cast<std::size_t>(n)][static_cast<std::size_t>(seq[static_cast<std::size_t>(j)])];
                    }
                    if (!std::is_sorted(image.begin(), image.end())) { ok = false; break; }
                    seen.insert(image);
                    table.emplace(SimplexMap(n, seq), SimplexMap(n, image));
                }
                if (ok && seen.size() != brute_force_monotone(k, n).size()) ok = false;
            }
        }
        if (ok) {
            for (const auto& [f, ff] : table)
                for (const auto& [g, gg] : table)
                    if (f.codomain() == g.domain() && table.at(compose(f, g)) != compose(ff, gg)) ok = false;
        }
        if (ok) found.push_back(table);
        int level = max_degree;
        while (level >= 0 && !std::next_permutation(perms[static_cast<std::size_t>(level)].begin(),
                                                    perms[static_cast<std::size_t>(level)].end()))
            --level;
        if (level < 0) break;
    }
    return found;
}

}  // namespace

TEST_CASE("compose: cosimplicial unit and inclusion examples") {
    const auto delta0 = SimplexMap(1, {0});
    const auto sigma0 = SimplexMap::codegeneracy(0, 0);
    CHECK(compose(delta0, sigma0) == SimplexMap::identity(0));

    const auto vertex0 = SimplexMap::vertex(1, 0);
    CHECK(compose(vertex0, se(0, 2)) == SimplexMap::vertex(2, 0));

    CHECK_THROWS_AS(compose(se(0, 2), se(0, 1)), Error);
    try {
        compose(se(0, 2), se(0, 1));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DomainMismatch);
    }
}

TEST_CASE("compose agrees with pointwise lookup on all pairs up to degree 3") {
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            for (int p = 0; p <= 3; ++p)
                for (const auto& f : brute_force_monotone(n, m))
                    for (const auto& g : brute_force_monotone(m, p)) {
                        std::vector<int> expected;
                        for (int v : f) expected.push_back(g[static_cast<std::size_t>(v)]);
                        CHECK(as_vector(compose(SimplexMap(m, f), SimplexMap(p, g))) == expected);
                    }
}

TEST_CASE("composition is associative and unital") {
    for (const auto& f : enumerate_maps(1, 2))
        for (const auto& g : enumerate_maps(2, 3))
            for (const auto& h : enumerate_maps(3, 2)) {
                CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
                CHECK(compose(SimplexMap::identity(1), f) == f);
                CHECK(compose(f, SimplexMap::identity(2)) == f);
            }
}

TEST_CASE("se maps") {
    CHECK(se(0, 1) == SimplexMap::identity(1));
    CHECK(as_vector(se(1, 3)) == std::vector<int>{1, 2});
    for (int n = 2; n <= 6; ++n)
        for (int i = 0; i + 1 < n; ++i) CHECK(se(i, n)(1) == se(i + 1, n)(0));
    CHECK_THROWS_AS(se(3, 3), Error);
    CHECK_THROWS_AS(se(0, 0), Error);
    CHECK_THROWS_AS(se(-1, 2), Error);
}

TEST_CASE("spine factorization: every unit-step edge is an se map") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& f : enumerate_maps(1, n))
            if (f(1) == f(0) + 1) CHECK(f == se(f(0), n));
}

TEST_CASE("enumerate_maps matches brute force, ordering and binomial counts") {
    const auto endo = enumerate_maps(1, 1);
    REQUIRE(endo.size() == 3);
    CHECK(as_vector(endo[0]) == std::vector<int>{0, 0});
    CHECK(as_vector(endo[1]) == std::vector<int>{0, 1});
    CHECK(as_vector(endo[2]) == std::vector<int>{1, 1});
    CHECK(enumerate_maps(2, 3).size() == 20);
    for (int n = 0; n <= 5; ++n) CHECK(enumerate_maps(0, n).size() == static_cast<std::size_t>(n + 1));
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m) {
            const auto maps = enumerate_maps(n, m);
            const auto oracle = brute_force_monotone(n, m);
            REQUIRE(maps.size() == oracle.size());
            CHECK(count_maps(n, m) == oracle.size());
            for (std::size_t k = 0; k < maps.size(); ++k) {
                CHECK(as_vector(maps[k]) == oracle[k]);
                CHECK(rank(maps[k]) == k);
            }
        }
}

TEST_CASE("enumerate_maps respects the budget") {
    CHECK_THROWS_AS(enumerate_maps(10, 10, 1000), Error);
    try {
        enumerate_maps(10, 10, 1000);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BudgetExceeded);
    }
}

TEST_CASE("cosimplicial identities hold up to degree 4") {
    auto d = [](int n, int i) { return SimplexMap::coface(n, i); };
    auto s = [](int n, int i) { return SimplexMap::codegeneracy(n, i); };
    // written "first, then": d_j d_i = d_i d_{j-1} becomes compose(d_i, d_j) etc.
    for (int n = 2; n <= 4; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                CHECK(compose(d(n - 1, i), d(n, j)) == compose(d(n - 1, j - 1), d(n, i)));
    for (int n = 0; n + 2 <= 4; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                CHECK(compose(s(n + 1, i), s(n, j)) == compose(s(n + 1, j + 1), s(n, i)));
    for (int n = 1; n + 1 <= 4; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                const auto lhs = compose(d(n + 1, i), s(n, j));
                if (i < j)
                    CHECK(lhs == compose(s(n - 1, j - 1), d(n, i)));
                else if (i == j || i == j + 1)
                    CHECK(lhs == SimplexMap::identity(n));
                else
                    CHECK(lhs == compose(s(n - 1, j), d(n, i - 1)));
            }
}

TEST_CASE("factorize reproduces every map") {
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 4; ++m)
            for (const auto& f : enumerate_maps(n, m)) {
                SimplexMap acc = SimplexMap::identity(n);
                for (const auto& g : factorize(f)) acc = compose(acc, g.as_map());
                CHECK(acc == f);
            }
    CHECK(factorize(SimplexMap::identity(3)).empty());
}

TEST_CASE("reverse_map") {
    CHECK(reverse_map(SimplexMap(1, {0})) == SimplexMap(1, {1}));
    for (int n = 0; n <= 4; ++n) CHECK(reverse_map(SimplexMap::identity(n)) == SimplexMap::identity(n));
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            for (const auto& f : enumerate_maps(n, m)) {
                CHECK(reverse_map(reverse_map(f)) == f);
                for (int p = 0; p <= 3; ++p)
                    for (const auto& g : enumerate_maps(m, p))
                        CHECK(reverse_map(compose(f, g)) == compose(reverse_map(f), reverse_map(g)));
            }
}

TEST_CASE("text form round trip") {
    const SimplexMap f(3, {0, 2, 2});
    CHECK(f.to_string() == "2->3:[0,2,2]");
    CHECK(SimplexMap::parse("2->3:[0,2,2]") == f);
    CHECK_THROWS_AS(SimplexMap::parse("2->3:[2,0,2]"), Error);
    CHECK_THROWS_AS(SimplexMap::parse("1->3:[0,2,2]"), Error);
    CHECK_THROWS_AS(SimplexMap::parse("garbage"), Error);
}

TEST_CASE("automorphisms of the truncated simplex category") {
    for (int degree : {1, 2, 3, 4}) {
        CAPTURE(degree);
        const auto found = automorphisms(degree);
        REQUIRE(found.size() == 2);
        CHECK(found[0].is_identity());
        for (const auto& [f, image] : found[1].table) CHECK(image == reverse_map(f));
        for (const auto& aut : found)
            for (const auto& [f, image] : aut.table) CHECK(aut.apply(image) == f);

        const auto oracle = oracle_automorphisms(degree);
        REQUIRE(oracle.size() == found.size());
        for (std::size_t k = 0; k < found.size(); ++k)
            for (const auto& [f, image] : found[k].table) CHECK(oracle[k].at(f) == image);
    }
    CHECK_THROWS_AS(automorphisms(5), Error);
}
