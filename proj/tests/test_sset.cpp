#include "doctest.h"

#include <algorithm>
#include <set>

#include "segalkit/sset.hpp"

using namespace segalkit;

namespace {

std::vector<int> counts(const FinSSet& x) {
    std::vector<int> out;
    for (int n = 0; n <= x.truncation(); ++n) out.push_back(x.count(n));
    return out;
}

// Oracle: sequences of n+1 objects in a category with a unique arrow between
// any two objects related by `le`.
int count_object_sequences(int objects, int n, bool (*le)(int, int)) {
    std::vector<int> seq(static_cast<std::size_t>(n) + 1, 0);
    int total = 0;
    while (true) {
        bool ok = true;
        for (int k = 0; k < n; ++k) ok = ok && le(seq[static_cast<std::size_t>(k)], seq[static_cast<std::size_t>(k) + 1]);
        total += ok;
        int pos = n;
        while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == objects - 1) seq[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) return total;
        ++seq[static_cast<std::size_t>(pos)];
    }
}

FinCategory two_parallel() {
    std::vector<Arrow> arrows{{"1a", 0, 0}, {"1b", 1, 1}, {"f", 0, 1}, {"g", 0, 1}};
    return FinCategory({"a", "b"}, arrows, {0, 1}, {});
}

FinCategory idempotent() {
    std::vector<Arrow> arrows{{"1", 0, 0}, {"e", 0, 0}};
    const std::vector<Composite> c{{1, 1, 1}};
    return FinCategory({"*"}, arrows, {0}, c);
}

std::vector<FinCategory> small_categories() {
    return {empty_category(), point_category(), linear(1), bar_interval(), cyclic_group(2),
            two_parallel(),   idempotent(),     discrete_category(2), linear(2)};
}

}  // namespace

TEST_CASE("standard simplices") {
    CHECK(counts(standard(0, 3)) == std::vector<int>{1, 1, 1, 1});
    CHECK(counts(standard(1, 2)) == std::vector<int>{2, 3, 4});
    for (int n = 0; n <= 3; ++n) {
        const auto s = standard(n, 3);
        for (int k = 0; k <= 3; ++k) {
            REQUIRE(s.count(k) == static_cast<int>(enumerate_maps(k, n).size()));
            // naturality: the action of theta : [j] -> [k] is precomposition
            const auto cells = enumerate_maps(k, n);
            for (int j = 0; j <= 3; ++j)
                for (const auto& theta : enumerate_maps(j, k))
                    for (std::size_t c = 0; c < cells.size(); ++c)
                        CHECK(act(s, theta, static_cast<int>(c)) == static_cast<int>(rank(compose(theta, cells[c]))));
        }
    }
    const auto s2 = standard(2, 3);
    CHECK(s2.label(1, 0) == "0,0");
    CHECK(s2.find_cell(2, "0,1,2") >= 0);
    CHECK_FALSE(s2.is_degenerate(2, s2.find_cell(2, "0,1,2")));
    CHECK(s2.is_degenerate(2, s2.find_cell(2, "0,1,1")));
}

TEST_CASE("validation names the broken identity") {
    const auto s1 = standard(1, 1);
    std::vector<std::vector<std::string>> labels = s1.labels();
    std::vector<std::vector<std::vector<int>>> faces(2), degens(2);
    for (int i = 0; i <= 1; ++i) {
        std::vector<int> col;
        for (int c = 0; c < s1.count(1); ++c) col.push_back(s1.face(1, i, c));
        faces[1].push_back(col);
    }
    std::vector<int> s0{s1.degen(0, 0, 0), s1.degen(0, 0, 1)};
    std::swap(s0[0], s0[1]);  // s0 of vertex 0 now has the wrong faces
    degens[0].push_back(s0);
    try {
        FinSSet(1, labels, faces, degens);
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidInput);
        const std::string what = e.what();
        CHECK(what.find("degree 0") != std::string::npos);
        CHECK(what.find("'0'") != std::string::npos);
    }
}

TEST_CASE("nerves") {
    CHECK(counts(nerve(bar_interval(), 3)) == std::vector<int>{2, 4, 8, 16});
    CHECK(counts(nerve(linear(1), 3)) == std::vector<int>{2, 3, 4, 5});
    for (int n = 0; n <= 3; ++n) {
        CHECK(nerve(bar_interval(), 3).count(n) == count_object_sequences(2, n, [](int, int) { return true; }));
        CHECK(nerve(linear(1), 3).count(n) == count_object_sequences(2, n, [](int a, int b) { return a <= b; }));
    }
    CHECK(isomorphic(nerve(point_category(), 3), standard(0, 3)));
    for (int n = 0; n <= 3; ++n) CHECK(isomorphic(nerve(linear(n), 3), standard(n, 3)));
    const auto n2 = nerve(linear(2), 2);
    const int c = n2.find_cell(2, "0->1,1->2");
    REQUIRE(c >= 0);
    CHECK(n2.label(1, n2.face(2, 1, c)) == "0->2");
    CHECK(n2.label(1, n2.face(2, 0, c)) == "1->2");
    CHECK(n2.label(1, n2.face(2, 2, c)) == "0->1");
}

TEST_CASE("pi0") {
    CHECK(pi0_count(nerve(bar_interval())) == 1);
    const auto pp = coproduct(point_sset(), point_sset()).object;
    CHECK(pi0_count(pp) == 2);
    const auto cats = small_categories();
    for (const auto& a : cats)
        for (const auto& b : cats) {
            const auto x = nerve(a), y = nerve(b);
            CHECK(pi0_count(coproduct(x, y).object) == pi0_count(x) + pi0_count(y));
        }
    CHECK(pi0_count(nerve(discrete_category(3))) == 3);
    CHECK(pi0_count(FinSSet(3)) == 0);
}

TEST_CASE("limits and colimits") {
    CHECK(product(standard(1), standard(1)).count(1) == 9);
    const auto pp = coproduct(point_sset(), point_sset());
    const auto empty = pullback(pp.left, pp.right).object;
    CHECK(empty.total_cells() == 0);
    CHECK(isomorphic(pullback(pp.left, pp.left).object, point_sset()));

    const auto s1 = standard(1, 2);
    const auto p = point_sset(2);
    const SSetMap v0(p, s1, {{0}, {0}, {0}});
    const SSetMap v1(p, s1, {{1}, {2}, {3}});
    const auto q = coequalizer(v0, v1).object;
    CHECK(q.count(0) == 1);
    CHECK(q.count(1) == 2);
    int nondegenerate = 0;
    for (int e = 0; e < q.count(1); ++e) nondegenerate += !q.is_degenerate(1, e);
    CHECK(nondegenerate == 1);
}

TEST_CASE("coequalizer universal property on a small instance") {
    const auto s1 = standard(1, 2);
    const auto p = point_sset(2);
    const SSetMap v0(p, s1, {{0}, {0}, {0}});
    const SSetMap v1(p, s1, {{1}, {2}, {3}});
    const auto q = coequalizer(v0, v1);
    for (const auto& target : {nerve(cyclic_group(2), 2), nerve(linear(1), 2), nerve(idempotent(), 2)}) {
        for (const auto& h : mapset(s1, target)) {
            if (compose(v0, h) != compose(v1, h)) continue;
            int factorizations = 0;
            for (const auto& k : mapset(q.object, target)) factorizations += compose(q.projection, k) == h;
            CHECK(factorizations == 1);
        }
    }
}

TEST_CASE("coproduct universal property") {
    const auto x = nerve(linear(1), 2), y = standard(0, 2);
    const auto c = coproduct(x, y);
    const auto z = nerve(bar_interval(), 2);
    for (const auto& f : mapset(x, z))
        for (const auto& g : mapset(y, z)) {
            int factorizations = 0;
            for (const auto& h : mapset(c.object, z))
                factorizations += compose(c.left, h) == f && compose(c.right, h) == g;
            CHECK(factorizations == 1);
        }
}

TEST_CASE("A3: disjoint and universal coproducts") {
    const auto x = nerve(linear(1)), y = nerve(bar_interval());
    const auto c = coproduct(x, y);
    CHECK(isomorphic(pullback(c.left, c.left).object, x));
    CHECK(isomorphic(pullback(c.right, c.right).object, y));
    CHECK(pullback(c.left, c.right).object.total_cells() == 0);
    CHECK(pullback(c.right, c.left).object.total_cells() == 0);
}

TEST_CASE("mapset") {
    CHECK(mapset(point_sset(), FinSSet(3)).empty());
    CHECK(mapset(FinSSet(3), point_sset()).size() == 1);
    CHECK(mapset(point_sset(), nerve(linear(1))).size() == 2);
    CHECK(mapset(standard(1), nerve(linear(1))).size() == 3);
    // Yoneda: maps out of standard(n) are the degree-n cells
    const auto cats = small_categories();
    for (const auto& a : cats) {
        const auto x = nerve(a);
        for (int n = 0; n <= 3; ++n) {
            const auto maps = mapset(standard(n), x);
            REQUIRE(static_cast<int>(maps.size()) == x.count(n));
            const int top = static_cast<int>(rank(SimplexMap::identity(n)));
            std::set<int> hit;
            for (const auto& f : maps) hit.insert(f(n, top));
            CHECK(static_cast<int>(hit.size()) == x.count(n));
        }
    }
    CHECK_THROWS_AS(mapset(nerve(discrete_category(6)), nerve(discrete_category(6)), 1000), Error);
}

TEST_CASE("nerve is fully faithful on small categories") {
    const auto cats = small_categories();
    for (const auto& a : cats)
        for (const auto& b : cats) {
            const auto functors = enumerate_functors(a, b);
            CHECK(mapset(nerve(a), nerve(b)).size() == functors.size());
            for (const auto& f : functors) CHECK(nerve_of_functor(a, b, f).source() == nerve(a));
        }
}

TEST_CASE("internal hom") {
    const auto ni = nerve(linear(1), 2);
    CHECK(internal_hom(standard(1, 2), ni).object.count(0) == 3);
    CHECK(isomorphic(internal_hom(standard(0, 2), ni).object, ni));
    CHECK(isomorphic(internal_hom(ni, point_sset(2)).object, point_sset(2)));
    // degree-0 adjunction: maps Z x X -> Y versus maps Z -> hom(X, Y)
    const std::vector<FinSSet> zs{point_sset(2), standard(1, 2), nerve(discrete_category(2), 2)};
    const std::vector<FinSSet> xs{standard(1, 2), nerve(discrete_category(2), 2)};
    const std::vector<FinSSet> ys{ni, nerve(bar_interval(), 2)};
    for (const auto& z : zs)
        for (const auto& x : xs)
            for (const auto& y : ys)
                CHECK(mapset(product(z, x), y).size() == mapset(z, internal_hom(x, y).object).size());
}

TEST_CASE("evaluation at vertices") {
    const auto ni = nerve(linear(1), 2);
    const auto hom = internal_hom(standard(1, 2), ni);
    const auto e0 = evaluate_at_vertex(hom, 1, 0, ni);
    const auto e1 = evaluate_at_vertex(hom, 1, 1, ni);
    std::multiset<std::pair<int, int>> ends;
    for (int c = 0; c < hom.object.count(0); ++c) ends.insert({e0(0, c), e1(0, c)});
    CHECK(ends == std::multiset<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("strict Segal recognition") {
    for (const auto& a : small_categories()) CHECK(is_strict_segal(nerve(a)).segal);
    CHECK(is_strict_segal(standard(0)).segal);
    const auto s2 = standard(2, 3);
    const auto hollow = remove_cell(s2, 2, s2.find_cell(2, "0,1,2")).object;
    const auto w = is_strict_segal(hollow);
    CHECK_FALSE(w.segal);
    CHECK(w.degree == 2);
    CHECK(w.tuple.size() == 2);
    // two fillers for one spine
    const auto pp = coproduct(standard(2, 2), standard(2, 2));
    std::vector<std::vector<std::pair<int, int>>> glue(3);
    const auto a = pp.object.find_cell(1, "l.0,1"), b = pp.object.find_cell(1, "r.0,1");
    const auto c = pp.object.find_cell(1, "l.1,2"), d = pp.object.find_cell(1, "r.1,2");
    glue[1] = {{a, b}, {c, d}};
    const auto glued = quotient(pp.object, glue).object;
    CHECK_FALSE(is_strict_segal(glued).segal);
}

TEST_CASE("fundamental category") {
    for (const auto& a : small_categories()) CHECK(find_isomorphism(fundamental_category(nerve(a)), a).has_value());
    for (int n = 0; n <= 3; ++n) CHECK(find_isomorphism(fundamental_category(standard(n)), linear(n)).has_value());
    const auto s2 = standard(2, 3);
    CHECK_THROWS_AS(fundamental_category(remove_cell(s2, 2, s2.find_cell(2, "0,1,2")).object), Error);
    CHECK_THROWS_AS(fundamental_category(standard(1, 1)), Error);
}

TEST_CASE("sub simplicial sets and images") {
    const auto s1 = standard(1, 2);
    std::vector<std::vector<bool>> keep{{true, true}, {true, false, true}, {true, false, false, true}};
    const auto inc = sub_sset(s1, keep);
    CHECK(counts(inc.object) == std::vector<int>{2, 2, 2});
    keep[0][1] = false;
    CHECK_THROWS_AS(sub_sset(s1, keep), Error);
    const SSetMap v0(point_sset(2), s1, {{0}, {0}, {0}});
    CHECK(isomorphic(image(v0).object, point_sset(2)));
}
