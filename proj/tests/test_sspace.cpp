#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "segalkit/corpus.hpp"
#include "segalkit/sspace.hpp"

using namespace segalkit;

namespace {

SimplicialSpace discrete_nerve(const FinCategory& c, int truncation = 3) {
    return discrete_levels(nerve(c, truncation), truncation);
}

FinCategory z2() { return cyclic_group(2); }

// Oracle: a discrete nerve is complete iff the only isomorphisms are identities.
bool only_identity_isos(const FinCategory& c) {
    for (int a = 0; a < c.arrow_count(); ++a)
        if (c.is_isomorphism(a) && !c.is_identity(a)) return false;
    return true;
}

}  // namespace

TEST_CASE("represented spaces") {
    const auto h1 = h_space(1);
    CHECK(h1.outer_truncation() == 3);
    CHECK(h1.level(0).count(0) == 2);
    CHECK(h1.level(1).count(0) == 3);
    CHECK(h1.level(2).count(0) == 4);
    CHECK(h1.level(1).count(3) == 3);
    // the outer action is the action of the represented simplicial set
    const auto d0 = outer_map(h1, SimplexMap::coface(1, 0));
    const auto std1 = standard(1, 3);
    for (int c = 0; c < 3; ++c) CHECK(d0(0, c) == std1.face(1, 0, c));
    CHECK(is_segal(h1).segal);
    CHECK(is_segal(h_space(2)).segal);
}

TEST_CASE("constant and discrete spaces of the point agree") {
    const auto p = point_sset(3);
    const auto c = constant_levels(p, 3);
    const auto d = discrete_levels(p, 3);
    for (int n = 0; n <= 3; ++n) CHECK(isomorphic(c.level(n), d.level(n)));
    CHECK(is_segal(constant_levels(p)).segal);
    CHECK(is_zero_local(constant_levels(nerve(linear(1)))));
}

TEST_CASE("outer identities are validated") {
    const auto x = h_space(1, 2, 1);
    auto faces = x.faces();
    faces[1][0] = x.face(1, 1);
    CHECK_THROWS_AS(SimplicialSpace(x.levels(), faces, x.degens()), Error);
    auto levels = x.levels();
    levels[0] = truncate(levels[0], 0);
    CHECK_THROWS_AS(SimplicialSpace(levels, x.faces(), x.degens()), Error);
}

TEST_CASE("discrete nerves are Segal and round-trip their category") {
    for (const auto& c : small_categories(2, 4)) {
        const auto x = discrete_nerve(c);
        CHECK(is_segal(x, CheckMode::Strict).segal);
        CHECK(is_segal(x, CheckMode::Pi0).segal);
        const auto hc = homotopy_cat(x);
        CHECK(find_isomorphism(hc.category, c).has_value());
    }
    const auto hp = homotopy_cat(h_space(0));
    CHECK(hp.category.object_count() == 1);
    CHECK(hp.category.arrow_count() == 1);
}

TEST_CASE("non-Segal spaces are caught") {
    // discrete levels of a hollow triangle
    std::vector<std::vector<bool>> keep(4);
    const auto d2 = standard(2, 3);
    for (int n = 0; n <= 3; ++n)
        for (int c = 0; c < d2.count(n); ++c) {
            std::set<int> verts;
            for (int k = 0; k <= n; ++k) verts.insert(act(d2, SimplexMap::vertex(n, k), c));
            keep[static_cast<std::size_t>(n)].push_back(verts.size() < 3);
        }
    const auto boundary = sub_sset(d2, keep).object;
    const auto x = discrete_levels(boundary, 2);
    const auto v = is_segal(x);
    CHECK_FALSE(v.segal);
    CHECK(v.degree == 2);
    CHECK_FALSE(is_segal(x, CheckMode::Pi0).segal);
    CHECK_THROWS_AS(homotopy_cat(x), Error);
}

TEST_CASE("hoequiv and completeness of discrete nerves") {
    const auto hi = hoequiv(discrete_nerve(interval_category()));
    CHECK(hi.level1_components == 3);
    CHECK(hi.components.size() == 2);
    const auto hb = hoequiv(discrete_nerve(bar_interval()));
    CHECK(hb.components.size() == 4);
    CHECK(hoequiv(discrete_nerve(point_category())).components.size() == 1);

    CHECK(is_complete(discrete_nerve(interval_category())).complete);
    const auto bar = is_complete(discrete_nerve(bar_interval()));
    CHECK_FALSE(bar.complete);
    CHECK(bar.level0_components == 2);
    CHECK(bar.hoequiv_components == 4);
    CHECK(is_complete(discrete_nerve(interval_category()), CheckMode::NerveEquivalence).complete);

    for (const auto& c : small_categories(2, 5)) {
        const auto x = discrete_nerve(c, 2);
        CAPTURE(c.object_count());
        CAPTURE(c.arrow_count());
        CHECK(is_complete(x).complete == only_identity_isos(c));
        // identities are always invertible
        const auto h = hoequiv(x);
        const auto comps = pi0(x.level(1));
        for (int v = 0; v < x.level(0).count(0); ++v)
            CHECK(std::count(h.components.begin(), h.components.end(), comps[static_cast<std::size_t>(x.degen(0, 0)(0, v))]) == 1);
    }
}

TEST_CASE("zero-locality") {
    CHECK(is_zero_local(constant_levels(nerve(bar_interval()))));
    CHECK_FALSE(is_zero_local(discrete_nerve(interval_category())));
    CHECK(is_zero_local(discrete_nerve(point_category())));
    // Pi0 sees the constant space on I as local, strict does too
    CHECK(is_zero_local(constant_levels(nerve(interval_category())), CheckMode::Strict));
    CHECK(is_zero_local(constant_levels(nerve(interval_category(), 2), 2), CheckMode::NerveEquivalence));
}

TEST_CASE("equivalence modes on maps") {
    const auto i = nerve(interval_category(), 2);
    const auto p = point_sset(2);
    std::vector<std::vector<int>> cells;
    for (int n = 0; n <= 2; ++n) cells.emplace_back(static_cast<std::size_t>(i.count(n)), 0);
    const SSetMap to_point(i, p, cells);
    CHECK_FALSE(is_equivalence(to_point, CheckMode::Strict));
    CHECK(is_equivalence(to_point, CheckMode::Pi0));
    CHECK_FALSE(is_equivalence(to_point, CheckMode::NerveEquivalence));
    const auto b = nerve(bar_interval(), 2);
    std::vector<std::vector<int>> bcells;
    for (int n = 0; n <= 2; ++n) bcells.emplace_back(static_cast<std::size_t>(b.count(n)), 0);
    CHECK(is_equivalence(SSetMap(b, p, bcells), CheckMode::NerveEquivalence));
    CHECK_THROWS_AS(is_equivalence(SSetMap(truncate(b, 1), truncate(p, 1), {bcells[0], bcells[1]}), CheckMode::NerveEquivalence), Error);
}

TEST_CASE("classification diagrams") {
    const auto pt = classification_diagram(RelCategory::minimal(point_category()));
    for (int n = 0; n <= 2; ++n) CHECK(pt.level(n).total_cells() == 3);

    const auto bar = classification_diagram(RelCategory::maximal(bar_interval()));
    CHECK(find_isomorphism(fundamental_category(bar.level(0)), bar_interval()).has_value());
    CHECK(pi0_count(bar.level(0)) == 1);

    // with identities only, every level is discrete and the diagram is the discrete nerve
    const auto l2 = linear(2);
    const auto m = classification_diagram(RelCategory::minimal(l2));
    const auto d = discrete_nerve(l2, 2);
    for (int n = 0; n <= 2; ++n) {
        CHECK(m.level(n).count(0) == d.level(n).count(0));
        CHECK(m.level(n).count(1) == m.level(n).count(0));
    }

    std::mt19937_64 rng(11);
    for (int k = 0; k < 15; ++k) {
        const auto r = random_relative_category(rng, 3);
        const auto x = classification_diagram(r);
        CHECK(is_segal(x, CheckMode::Strict).segal);
        CHECK(find_isomorphism(homotopy_cat(x).category, r.base()).has_value());
    }
    for (const auto& c : small_categories(2, 4)) {
        const auto x = classification_diagram(RelCategory::isomorphisms(c));
        CHECK(is_segal(x).segal);
        CHECK(find_isomorphism(homotopy_cat(x).category, c).has_value());
        CHECK(is_complete(x).complete);
    }
}

TEST_CASE("Yoneda for represented spaces") {
    const auto x = discrete_nerve(bar_interval(), 2);
    for (int n = 0; n <= 2; ++n) CHECK(space_mapset(h_space(n, 2, 2), x).size() == static_cast<std::size_t>(x.level(n).count(0)));
    const auto k = constant_levels(nerve(linear(1), 2), 2);
    for (int n = 0; n <= 2; ++n) CHECK(space_mapset(h_space(n, 2, 2), k).size() == 2);
    CHECK_THROWS_AS(space_mapset(h_space(0, 2, 2), h_space(0, 3, 2)), Error);
}

TEST_CASE("check mode names") {
    for (auto m : {CheckMode::Strict, CheckMode::Pi0, CheckMode::NerveEquivalence}) CHECK(parse_check_mode(to_string(m)) == m);
    CHECK_FALSE(parse_check_mode("weak").has_value());
}
