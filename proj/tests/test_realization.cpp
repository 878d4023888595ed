#include "doctest.h"

#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "segalkit/corpus.hpp"
#include "segalkit/realization.hpp"

using namespace segalkit;

namespace {

FinSSet circle(int truncation) {
    std::vector<std::vector<std::pair<int, int>>> pairs(static_cast<std::size_t>(truncation) + 1);
    pairs[0].push_back({0, 1});
    return quotient(standard(1, truncation), pairs).object;
}

// Oracle: the coend over every map of the truncated simplex category, with a
// plain class count per degree.
std::vector<int> full_coend_counts(const SimplicialSpace& x) {
    const int N = x.outer_truncation();
    const int T = std::min(N, x.inner_truncation());
    std::vector<int> counts;
    for (int k = 0; k <= T; ++k) {
        std::map<std::tuple<int, std::vector<int>, int>, int> id;
        std::vector<int> parent;
        auto node = [&](int n, const SimplexMap& theta, int c) {
            auto [it, fresh] = id.emplace(std::tuple{n, std::vector<int>(theta.images().begin(), theta.images().end()), c}, static_cast<int>(parent.size()));
            if (fresh) parent.push_back(it->second);
            return it->second;
        };
        std::function<int(int)> find = [&](int v) { return parent[static_cast<std::size_t>(v)] == v ? v : find(parent[static_cast<std::size_t>(v)]); };
        for (int n = 0; n <= N; ++n)
            for (const auto& theta : enumerate_maps(k, n))
                for (int c = 0; c < x.level(n).count(k); ++c) node(n, theta, c);
        for (int m = 0; m <= N; ++m)
            for (int n = 0; n <= N; ++n)
                for (const auto& alpha : enumerate_maps(m, n)) {
                    const auto pull = outer_map(x, alpha);
                    for (const auto& theta : enumerate_maps(k, m))
                        for (int c = 0; c < x.level(n).count(k); ++c) {
                            const int a = find(node(n, compose(theta, alpha), c));
                            const int b = find(node(m, theta, pull(k, c)));
                            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
                        }
                }
        int classes = 0;
        for (std::size_t v = 0; v < parent.size(); ++v) classes += find(static_cast<int>(v)) == static_cast<int>(v);
        counts.push_back(classes);
    }
    return counts;
}

}  // namespace

TEST_CASE("realization of constant and discrete spaces") {
    for (const auto& k : {nerve(interval_category()), circle(3), standard(2, 3)}) {
        CHECK(isomorphic(realize(constant_levels(k)), k));
        CHECK(isomorphic(diagonal(constant_levels(k)), k));
        CHECK(isomorphic(realize(discrete_levels(k)), k));
        CHECK(isomorphic(diagonal(discrete_levels(k)), k));
    }
    for (const auto& c : small_categories(2, 4)) CHECK(isomorphic(realize(discrete_levels(nerve(c))), nerve(c)));
    CHECK(diagonal(h_space(1)).count(1) == 3);
    CHECK(realize(h_space(1)).count(1) == 3);
}

TEST_CASE("realization agrees with the diagonal on random spaces") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 100; ++t) {
        const int outer = 1 + static_cast<int>(rng() % 3);
        const int inner = 1 + static_cast<int>(rng() % 3);
        const auto x = random_space(rng, outer, inner);
        for (const auto& l : x.levels())
            for (int d = 0; d <= inner; ++d) CHECK(l.count(d) <= 20);
        const auto to_diag = realization_to_diagonal(x);
        CHECK(to_diag.is_isomorphism());
        const auto diag = diagonal(x);
        std::vector<int> expected;
        for (int d = 0; d <= diag.truncation(); ++d) expected.push_back(diag.count(d));
        CHECK(full_coend_counts(x) == expected);
        CHECK(level0_to_realization(x).target().total_cells() == diag.total_cells());
    }
}

TEST_CASE("realization is functorial") {
    const auto a = h_space(0, 2, 2), b = h_space(1, 2, 2), c = discrete_levels(nerve(bar_interval(), 2), 2);
    const auto fs = space_mapset(a, b);
    const auto gs = space_mapset(b, c);
    CHECK(fs.size() == 2);
    CHECK(gs.size() == 4);
    for (const auto& f : fs)
        for (const auto& g : gs) {
            std::vector<SSetMap> fg;
            for (std::size_t n = 0; n < f.size(); ++n) fg.push_back(compose(f[n], g[n]));
            CHECK(realize_map(a, c, fg) == compose(realize_map(a, b, f), realize_map(b, c, g)));
        }
}

TEST_CASE("homotopy fiber products") {
    const int T = 2;
    const auto ni = nerve(interval_category(), T);
    const auto x = yoneda_map(ni, 0, 0), y = yoneda_map(ni, 0, 1);
    const auto cross = c_fiber_product(x, y);
    for (int d = 0; d <= T; ++d) CHECK(cross.count(d) == 1);
    CHECK(c_fiber_product(y, x).count(0) == 0);

    const auto p = point_sset(T);
    const auto k = circle(T);
    std::vector<std::vector<int>> to_point;
    for (int d = 0; d <= T; ++d) to_point.emplace_back(static_cast<std::size_t>(k.count(d)), 0);
    const SSetMap f(k, p, to_point);
    CHECK(isomorphic(c_fiber_product(f, f), product(k, k)));

    const auto id = identity_map(ni);
    CHECK(isomorphic(c_fiber_product(id, id), internal_hom(standard(1, T), ni).object));
}

TEST_CASE("nerves of maps") {
    const int T = 2;
    const auto p = point_sset(T);
    const auto tn = c_nerve(identity_map(p), 2);
    for (const auto& l : tn.space.levels()) CHECK(l.total_cells() == T + 1);

    for (const auto& a : {interval_category(), bar_interval(), linear(2), point_category()}) {
        const auto x = discrete_levels(nerve(a, T), T);
        const auto inc = level0_to_realization(x);
        const auto cn = c_nerve(inc, 2);
        for (int n = 0; n <= 2; ++n) CHECK(isomorphic(cn.space.level(n), x.level(n)));
        CHECK(isomorphic(cn.space.level(1), c_fiber_product(inc, inc)));
    }
}

TEST_CASE("space constructions") {
    const auto e = external_product(standard(1, 2), circle(2));
    CHECK(isomorphic(diagonal(e), product(standard(1, 2), circle(2))));
    const auto s = space_coproduct(h_space(0, 2, 2), h_space(1, 2, 2));
    CHECK(pi0_count(realize(s)) == 2);
}
