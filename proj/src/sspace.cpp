#include "segalkit/sspace.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace segalkit {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
    return out;
}

bool is_discrete(const FinSSet& x) {
    for (int n = 1; n <= x.truncation(); ++n)
        for (int c = 0; c < x.count(n); ++c)
            if (!x.is_degenerate(n, c)) return false;
    return true;
}

}  // namespace

SimplicialSpace::SimplicialSpace(std::vector<FinSSet> levels, std::vector<std::vector<SSetMap>> faces,
                                 std::vector<std::vector<SSetMap>> degens)
    : levels_(std::move(levels)), faces_(std::move(faces)), degens_(std::move(degens)) {
    if (levels_.empty()) fail(ErrorCode::InvalidInput, "a simplicial space needs at least level 0");
    const int N = outer_truncation();
    const int D = levels_[0].truncation();
    for (const auto& l : levels_)
        if (l.truncation() != D) fail(ErrorCode::TruncationMismatch, "levels have different inner truncations");
    faces_.resize(sz(N) + 1);
    degens_.resize(sz(N) + 1);
    auto where = [](const char* kind, int n, int i) {
        return std::string("outer ") + kind + std::to_string(i) + " of level " + std::to_string(n);
    };
    for (int n = 0; n <= N; ++n) {
        if (static_cast<int>(faces_[sz(n)].size()) != (n == 0 ? 0 : n + 1))
            fail(ErrorCode::InvalidInput, "level " + std::to_string(n) + " needs " + std::to_string(n == 0 ? 0 : n + 1) + " outer faces");
        if (static_cast<int>(degens_[sz(n)].size()) != (n < N ? n + 1 : 0))
            fail(ErrorCode::InvalidInput, "level " + std::to_string(n) + " needs " + std::to_string(n < N ? n + 1 : 0) + " outer degeneracies");
        for (int i = 0; i < static_cast<int>(faces_[sz(n)].size()); ++i)
            if (!(face(n, i).source() == level(n)) || !(face(n, i).target() == level(n - 1)))
                fail(ErrorCode::InvalidInput, where("d", n, i) + " has the wrong endpoints");
        for (int i = 0; i < static_cast<int>(degens_[sz(n)].size()); ++i)
            if (!(degen(n, i).source() == level(n)) || !(degen(n, i).target() == level(n + 1)))
                fail(ErrorCode::InvalidInput, where("s", n, i) + " has the wrong endpoints");
    }
    auto broken = [](const std::string& law, int n) {
        fail(ErrorCode::InvalidInput, "outer identity " + law + " fails on level " + std::to_string(n));
    };
    for (int n = 2; n <= N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                if (compose(face(n, j), face(n - 1, i)) != compose(face(n, i), face(n - 1, j - 1)))
                    broken("d" + std::to_string(i) + "d" + std::to_string(j), n);
    for (int n = 0; n < N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                const auto lhs = compose(degen(n, j), face(n + 1, i));
                const std::string law = "d" + std::to_string(i) + "s" + std::to_string(j);
                if (i < j) {
                    if (lhs != compose(face(n, i), degen(n - 1, j - 1))) broken(law, n);
                } else if (i == j || i == j + 1) {
                    if (lhs != identity_map(level(n))) broken(law + " = id", n);
                } else if (lhs != compose(face(n, i - 1), degen(n - 1, j))) {
                    broken(law, n);
                }
            }
    for (int n = 0; n + 2 <= N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                if (compose(degen(n, j), degen(n + 1, i)) != compose(degen(n, i), degen(n + 1, j + 1)))
                    broken("s" + std::to_string(i) + "s" + std::to_string(j), n);
}

SSetMap outer_map(const SimplicialSpace& x, const SimplexMap& theta) {
    if (theta.codomain() > x.outer_truncation() || theta.domain() > x.outer_truncation())
        fail(ErrorCode::TruncationMismatch, "simplex map " + theta.to_string() + " leaves the stored levels");
    SSetMap result = identity_map(x.level(theta.codomain()));
    const auto word = factorize(theta);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        result = compose(result, it->kind == Generator::Kind::Coface ? x.face(it->degree, it->index)
                                                                     : x.degen(it->degree, it->index));
    return result;
}

SimplicialSpace discrete_levels(const FinSSet& k, int inner_truncation) {
    const int N = k.truncation();
    std::vector<FinSSet> levels;
    for (int n = 0; n <= N; ++n) levels.push_back(discrete_sset(k.labels()[sz(n)], inner_truncation));
    auto lift = [&](const FinSSet& src, const FinSSet& tgt, const std::function<int(int)>& on_cells) {
        std::vector<std::vector<int>> cells(sz(inner_truncation) + 1);
        for (int d = 0; d <= inner_truncation; ++d)
            for (int c = 0; c < src.count(0); ++c) cells[sz(d)].push_back(on_cells(c));
        return SSetMap::trusted(src, tgt, std::move(cells));
    };
    std::vector<std::vector<SSetMap>> faces(sz(N) + 1), degens(sz(N) + 1);
    for (int n = 0; n <= N; ++n) {
        for (int i = 0; n > 0 && i <= n; ++i)
            faces[sz(n)].push_back(lift(levels[sz(n)], levels[sz(n - 1)], [&](int c) { return k.face(n, i, c); }));
        for (int i = 0; n < N && i <= n; ++i)
            degens[sz(n)].push_back(lift(levels[sz(n)], levels[sz(n + 1)], [&](int c) { return k.degen(n, i, c); }));
    }
    return SimplicialSpace(std::move(levels), std::move(faces), std::move(degens));
}

SimplicialSpace constant_levels(const FinSSet& k, int outer_truncation) {
    std::vector<FinSSet> levels(sz(outer_truncation) + 1, k);
    std::vector<std::vector<SSetMap>> faces(sz(outer_truncation) + 1), degens(sz(outer_truncation) + 1);
    const auto id = identity_map(k);
    for (int n = 0; n <= outer_truncation; ++n) {
        if (n > 0) faces[sz(n)].assign(sz(n) + 1, id);
        if (n < outer_truncation) degens[sz(n)].assign(sz(n) + 1, id);
    }
    return SimplicialSpace(std::move(levels), std::move(faces), std::move(degens));
}

SimplicialSpace h_space(int n, int outer_truncation, int inner_truncation) {
    return discrete_levels(standard(n, outer_truncation), inner_truncation);
}

const char* to_string(CheckMode mode) noexcept {
    switch (mode) {
    case CheckMode::Strict: return "strict";
    case CheckMode::Pi0: return "pi0";
    case CheckMode::NerveEquivalence: return "nerve-equivalence";
    }
    return "unknown";
}

std::optional<CheckMode> parse_check_mode(std::string_view text) {
    if (text == "strict") return CheckMode::Strict;
    if (text == "pi0") return CheckMode::Pi0;
    if (text == "nerve-equivalence") return CheckMode::NerveEquivalence;
    return std::nullopt;
}

SegalMap segal_map(const SimplicialSpace& x, int n) {
    if (n < 1 || n > x.outer_truncation()) fail(ErrorCode::IndexOutOfRange, "Segal map degree out of range");
    const int D = x.inner_truncation();
    const SSetMap& source = x.face(1, 1);
    const SSetMap& target = x.face(1, 0);
    FinSSet power = x.level(1);
    SSetMap last = identity_map(power);
    // index[j][d]: (index in the j-fold power, edge) -> index in the (j+1)-fold power
    std::vector<std::vector<std::map<std::pair<int, int>, int>>> index;
    for (int j = 1; j < n; ++j) {
        const auto pb = pullback(compose(last, target), source);
        std::vector<std::map<std::pair<int, int>, int>> level_index(sz(D) + 1);
        for (int d = 0; d <= D; ++d)
            for (int c = 0; c < pb.object.count(d); ++c) level_index[sz(d)].emplace(std::pair{pb.left(d, c), pb.right(d, c)}, c);
        index.push_back(std::move(level_index));
        power = pb.object;
        last = pb.right;
    }
    std::vector<SSetMap> edges;
    for (int i = 0; i < n; ++i) edges.push_back(outer_map(x, se(i, n)));
    std::vector<std::vector<int>> cells(sz(D) + 1);
    for (int d = 0; d <= D; ++d)
        for (int c = 0; c < x.level(n).count(d); ++c) {
            int at = edges[0](d, c);
            bool found = true;
            for (int j = 1; j < n && found; ++j) {
                auto it = index[sz(j - 1)][sz(d)].find({at, edges[sz(j)](d, c)});
                found = it != index[sz(j - 1)][sz(d)].end();
                if (found) at = it->second;
            }
            if (!found) fail(ErrorCode::InvalidInput, "spine of a cell is not composable");
            cells[sz(d)].push_back(at);
        }
    return {power, SSetMap::trusted(x.level(n), power, std::move(cells))};
}

Functor induced_functor(const SSetMap& f) {
    Functor out;
    out.on_objects = f.cells().at(0);
    out.on_arrows = f.cells().at(1);
    return out;
}

namespace {

bool pi0_bijective(const SSetMap& f) {
    const auto src = pi0(f.source());
    const auto tgt = pi0(f.target());
    const int ns = src.empty() ? 0 : *std::max_element(src.begin(), src.end()) + 1;
    const int nt = tgt.empty() ? 0 : *std::max_element(tgt.begin(), tgt.end()) + 1;
    if (ns != nt) return false;
    std::vector<int> image(sz(ns), -1);
    std::set<int> hit;
    for (int v = 0; v < f.source().count(0); ++v) {
        const int t = tgt[sz(f(0, v))];
        int& slot = image[sz(src[sz(v)])];
        if (slot >= 0 && slot != t) return false;
        slot = t;
        hit.insert(t);
    }
    return static_cast<int>(hit.size()) == nt;
}

}  // namespace

bool is_equivalence(const SSetMap& f, CheckMode mode) {
    switch (mode) {
    case CheckMode::Strict: return f.is_isomorphism();
    case CheckMode::Pi0: return pi0_bijective(f);
    case CheckMode::NerveEquivalence: {
        if (f.source().truncation() < 2 || !is_strict_segal(f.source()).segal || !is_strict_segal(f.target()).segal)
            fail(ErrorCode::OracleUnavailable, "equivalence oracle needs nerves (strict Segal, truncation >= 2)");
        const auto a = fundamental_category(f.source());
        const auto b = fundamental_category(f.target());
        return is_equivalence(a, b, induced_functor(f));
    }
    }
    return false;
}

SegalVerdict is_segal(const SimplicialSpace& x, CheckMode mode) {
    SegalVerdict v;
    v.mode = mode;
    for (int n = 2; n <= x.outer_truncation(); ++n) {
        if (mode == CheckMode::Pi0) {
            // pi0(X_n) -> pi0(X_1) x_{pi0 X_0} ... x_{pi0 X_0} pi0(X_1)
            const auto c0 = pi0(x.level(0));
            const auto c1 = pi0(x.level(1));
            const auto cn = pi0(x.level(n));
            const int k1 = pi0_count(x.level(1));
            std::vector<int> rep(sz(k1), -1);
            for (int v1 = 0; v1 < x.level(1).count(0); ++v1)
                if (rep[sz(c1[sz(v1)])] < 0) rep[sz(c1[sz(v1)])] = v1;
            auto src = [&](int comp) { return c0[sz(x.face(1, 1)(0, rep[sz(comp)]))]; };
            auto tgt = [&](int comp) { return c0[sz(x.face(1, 0)(0, rep[sz(comp)]))]; };
            std::vector<SSetMap> edges;
            for (int i = 0; i < n; ++i) edges.push_back(outer_map(x, se(i, n)));
            std::map<int, std::vector<int>> tuple_of;  // component of X_n -> tuple
            std::map<std::vector<int>, int> comp_of;
            for (int c = 0; c < x.level(n).count(0); ++c) {
                std::vector<int> t;
                for (const auto& e : edges) t.push_back(c1[sz(e(0, c))]);
                tuple_of.emplace(cn[sz(c)], t);
                auto [it, fresh] = comp_of.emplace(t, cn[sz(c)]);
                if (!fresh && it->second != cn[sz(c)]) {
                    v = {false, mode, n, "two components of level " + std::to_string(n) + " have the same spine components"};
                    return v;
                }
            }
            std::vector<int> tuple;
            bool missing = false;
            std::function<void()> extend = [&] {
                if (missing) return;
                if (static_cast<int>(tuple.size()) == n) {
                    missing = !comp_of.count(tuple);
                    return;
                }
                for (int a = 0; a < k1 && !missing; ++a) {
                    if (!tuple.empty() && src(a) != tgt(tuple.back())) continue;
                    tuple.push_back(a);
                    extend();
                    if (!missing) tuple.pop_back();
                }
            };
            extend();
            if (missing) {
                v = {false, mode, n, "a composable tuple of level-1 components has no preimage in level " + std::to_string(n)};
                return v;
            }
            continue;
        }
        const auto sm = segal_map(x, n);
        if (mode == CheckMode::Strict) {
            for (int d = 0; d <= x.inner_truncation(); ++d) {
                if (x.level(n).count(d) != sm.fiber_power.count(d) || !sm.map.is_isomorphism()) {
                    v = {false, mode, n,
                         "inner degree " + std::to_string(d) + ": level " + std::to_string(n) + " has " +
                             std::to_string(x.level(n).count(d)) + " cells, the fiber power " +
                             std::to_string(sm.fiber_power.count(d))};
                    if (x.level(n).count(d) != sm.fiber_power.count(d) || d == x.inner_truncation()) return v;
                }
            }
        } else if (!is_equivalence(sm.map, CheckMode::NerveEquivalence)) {
            v = {false, mode, n, "Segal map of level " + std::to_string(n) + " is not an equivalence of categories"};
            return v;
        }
    }
    return v;
}

HomotopyCategory homotopy_cat(const SimplicialSpace& x) {
    if (x.outer_truncation() < 2) fail(ErrorCode::NotSegal, "homotopy category needs outer truncation >= 2");
    const FinSSet& l0 = x.level(0);
    const FinSSet& l1 = x.level(1);
    const FinSSet& l2 = x.level(2);
    const SSetMap& src = x.face(1, 1);
    const SSetMap& tgt = x.face(1, 0);
    HomotopyCategory out;
    out.level0_discrete = is_discrete(l0);

    // union-find over level-1 vertices along inner edges in the strict fibers
    std::vector<int> parent(sz(l1.count(0)));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[sz(v)] == v ? v : parent[sz(v)] = find(parent[sz(v)]); };
    if (l1.truncation() >= 1)
        for (int e = 0; e < l1.count(1); ++e) {
            const int a = l1.face(1, 1, e), b = l1.face(1, 0, e);
            const int x0 = src(0, a), y0 = tgt(0, a);
            if (src(1, e) != l0.degen(0, 0, x0) || tgt(1, e) != l0.degen(0, 0, y0)) continue;
            const int ra = find(a), rb = find(b);
            if (ra != rb) parent[sz(std::max(ra, rb))] = std::min(ra, rb);
        }
    std::vector<Arrow> arrows;
    std::map<int, int> arrow_of_root;
    out.arrow_of_vertex.assign(sz(l1.count(0)), -1);
    for (int v = 0; v < l1.count(0); ++v) {
        const int r = find(v);
        auto [it, fresh] = arrow_of_root.emplace(r, static_cast<int>(arrows.size()));
        if (fresh) arrows.push_back({l1.label(0, v), src(0, v), tgt(0, v)});
        out.arrow_of_vertex[sz(v)] = it->second;
    }
    std::vector<int> identities;
    for (int v = 0; v < l0.count(0); ++v) identities.push_back(out.arrow_of_vertex[sz(x.degen(0, 0)(0, v))]);

    std::map<std::pair<int, int>, int> table;
    for (int w = 0; w < l2.count(0); ++w) {
        const int f = out.arrow_of_vertex[sz(x.face(2, 2)(0, w))];
        const int g = out.arrow_of_vertex[sz(x.face(2, 0)(0, w))];
        const int r = out.arrow_of_vertex[sz(x.face(2, 1)(0, w))];
        auto [it, fresh] = table.emplace(std::pair{g, f}, r);
        if (!fresh && it->second != r)
            fail(ErrorCode::IllDefinedComposition, "composite of '" + arrows[sz(g)].id + "' o '" + arrows[sz(f)].id +
                                                       "' is not single-valued");
    }
    std::vector<Composite> composites;
    for (int g = 0; g < static_cast<int>(arrows.size()); ++g)
        for (int f = 0; f < static_cast<int>(arrows.size()); ++f) {
            if (arrows[sz(f)].target != arrows[sz(g)].source) continue;
            auto it = table.find({g, f});
            if (it == table.end())
                fail(ErrorCode::NotSegal, "no level-2 vertex composes '" + arrows[sz(g)].id + "' o '" + arrows[sz(f)].id + "'");
            composites.push_back({g, f, it->second});
        }
    try {
        out.category = FinCategory(l0.labels()[0], std::move(arrows), std::move(identities), composites);
    } catch (const Error& e) {
        fail(ErrorCode::IllDefinedComposition, std::string("induced composition breaks a category law: ") + e.what());
    }
    return out;
}

HoEquiv hoequiv(const SimplicialSpace& x) {
    const auto hc = homotopy_cat(x);
    HoEquiv out;
    out.level0_discrete = hc.level0_discrete;
    const auto comps = pi0(x.level(1));
    out.level1_components = pi0_count(x.level(1));
    std::vector<int> invertible(sz(out.level1_components), 0), other(sz(out.level1_components), 0);
    for (int v = 0; v < x.level(1).count(0); ++v) {
        if (hc.category.is_isomorphism(hc.arrow_of_vertex[sz(v)]))
            invertible[sz(comps[sz(v)])] = 1;
        else
            other[sz(comps[sz(v)])] = 1;
    }
    for (int c = 0; c < out.level1_components; ++c) {
        if (invertible[sz(c)]) out.components.push_back(c);
        if (invertible[sz(c)] && other[sz(c)]) out.mixed = true;
    }
    return out;
}

CompletenessVerdict is_complete(const SimplicialSpace& x, CheckMode mode) {
    CompletenessVerdict v;
    v.mode = mode;
    const auto h = hoequiv(x);
    if (!h.level0_discrete)
        v.notes.push_back("level 0 is not discrete: vertex-indexed strict fibers may miss components");
    if (h.mixed) v.notes.push_back("a level-1 component mixes invertible and non-invertible vertices");
    if (mode == CheckMode::Strict) v.notes.push_back("strict mode is read as the pi0 comparison");
    const auto c0 = pi0(x.level(0));
    const auto c1 = pi0(x.level(1));
    v.level0_components = pi0_count(x.level(0));
    v.hoequiv_components = static_cast<int>(h.components.size());
    std::map<int, int> image;  // component of level 0 -> component of level 1
    std::set<int> hit;
    bool well_defined = true;
    for (int p = 0; p < x.level(0).count(0); ++p) {
        const int t = c1[sz(x.degen(0, 0)(0, p))];
        auto [it, fresh] = image.emplace(c0[sz(p)], t);
        if (!fresh && it->second != t) well_defined = false;
        hit.insert(t);
    }
    const std::set<int> target(h.components.begin(), h.components.end());
    const bool injective = well_defined && static_cast<int>(hit.size()) == v.level0_components;
    v.complete = injective && hit == target;
    if (!v.complete)
        v.detail = "pi0(level 0) has " + std::to_string(v.level0_components) + " components, hoequiv has " +
                   std::to_string(v.hoequiv_components) + (injective ? "" : "; the degeneracy is not injective on components");
    if (v.complete && mode == CheckMode::NerveEquivalence) {
        const FinSSet& l1 = x.level(1);
        std::vector<std::vector<bool>> keep(sz(l1.truncation()) + 1);
        for (int d = 0; d <= l1.truncation(); ++d)
            for (int c = 0; c < l1.count(d); ++c)
                keep[sz(d)].push_back(target.count(c1[sz(act(l1, SimplexMap::vertex(d, 0), c))]) > 0);
        const auto sub = sub_sset(l1, keep);
        std::map<int, int> renumber;
        for (int c = 0; c < sub.object.count(0); ++c) renumber[sub.inclusion(0, c)] = c;
        std::vector<std::vector<int>> cells(sz(l1.truncation()) + 1);
        for (int d = 0; d <= l1.truncation(); ++d) {
            std::map<int, int> back;
            for (int c = 0; c < sub.object.count(d); ++c) back[sub.inclusion(d, c)] = c;
            for (int c = 0; c < x.level(0).count(d); ++c) cells[sz(d)].push_back(back.at(x.degen(0, 0)(d, c)));
        }
        const SSetMap s0(x.level(0), sub.object, std::move(cells));
        if (!is_equivalence(s0, CheckMode::NerveEquivalence)) {
            v.complete = false;
            v.detail = "the degeneracy into hoequiv is not an equivalence of categories";
        }
    }
    return v;
}

bool is_zero_local(const SimplicialSpace& x, CheckMode mode) {
    for (int n = 1; n <= x.outer_truncation(); ++n)
        if (!is_equivalence(outer_map(x, SimplexMap::collapse(n)), mode)) return false;
    return true;
}

namespace {

struct FunctorCategory {
    FinCategory category;
    std::vector<Functor> objects;
    std::map<std::vector<int>, int> object_index;  // keyed by on_arrows
    std::vector<std::vector<int>> components;      // per arrow
};

FunctorCategory weq_functor_category(const RelCategory& r, int n, std::uint64_t budget) {
    const FinCategory& c = r.base();
    const FinCategory line = linear(n);
    FunctorCategory out;
    out.objects = enumerate_functors(line, c, budget);
    std::vector<std::string> names;
    for (std::size_t k = 0; k < out.objects.size(); ++k) {
        const auto& f = out.objects[k];
        out.object_index.emplace(f.on_arrows, static_cast<int>(k));
        if (n == 0) {
            names.push_back(c.object(f.on_objects[0]));
            continue;
        }
        std::vector<std::string> ids;
        for (int i = 0; i < n; ++i)
            ids.push_back(c.arrow(f.on_arrows[sz(line.find_arrow(std::to_string(i) + "->" + std::to_string(i + 1)))]).id);
        names.push_back(join(ids, ","));
    }
    std::vector<int> steps;  // arrow i -> i+1 of the line
    for (int i = 0; i < n; ++i) steps.push_back(line.find_arrow(std::to_string(i) + "->" + std::to_string(i + 1)));

    Budget spent(budget);
    std::vector<Arrow> arrows;
    std::map<std::tuple<int, int, std::vector<int>>, int> arrow_index;
    std::vector<int> identities(out.objects.size(), -1);
    for (std::size_t a = 0; a < out.objects.size(); ++a)
        for (std::size_t b = 0; b < out.objects.size(); ++b) {
            const auto& f = out.objects[a];
            const auto& g = out.objects[b];
            std::vector<int> comp;
            std::function<void(int)> extend = [&](int i) {
                if (i == n + 1) {
                    std::vector<std::string> ids;
                    for (int u : comp) ids.push_back(c.arrow(u).id);
                    arrow_index.emplace(std::tuple{static_cast<int>(a), static_cast<int>(b), comp}, static_cast<int>(arrows.size()));
                    bool identity = a == b;
                    for (int u : comp) identity = identity && c.is_identity(u);
                    if (identity) identities[a] = static_cast<int>(arrows.size());
                    arrows.push_back({"[" + join(ids, ",") + "]:" + names[a] + "=>" + names[b], static_cast<int>(a), static_cast<int>(b)});
                    out.components.push_back(comp);
                    return;
                }
                for (int u : c.hom(f.on_objects[sz(i)], g.on_objects[sz(i)])) {
                    spent.spend();
                    if (!r.is_weq(u)) continue;
                    if (i > 0) {
                        const int step = steps[sz(i - 1)];
                        if (c.compose(g.on_arrows[sz(step)], comp.back()) != c.compose(u, f.on_arrows[sz(step)])) continue;
                    }
                    comp.push_back(u);
                    extend(i + 1);
                    comp.pop_back();
                }
            };
            extend(0);
        }
    std::vector<Composite> composites;
    for (std::size_t g = 0; g < arrows.size(); ++g)
        for (std::size_t f = 0; f < arrows.size(); ++f) {
            if (arrows[f].target != arrows[g].source) continue;
            std::vector<int> comp;
            for (int i = 0; i <= n; ++i) comp.push_back(c.compose(out.components[g][sz(i)], out.components[f][sz(i)]));
            composites.push_back({static_cast<int>(g), static_cast<int>(f),
                                  arrow_index.at({arrows[f].source, arrows[g].target, comp})});
        }
    out.category = FinCategory(std::move(names), std::move(arrows), std::move(identities), composites);
    return out;
}

// Restriction along theta : [m] -> [n], from Fun([n], C)^W to Fun([m], C)^W.
Functor restriction(const FunctorCategory& wn, const FunctorCategory& wm, const SimplexMap& theta) {
    const int m = theta.domain(), n = theta.codomain();
    const FinCategory lm = linear(m), ln = linear(n);
    Functor along;
    along.on_objects.assign(theta.images().begin(), theta.images().end());
    for (const auto& a : lm.arrows())
        along.on_arrows.push_back(ln.find_arrow(std::to_string(theta(a.source)) + "->" + std::to_string(theta(a.target))));
    std::map<std::tuple<int, int, std::vector<int>>, int> arrow_index;
    for (int a = 0; a < wm.category.arrow_count(); ++a)
        arrow_index.emplace(std::tuple{wm.category.source(a), wm.category.target(a), wm.components[sz(a)]}, a);
    Functor out;
    for (const auto& f : wn.objects) out.on_objects.push_back(wm.object_index.at(compose(along, f).on_arrows));
    for (int a = 0; a < wn.category.arrow_count(); ++a) {
        std::vector<int> comp;
        for (int j = 0; j <= m; ++j) comp.push_back(wn.components[sz(a)][sz(theta(j))]);
        out.on_arrows.push_back(arrow_index.at({out.on_objects[sz(wn.category.source(a))],
                                                out.on_objects[sz(wn.category.target(a))], comp}));
    }
    return out;
}

}  // namespace

SimplicialSpace classification_diagram(const RelCategory& r, int outer_truncation, int inner_truncation,
                                       std::uint64_t budget) {
    std::vector<FunctorCategory> w;
    std::vector<FinSSet> levels;
    for (int n = 0; n <= outer_truncation; ++n) {
        w.push_back(weq_functor_category(r, n, budget));
        levels.push_back(nerve(w.back().category, inner_truncation));
    }
    std::vector<std::vector<SSetMap>> faces(sz(outer_truncation) + 1), degens(sz(outer_truncation) + 1);
    for (int n = 0; n <= outer_truncation; ++n) {
        for (int i = 0; n > 0 && i <= n; ++i) {
            const auto f = restriction(w[sz(n)], w[sz(n - 1)], SimplexMap::coface(n, i));
            faces[sz(n)].push_back(nerve_of_functor(w[sz(n)].category, w[sz(n - 1)].category, f, inner_truncation));
        }
        for (int i = 0; n < outer_truncation && i <= n; ++i) {
            const auto f = restriction(w[sz(n)], w[sz(n + 1)], SimplexMap::codegeneracy(n, i));
            degens[sz(n)].push_back(nerve_of_functor(w[sz(n)].category, w[sz(n + 1)].category, f, inner_truncation));
        }
    }
    return SimplicialSpace(std::move(levels), std::move(faces), std::move(degens));
}

std::vector<std::vector<SSetMap>> space_mapset(const SimplicialSpace& x, const SimplicialSpace& y,
                                               std::uint64_t budget) {
    if (x.outer_truncation() != y.outer_truncation() || x.inner_truncation() != y.inner_truncation())
        fail(ErrorCode::TruncationMismatch, "maps between spaces of different truncations");
    const int N = x.outer_truncation(), D = x.inner_truncation();
    std::vector<std::vector<SSetMap>> out;
    std::vector<SSetMap> current;
    Budget spent(budget);
    // forced[n][d][c]: (i, lower cell) with c = s_i(lower) along the outer degeneracy
    std::vector<std::vector<std::vector<std::vector<std::pair<int, int>>>>> forced(sz(N) + 1);
    for (int n = 0; n <= N; ++n) {
        forced[sz(n)].resize(sz(D) + 1);
        for (int d = 0; d <= D; ++d) forced[sz(n)][sz(d)].resize(sz(x.level(n).count(d)));
        for (int i = 0; n > 0 && i < n; ++i)
            for (int d = 0; d <= D; ++d)
                for (int c = 0; c < x.level(n - 1).count(d); ++c)
                    forced[sz(n)][sz(d)][sz(x.degen(n - 1, i)(d, c))].push_back({i, c});
    }
    std::function<void(int)> level = [&](int n) {
        if (n > N) {
            spent.spend();
            out.push_back(current);
            return;
        }
        MapOptions options;
        options.budget = budget;
        options.allow = [&](int d, int c, int v) {
            for (int i = 0; n > 0 && i <= n; ++i)
                if (y.face(n, i)(d, v) != current[sz(n - 1)](d, x.face(n, i)(d, c))) return false;
            for (const auto& [i, lower] : forced[sz(n)][sz(d)][sz(c)])
                if (v != y.degen(n - 1, i)(d, current[sz(n - 1)](d, lower))) return false;
            return true;
        };
        for_each_map(
            x.level(n), y.level(n),
            [&](const SSetMap& f) {
                current.push_back(f);
                level(n + 1);
                current.pop_back();
                return true;
            },
            options);
    };
    level(0);
    return out;
}

}  // namespace segalkit
