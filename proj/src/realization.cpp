#include "segalkit/realization.hpp"

#include <functional>
#include <numeric>

#include "segalkit/corpus.hpp"

namespace segalkit {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }
int irank(const SimplexMap& f) { return static_cast<int>(rank(f)); }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(sz(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[sz(v)] != v) v = parent[sz(v)] = parent[sz(parent[sz(v)])];
        return v;
    }
    void unite(int a, int b) {
        a = find(a), b = find(b);
        if (a != b) parent[sz(std::max(a, b))] = std::min(a, b);
    }
};

// Rebuilds a map between levels from per-degree cell functions.
SSetMap levelwise(const FinSSet& src, const FinSSet& tgt, const std::function<int(int, int)>& on_cells) {
    std::vector<std::vector<int>> cells(sz(src.truncation()) + 1);
    for (int d = 0; d <= src.truncation(); ++d)
        for (int c = 0; c < src.count(d); ++c) cells[sz(d)].push_back(on_cells(d, c));
    return SSetMap::trusted(src, tgt, std::move(cells));
}

// Builds a space from levels and a rule giving the outer action of a generator.
SimplicialSpace assemble(std::vector<FinSSet> levels, const std::function<SSetMap(int, int, bool)>& structure) {
    const int N = static_cast<int>(levels.size()) - 1;
    std::vector<std::vector<SSetMap>> faces(sz(N) + 1), degens(sz(N) + 1);
    for (int n = 0; n <= N; ++n) {
        for (int i = 0; n > 0 && i <= n; ++i) faces[sz(n)].push_back(structure(n, i, true));
        for (int i = 0; n < N && i <= n; ++i) degens[sz(n)].push_back(structure(n, i, false));
    }
    return SimplicialSpace(std::move(levels), std::move(faces), std::move(degens));
}

}  // namespace

int Realization::cell(int k, int n, int theta_rank, int c) const {
    return class_of.at(sz(k)).at(sz(offset.at(sz(k)).at(sz(n)) + theta_rank * widths[sz(k)][sz(n)] + c));
}

Realization realize_cells(const SimplicialSpace& x) {
    const int N = x.outer_truncation();
    const int T = std::min(N, x.inner_truncation());
    Realization out;
    out.offset.resize(sz(T) + 1);
    out.widths.resize(sz(T) + 1);
    out.class_of.resize(sz(T) + 1);
    out.rep.resize(sz(T) + 1);
    std::vector<std::vector<std::vector<SimplexMap>>> simplices(sz(T) + 1);  // [k][n]
    for (int k = 0; k <= T; ++k) {
        int total = 0;
        for (int n = 0; n <= N; ++n) {
            simplices[sz(k)].push_back(enumerate_maps(k, n));
            out.offset[sz(k)].push_back(total);
            out.widths[sz(k)].push_back(x.level(n).count(k));
            total += static_cast<int>(simplices[sz(k)][sz(n)].size()) * x.level(n).count(k);
        }
        UnionFind uf(total);
        auto node = [&](int n, int r, int c) { return out.offset[sz(k)][sz(n)] + r * out.widths[sz(k)][sz(n)] + c; };
        // (alpha o theta, c) ~ (theta, alpha^* c) for alpha : [m] -> [n] a generator
        auto relate = [&](const SimplexMap& alpha, const SSetMap& pull) {
            const int m = alpha.domain(), n = alpha.codomain();
            for (std::size_t r = 0; r < simplices[sz(k)][sz(m)].size(); ++r) {
                const int moved = irank(compose(simplices[sz(k)][sz(m)][r], alpha));
                for (int c = 0; c < x.level(n).count(k); ++c) uf.unite(node(n, moved, c), node(m, static_cast<int>(r), pull(k, c)));
            }
        };
        for (int n = 1; n <= N; ++n)
            for (int i = 0; i <= n; ++i) relate(SimplexMap::coface(n, i), x.face(n, i));
        for (int n = 0; n < N; ++n)
            for (int i = 0; i <= n; ++i) relate(SimplexMap::codegeneracy(n, i), x.degen(n, i));
        std::vector<int> cls(sz(total), -1);
        for (int v = 0; v < total; ++v) {
            const int root = uf.find(v);
            if (cls[sz(root)] < 0) {
                cls[sz(root)] = static_cast<int>(out.rep[sz(k)].size());
                int n = N;
                while (out.offset[sz(k)][sz(n)] > v) --n;
                const int local = v - out.offset[sz(k)][sz(n)];
                const int w = out.widths[sz(k)][sz(n)];
                out.rep[sz(k)].push_back({n, local / w, local % w});
            }
            cls[sz(v)] = cls[sz(root)];
        }
        out.class_of[sz(k)] = std::move(cls);
    }
    std::vector<std::vector<std::string>> labels(sz(T) + 1);
    std::vector<std::vector<std::vector<int>>> faces(sz(T) + 1), degens(sz(T) + 1);
    for (int k = 0; k <= T; ++k) {
        for (const auto& [n, r, c] : out.rep[sz(k)])
            labels[sz(k)].push_back(simplices[sz(k)][sz(n)][sz(r)].to_string() + "*" + x.level(n).label(k, c));
        auto moved = [&](int j, const SimplexMap& beta, const std::array<int, 3>& rep, int c2) {
            const auto& [n, r, c] = rep;
            (void)c;
            return out.cell(j, n, irank(compose(beta, simplices[sz(k)][sz(n)][sz(r)])), c2);
        };
        for (int i = 0; k > 0 && i <= k; ++i) {
            std::vector<int> col;
            for (const auto& rep : out.rep[sz(k)])
                col.push_back(moved(k - 1, SimplexMap::coface(k, i), rep, x.level(rep[0]).face(k, i, rep[2])));
            faces[sz(k)].push_back(std::move(col));
        }
        for (int i = 0; k < T && i <= k; ++i) {
            std::vector<int> col;
            for (const auto& rep : out.rep[sz(k)])
                col.push_back(moved(k + 1, SimplexMap::codegeneracy(k, i), rep, x.level(rep[0]).degen(k, i, rep[2])));
            degens[sz(k)].push_back(std::move(col));
        }
    }
    out.object = FinSSet(T, std::move(labels), std::move(faces), std::move(degens));
    return out;
}

FinSSet realize(const SimplicialSpace& x) { return realize_cells(x).object; }

SSetMap realize_map(const SimplicialSpace& x, const SimplicialSpace& y, const std::vector<SSetMap>& f) {
    if (static_cast<int>(f.size()) != x.outer_truncation() + 1)
        fail(ErrorCode::InvalidInput, "a space map needs one map per level");
    const auto rx = realize_cells(x);
    const auto ry = realize_cells(y);
    if (rx.object.truncation() != ry.object.truncation())
        fail(ErrorCode::TruncationMismatch, "realizations of different truncations");
    return levelwise(rx.object, ry.object, [&](int k, int c) {
        const auto& [n, r, cell] = rx.rep[sz(k)][sz(c)];
        return ry.cell(k, n, r, f[sz(n)](k, cell));
    });
}

FinSSet diagonal(const SimplicialSpace& x) {
    const int T = std::min(x.outer_truncation(), x.inner_truncation());
    std::vector<std::vector<std::string>> labels(sz(T) + 1);
    std::vector<std::vector<std::vector<int>>> faces(sz(T) + 1), degens(sz(T) + 1);
    for (int n = 0; n <= T; ++n) {
        const FinSSet& l = x.level(n);
        for (int c = 0; c < l.count(n); ++c) labels[sz(n)].push_back(l.label(n, c));
        for (int i = 0; n > 0 && i <= n; ++i) {
            std::vector<int> col;
            for (int c = 0; c < l.count(n); ++c) col.push_back(x.level(n - 1).face(n, i, x.face(n, i)(n, c)));
            faces[sz(n)].push_back(std::move(col));
        }
        for (int i = 0; n < T && i <= n; ++i) {
            std::vector<int> col;
            for (int c = 0; c < l.count(n); ++c) col.push_back(x.level(n + 1).degen(n, i, x.degen(n, i)(n, c)));
            degens[sz(n)].push_back(std::move(col));
        }
    }
    return FinSSet(T, std::move(labels), std::move(faces), std::move(degens));
}

SSetMap realization_to_diagonal(const SimplicialSpace& x) {
    const auto r = realize_cells(x);
    const auto diag = diagonal(x);
    std::map<std::pair<int, int>, SSetMap> pulls;  // (n, rank) per degree k below
    std::vector<std::vector<int>> cells(sz(r.object.truncation()) + 1);
    for (int k = 0; k <= r.object.truncation(); ++k) {
        const int K = k;
        pulls.clear();
        for (const auto& [n, rk, c] : r.rep[sz(k)]) {
            auto it = pulls.find({n, rk});
            if (it == pulls.end()) it = pulls.emplace(std::pair{n, rk}, outer_map(x, enumerate_maps(K, n)[sz(rk)])).first;
            cells[sz(k)].push_back(it->second(k, c));
        }
    }
    return SSetMap(r.object, diag, std::move(cells));
}

SSetMap level0_to_realization(const SimplicialSpace& x) {
    const auto r = realize_cells(x);
    const auto l0 = truncate(x.level(0), r.object.truncation());
    return SSetMap(l0, r.object, [&] {
        std::vector<std::vector<int>> cells(sz(l0.truncation()) + 1);
        for (int k = 0; k <= l0.truncation(); ++k)
            for (int c = 0; c < l0.count(k); ++c) cells[sz(k)].push_back(r.cell(k, 0, 0, c));
        return cells;
    }());
}

SSetMap yoneda_map(const FinSSet& y, int n, int c) {
    const auto s = standard(n, y.truncation());
    return SSetMap(s, y, [&] {
        std::vector<std::vector<int>> cells(sz(y.truncation()) + 1);
        for (int k = 0; k <= y.truncation(); ++k)
            for (const auto& alpha : enumerate_maps(k, n)) cells[sz(k)].push_back(act(y, alpha, c));
        return cells;
    }());
}

SSetMap pairing(const SSetMap& f, const SSetMap& g) {
    if (!(f.source() == g.source())) fail(ErrorCode::DomainMismatch, "pairing of maps with different sources");
    const auto tgt = product(f.target(), g.target());
    return levelwise(f.source(), tgt, [&](int k, int c) { return f(k, c) * g.target().count(k) + g(k, c); });
}

FinSSet c_fiber_product(const SSetMap& f, const SSetMap& g, std::uint64_t budget) {
    const FinSSet& z = f.target();
    const auto hom = internal_hom(standard(1, z.truncation()), z, -1, budget);
    const auto ends = pairing(evaluate_at_vertex(hom, 1, 0, z), evaluate_at_vertex(hom, 1, 1, z));
    return pullback(product_map(f, g), ends).object;
}

int CNerve::cell(int n, int k, const std::vector<int>& tuple, int hom_cell) const {
    int code = 0;
    for (int t : tuple) code = code * source_counts[sz(k)] + t;
    return pairs.at(sz(n)).at(sz(k)).at({code, hom_cell});
}

int CNerve::hom_cell(int n, int k, const std::vector<std::vector<int>>& table) const {
    return hom_index.at(sz(n)).at(sz(k)).at(table);
}

CNerve c_nerve(const SSetMap& p, int outer_truncation, std::uint64_t budget) {
    const FinSSet& x = p.source();
    const FinSSet& y = p.target();
    const int T = y.truncation();
    const int N = outer_truncation;
    CNerve out;
    for (int k = 0; k <= T; ++k) out.source_counts.push_back(x.count(k));
    std::vector<FinSSet> levels;
    std::vector<Pullback> pbs;
    // only maps whose vertex columns land in the image of p can meet X^(n+1)
    std::vector<std::vector<bool>> in_image(sz(T) + 1);
    for (int d = 0; d <= T; ++d) {
        in_image[sz(d)].assign(sz(y.count(d)), false);
        for (int c = 0; c < x.count(d); ++c) in_image[sz(d)][sz(p(d, c))] = true;
    }
    for (int n = 0; n <= N; ++n) {
        std::vector<std::vector<bool>> constant(sz(T) + 1);
        for (int d = 0; d <= T; ++d)
            for (const auto& alpha : enumerate_maps(d, n))
                constant[sz(d)].push_back(alpha(0) == alpha(d));
        auto allow = [&](int k, int d, int cell, int v) {
            const int a = cell / static_cast<int>(count_maps(d, k));
            return !constant[sz(d)][sz(a)] || in_image[sz(d)][sz(v)];
        };
        out.homs.push_back(internal_hom(standard(n, T), y, -1, budget, allow));
        const auto& hom = out.homs.back();
        SSetMap power = p;
        SSetMap ends = evaluate_at_vertex(hom, n, 0, y);
        for (int v = 1; v <= n; ++v) {
            power = product_map(power, p);
            ends = pairing(ends, evaluate_at_vertex(hom, n, v, y));
        }
        const auto pb = pullback(power, ends);
        std::vector<std::map<std::pair<int, int>, int>> pairs(sz(T) + 1);
        std::vector<std::map<std::vector<std::vector<int>>, int>> index(sz(T) + 1);
        for (int k = 0; k <= T; ++k) {
            for (int c = 0; c < pb.object.count(k); ++c) pairs[sz(k)].emplace(std::pair{pb.left(k, c), pb.right(k, c)}, c);
            for (std::size_t h = 0; h < hom.maps[sz(k)].size(); ++h) index[sz(k)].emplace(hom.maps[sz(k)][h], static_cast<int>(h));
        }
        out.pairs.push_back(std::move(pairs));
        out.hom_index.push_back(std::move(index));
        levels.push_back(pb.object);
        pbs.push_back(pb);
    }
    // outer action of theta : [m] -> [n], level n -> level m
    auto act_outer = [&](const SimplexMap& theta) {
        const int m = theta.domain(), n = theta.codomain();
        return levelwise(levels[sz(n)], levels[sz(m)], [&](int k, int c) {
            int left = pbs[sz(n)].left(k, c);
            const int right = pbs[sz(n)].right(k, c);
            std::vector<int> digits(sz(n) + 1);
            for (int j = n; j >= 0; --j) {
                digits[sz(j)] = left % x.count(k);
                left /= x.count(k);
            }
            std::vector<int> tuple;
            for (int j = 0; j <= m; ++j) tuple.push_back(digits[sz(theta(j))]);
            const auto& table = out.homs[sz(n)].maps[sz(k)][sz(right)];
            std::vector<std::vector<int>> moved(sz(T) + 1);
            for (int d = 0; d <= T; ++d) {
                const int wide = static_cast<int>(count_maps(d, k));
                for (const auto& alpha : enumerate_maps(d, m))
                    for (int b = 0; b < wide; ++b)
                        moved[sz(d)].push_back(table[sz(d)][sz(irank(compose(alpha, theta)) * wide + b)]);
            }
            return out.cell(m, k, tuple, out.hom_cell(m, k, moved));
        });
    };
    out.space = assemble(levels, [&](int n, int i, bool face) {
        return act_outer(face ? SimplexMap::coface(n, i) : SimplexMap::codegeneracy(n, i));
    });
    return out;
}

SimplicialSpace external_product(const FinSSet& k, const FinSSet& l) {
    std::vector<FinSSet> levels;
    for (int n = 0; n <= k.truncation(); ++n) levels.push_back(product(discrete_sset(k.labels()[sz(n)], l.truncation()), l));
    return assemble(levels, [&](int n, int i, bool face) {
        const int m = face ? n - 1 : n + 1;
        return levelwise(levels[sz(n)], levels[sz(m)], [&](int d, int c) {
            const int a = c / l.count(d), b = c % l.count(d);
            return (face ? k.face(n, i, a) : k.degen(n, i, a)) * l.count(d) + b;
        });
    });
}

SimplicialSpace space_coproduct(const SimplicialSpace& x, const SimplicialSpace& y) {
    if (x.outer_truncation() != y.outer_truncation())
        fail(ErrorCode::TruncationMismatch, "coproduct of spaces of different outer truncations");
    std::vector<FinSSet> levels;
    for (int n = 0; n <= x.outer_truncation(); ++n) levels.push_back(coproduct(x.level(n), y.level(n)).object);
    return assemble(levels, [&](int n, int i, bool face) {
        const int m = face ? n - 1 : n + 1;
        const SSetMap& fx = face ? x.face(n, i) : x.degen(n, i);
        const SSetMap& fy = face ? y.face(n, i) : y.degen(n, i);
        return levelwise(levels[sz(n)], levels[sz(m)], [&](int d, int c) {
            const int split = x.level(n).count(d);
            return c < split ? fx(d, c) : x.level(m).count(d) + fy(d, c - split);
        });
    });
}

namespace {

FinSSet random_sset(std::mt19937_64& rng, int truncation) {
    switch (rng() % 5) {
    case 0: return standard(static_cast<int>(rng() % 3), truncation);
    case 1: return nerve(random_category(rng, 2), truncation);
    case 2: {
        std::vector<std::string> names;
        const int k = 1 + static_cast<int>(rng() % 3);
        for (int v = 0; v < k; ++v) names.push_back("v" + std::to_string(v));
        return discrete_sset(names, truncation);
    }
    case 3: {
        // a circle: the two ends of standard(1) identified
        std::vector<std::vector<std::pair<int, int>>> pairs(sz(truncation) + 1);
        pairs[0].push_back({0, 1});
        return quotient(standard(1, truncation), pairs).object;
    }
    default: return point_sset(truncation);
    }
}

bool small_enough(const SimplicialSpace& x, int max_cells) {
    for (const auto& l : x.levels())
        for (int d = 0; d <= l.truncation(); ++d)
            if (l.count(d) > max_cells) return false;
    return true;
}

SimplicialSpace random_basic_space(std::mt19937_64& rng, int outer, int inner) {
    switch (rng() % 3) {
    case 0: return discrete_levels(random_sset(rng, outer), inner);
    case 1: return constant_levels(random_sset(rng, inner), outer);
    default: return external_product(random_sset(rng, outer), random_sset(rng, inner));
    }
}

}  // namespace

SimplicialSpace random_space(std::mt19937_64& rng, int outer_truncation, int inner_truncation, int max_cells) {
    while (true) {
        SimplicialSpace x;
        switch (rng() % 5) {
        case 0:
        case 1:
        case 2: x = random_basic_space(rng, outer_truncation, inner_truncation); break;
        case 3:
            x = space_coproduct(random_basic_space(rng, outer_truncation, inner_truncation),
                                random_basic_space(rng, outer_truncation, inner_truncation));
            break;
        default:
            x = classification_diagram(random_relative_category(rng, 2), outer_truncation, inner_truncation);
            break;
        }
        if (small_enough(x, max_cells)) return x;
    }
}

}  // namespace segalkit
