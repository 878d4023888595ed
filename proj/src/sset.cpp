#include "segalkit/sset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace segalkit {

namespace {

using Table = std::vector<std::vector<std::vector<int>>>;

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
    return out;
}

}  // namespace

struct FinSSet::Tables {
    int truncation = 0;
    std::vector<std::vector<std::string>> labels;
    Table faces;
    Table degens;
    std::vector<std::vector<char>> degenerate;
    std::vector<std::unordered_map<std::string, int>> index;
};

namespace {

Table empty_table(int truncation, bool faces) {
    Table t(sz(truncation) + 1);
    for (int n = 0; n <= truncation; ++n)
        if (faces ? n > 0 : n < truncation) t[sz(n)].resize(sz(n) + 1);
    return t;
}

}  // namespace

FinSSet::FinSSet(int truncation)
    : FinSSet(truncation, std::vector<std::vector<std::string>>(sz(std::max(truncation, 0)) + 1),
              empty_table(std::max(truncation, 0), true), empty_table(std::max(truncation, 0), false)) {}

FinSSet::FinSSet(int truncation, std::vector<std::vector<std::string>> labels, Table faces, Table degens) {
    if (truncation < 0) fail(ErrorCode::InvalidInput, "truncation must be >= 0");
    const std::size_t levels = sz(truncation) + 1;
    if (labels.size() != levels) fail(ErrorCode::InvalidInput, "expected cells for degrees 0.." + std::to_string(truncation));
    faces.resize(levels);
    degens.resize(levels);
    auto t = std::make_shared<Tables>();
    t->truncation = truncation;

    auto count = [&](int n) { return static_cast<int>(labels[sz(n)].size()); };
    auto where = [&](int n, int c) {
        return "degree " + std::to_string(n) + " cell '" + labels[sz(n)][sz(c)] + "'";
    };
    for (int n = 0; n <= truncation; ++n) {
        const auto& fs = faces[sz(n)];
        if (static_cast<int>(fs.size()) != (n == 0 ? 0 : n + 1))
            fail(ErrorCode::InvalidInput, "degree " + std::to_string(n) + " needs " + std::to_string(n == 0 ? 0 : n + 1) + " face maps");
        for (const auto& f : fs) {
            if (static_cast<int>(f.size()) != count(n))
                fail(ErrorCode::InvalidInput, "face table of degree " + std::to_string(n) + " has the wrong length");
            for (int c = 0; c < count(n); ++c)
                if (f[sz(c)] < 0 || f[sz(c)] >= count(n - 1))
                    fail(ErrorCode::InvalidInput, "face of " + where(n, c) + " refers to a missing cell");
        }
        const auto& ds = degens[sz(n)];
        if (static_cast<int>(ds.size()) != (n < truncation ? n + 1 : 0))
            fail(ErrorCode::InvalidInput, "degree " + std::to_string(n) + " needs " + std::to_string(n < truncation ? n + 1 : 0) + " degeneracy maps");
        for (const auto& s : ds) {
            if (static_cast<int>(s.size()) != count(n))
                fail(ErrorCode::InvalidInput, "degeneracy table of degree " + std::to_string(n) + " has the wrong length");
            for (int c = 0; c < count(n); ++c)
                if (s[sz(c)] < 0 || s[sz(c)] >= count(n + 1))
                    fail(ErrorCode::InvalidInput, "degeneracy of " + where(n, c) + " refers to a missing cell");
        }
    }
    auto d = [&](int n, int i, int c) { return faces[sz(n)][sz(i)][sz(c)]; };
    auto s = [&](int n, int i, int c) { return degens[sz(n)][sz(i)][sz(c)]; };
    auto broken = [&](const std::string& law, int n, int c) {
        fail(ErrorCode::InvalidInput, "simplicial identity " + law + " fails at " + where(n, c));
    };
    for (int n = 0; n <= truncation; ++n)
        for (int c = 0; c < count(n); ++c) {
            for (int j = 0; n >= 2 && j <= n; ++j)
                for (int i = 0; i < j; ++i)
                    if (d(n - 1, i, d(n, j, c)) != d(n - 1, j - 1, d(n, i, c)))
                        broken("d" + std::to_string(i) + "d" + std::to_string(j) + " = d" + std::to_string(j - 1) + "d" + std::to_string(i), n, c);
            if (n + 1 <= truncation)
                for (int j = 0; j <= n; ++j)
                    for (int i = 0; i <= n + 1; ++i) {
                        const int lhs = d(n + 1, i, s(n, j, c));
                        const std::string law = "d" + std::to_string(i) + "s" + std::to_string(j);
                        if (i < j) {
                            if (lhs != s(n - 1, j - 1, d(n, i, c))) broken(law, n, c);
                        } else if (i == j || i == j + 1) {
                            if (lhs != c) broken(law + " = id", n, c);
                        } else if (lhs != s(n - 1, j, d(n, i - 1, c))) {
                            broken(law, n, c);
                        }
                    }
            if (n + 2 <= truncation)
                for (int j = 0; j <= n; ++j)
                    for (int i = 0; i <= j; ++i)
                        if (s(n + 1, i, s(n, j, c)) != s(n + 1, j + 1, s(n, i, c)))
                            broken("s" + std::to_string(i) + "s" + std::to_string(j) + " = s" + std::to_string(j + 1) + "s" + std::to_string(i), n, c);
        }

    t->degenerate.resize(levels);
    t->index.resize(levels);
    for (int n = 0; n <= truncation; ++n) {
        t->degenerate[sz(n)].assign(sz(count(n)), 0);
        if (n > 0)
            for (const auto& sm : degens[sz(n - 1)])
                for (int v : sm) t->degenerate[sz(n)][sz(v)] = 1;
        for (int c = 0; c < count(n); ++c) t->index[sz(n)].emplace(labels[sz(n)][sz(c)], c);
    }
    t->labels = std::move(labels);
    t->faces = std::move(faces);
    t->degens = std::move(degens);
    t_ = std::move(t);
}

int FinSSet::truncation() const noexcept { return t_->truncation; }

int FinSSet::count(int n) const {
    if (n < 0 || n > t_->truncation) fail(ErrorCode::IndexOutOfRange, "degree " + std::to_string(n) + " is not stored");
    return static_cast<int>(t_->labels[sz(n)].size());
}

std::size_t FinSSet::total_cells() const {
    std::size_t total = 0;
    for (const auto& l : t_->labels) total += l.size();
    return total;
}

const std::string& FinSSet::label(int n, int c) const { return t_->labels.at(sz(n)).at(sz(c)); }

int FinSSet::find_cell(int n, std::string_view label) const {
    if (n < 0 || n > t_->truncation) return -1;
    auto it = t_->index[sz(n)].find(std::string(label));
    return it == t_->index[sz(n)].end() ? -1 : it->second;
}

int FinSSet::face(int n, int i, int c) const { return t_->faces[sz(n)][sz(i)][sz(c)]; }
int FinSSet::degen(int n, int i, int c) const { return t_->degens[sz(n)][sz(i)][sz(c)]; }
bool FinSSet::is_degenerate(int n, int c) const { return t_->degenerate[sz(n)][sz(c)] != 0; }
const std::vector<std::vector<std::string>>& FinSSet::labels() const { return t_->labels; }

bool operator==(const FinSSet& a, const FinSSet& b) {
    if (a.t_ == b.t_) return true;
    return a.t_->truncation == b.t_->truncation && a.t_->labels == b.t_->labels && a.t_->faces == b.t_->faces &&
           a.t_->degens == b.t_->degens;
}

int act(const FinSSet& x, const SimplexMap& theta, int c) {
    if (theta.domain() > x.truncation() || theta.codomain() > x.truncation())
        fail(ErrorCode::TruncationMismatch, "simplex map " + theta.to_string() + " leaves the stored degrees");
    const auto word = factorize(theta);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        c = it->kind == Generator::Kind::Coface ? x.face(it->degree, it->index, c) : x.degen(it->degree, it->index, c);
    return c;
}

SSetMap::SSetMap(FinSSet source, FinSSet target, std::vector<std::vector<int>> cells)
    : source_(std::move(source)), target_(std::move(target)), cells_(std::move(cells)) {
    const int D = source_.truncation();
    if (target_.truncation() != D) fail(ErrorCode::TruncationMismatch, "map between different truncations");
    if (static_cast<int>(cells_.size()) != D + 1) fail(ErrorCode::InvalidInput, "map needs a cell function per degree");
    for (int n = 0; n <= D; ++n) {
        if (static_cast<int>(cells_[sz(n)].size()) != source_.count(n))
            fail(ErrorCode::InvalidInput, "map is not total in degree " + std::to_string(n));
        for (int v : cells_[sz(n)])
            if (v < 0 || v >= target_.count(n)) fail(ErrorCode::InvalidInput, "map hits a missing cell in degree " + std::to_string(n));
    }
    for (int n = 0; n <= D; ++n)
        for (int c = 0; c < source_.count(n); ++c) {
            const int v = (*this)(n, c);
            for (int i = 0; n > 0 && i <= n; ++i)
                if (target_.face(n, i, v) != (*this)(n - 1, source_.face(n, i, c)))
                    fail(ErrorCode::InvalidInput, "map does not commute with d" + std::to_string(i) + " at degree " +
                                                      std::to_string(n) + " cell '" + source_.label(n, c) + "'");
            for (int i = 0; n < D && i <= n; ++i)
                if (target_.degen(n, i, v) != (*this)(n + 1, source_.degen(n, i, c)))
                    fail(ErrorCode::InvalidInput, "map does not commute with s" + std::to_string(i) + " at degree " +
                                                      std::to_string(n) + " cell '" + source_.label(n, c) + "'");
        }
}

SSetMap SSetMap::trusted(FinSSet source, FinSSet target, std::vector<std::vector<int>> cells) {
    SSetMap f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.cells_ = std::move(cells);
    return f;
}

bool SSetMap::is_injective() const {
    for (const auto& level : cells_) {
        std::vector<int> sorted = level;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    }
    return true;
}

bool SSetMap::is_surjective() const {
    for (int n = 0; n <= target_.truncation(); ++n) {
        std::vector<char> hit(sz(target_.count(n)), 0);
        for (int v : cells_[sz(n)]) hit[sz(v)] = 1;
        if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;
    }
    return true;
}

SSetMap identity_map(const FinSSet& x) {
    std::vector<std::vector<int>> cells(sz(x.truncation()) + 1);
    for (int n = 0; n <= x.truncation(); ++n) {
        cells[sz(n)].resize(sz(x.count(n)));
        std::iota(cells[sz(n)].begin(), cells[sz(n)].end(), 0);
    }
    return SSetMap::trusted(x, x, std::move(cells));
}

SSetMap compose(const SSetMap& f, const SSetMap& g) {
    if (!(f.target() == g.source())) fail(ErrorCode::DomainMismatch, "maps are not composable");
    std::vector<std::vector<int>> cells(f.cells().size());
    for (std::size_t n = 0; n < cells.size(); ++n)
        for (int v : f.cells()[n]) cells[n].push_back(g.cells()[n][sz(v)]);
    return SSetMap::trusted(f.source(), g.target(), std::move(cells));
}

namespace {

// Builds a simplicial set from keyed cells; faces and degeneracies are
// computed on keys and resolved through an index.
template <class Key, class Label, class Face, class Degen>
FinSSet build_sset(int D, const std::vector<std::vector<Key>>& cells, Label label, Face face, Degen degen) {
    std::vector<std::map<Key, int>> index(sz(D) + 1);
    std::vector<std::vector<std::string>> labels(sz(D) + 1);
    for (int n = 0; n <= D; ++n)
        for (std::size_t c = 0; c < cells[sz(n)].size(); ++c) {
            index[sz(n)].emplace(cells[sz(n)][c], static_cast<int>(c));
            labels[sz(n)].push_back(label(n, cells[sz(n)][c]));
        }
    auto lookup = [&](int n, const Key& k) {
        auto it = index[sz(n)].find(k);
        if (it == index[sz(n)].end()) fail(ErrorCode::InvalidInput, "structure map leaves the cell set in degree " + std::to_string(n));
        return it->second;
    };
    Table faces(sz(D) + 1), degens(sz(D) + 1);
    for (int n = 0; n <= D; ++n) {
        for (int i = 0; n > 0 && i <= n; ++i) {
            std::vector<int> col;
            for (const auto& k : cells[sz(n)]) col.push_back(lookup(n - 1, face(n, i, k)));
            faces[sz(n)].push_back(std::move(col));
        }
        for (int i = 0; n < D && i <= n; ++i) {
            std::vector<int> col;
            for (const auto& k : cells[sz(n)]) col.push_back(lookup(n + 1, degen(n, i, k)));
            degens[sz(n)].push_back(std::move(col));
        }
    }
    return FinSSet(D, std::move(labels), std::move(faces), std::move(degens));
}

std::string images_label(const SimplexMap& f) {
    std::string out;
    for (int v : f.images()) out += (out.empty() ? "" : ",") + std::to_string(v);
    return out;
}

}  // namespace

FinSSet standard(int n, int truncation) {
    if (n < 0 || truncation < 0) fail(ErrorCode::InvalidInput, "standard simplex needs n, truncation >= 0");
    std::vector<std::vector<int>> ranks(sz(truncation) + 1);
    std::vector<std::vector<SimplexMap>> maps(sz(truncation) + 1);
    for (int k = 0; k <= truncation; ++k) {
        maps[sz(k)] = enumerate_maps(k, n);
        for (std::size_t c = 0; c < maps[sz(k)].size(); ++c) ranks[sz(k)].push_back(static_cast<int>(c));
    }
    return build_sset<int>(
        truncation, ranks, [&](int k, int c) { return images_label(maps[sz(k)][sz(c)]); },
        [&](int k, int i, int c) {
            return static_cast<int>(rank(compose(SimplexMap::coface(k, i), maps[sz(k)][sz(c)])));
        },
        [&](int k, int i, int c) {
            return static_cast<int>(rank(compose(SimplexMap::codegeneracy(k, i), maps[sz(k)][sz(c)])));
        });
}

FinSSet point_sset(int truncation) { return standard(0, truncation); }

FinSSet discrete_sset(const std::vector<std::string>& vertices, int truncation) {
    std::vector<std::vector<int>> cells(sz(truncation) + 1);
    for (int n = 0; n <= truncation; ++n) {
        cells[sz(n)].resize(vertices.size());
        std::iota(cells[sz(n)].begin(), cells[sz(n)].end(), 0);
    }
    return build_sset<int>(
        truncation, cells,
        [&](int, int v) { return vertices[sz(v)]; },
        [](int, int, int v) { return v; }, [](int, int, int v) { return v; });
}

FinSSet truncate(const FinSSet& x, int truncation) {
    if (truncation < 0 || truncation > x.truncation())
        fail(ErrorCode::TruncationMismatch, "can only truncate to a lower degree");
    std::vector<std::vector<std::string>> labels(x.labels().begin(), x.labels().begin() + truncation + 1);
    Table faces(sz(truncation) + 1), degens(sz(truncation) + 1);
    for (int n = 0; n <= truncation; ++n) {
        for (int i = 0; n > 0 && i <= n; ++i) {
            std::vector<int> col;
            for (int c = 0; c < x.count(n); ++c) col.push_back(x.face(n, i, c));
            faces[sz(n)].push_back(std::move(col));
        }
        for (int i = 0; n < truncation && i <= n; ++i) {
            std::vector<int> col;
            for (int c = 0; c < x.count(n); ++c) col.push_back(x.degen(n, i, c));
            degens[sz(n)].push_back(std::move(col));
        }
    }
    return FinSSet(truncation, std::move(labels), std::move(faces), std::move(degens));
}

NerveCells nerve_cells(const FinCategory& a, int truncation) {
    NerveCells out;
    out.strings.resize(sz(truncation) + 1);
    for (int x = 0; x < a.object_count(); ++x) out.strings[0].push_back({x});
    // strings of n composable arrows, lexicographic in arrow indices
    std::vector<int> current;
    std::function<void(int)> extend = [&](int n) {
        if (static_cast<int>(current.size()) == n) {
            out.strings[sz(n)].push_back(current);
            return;
        }
        for (int f = 0; f < a.arrow_count(); ++f) {
            if (!current.empty() && a.source(f) != a.target(current.back())) continue;
            current.push_back(f);
            extend(n);
            current.pop_back();
        }
    };
    for (int n = 1; n <= truncation; ++n) extend(n);

    auto vertex_of = [&](int n, const std::vector<int>& s, int i) {
        if (n == 0) return s[0];
        return i == 0 ? a.source(s[0]) : a.target(s[sz(i - 1)]);
    };
    out.sset = build_sset<std::vector<int>>(
        truncation, out.strings,
        [&](int n, const std::vector<int>& s) {
            if (n == 0) return a.object(s[0]);
            std::vector<std::string> ids;
            for (int f : s) ids.push_back(a.arrow(f).id);
            return join(ids, ",");
        },
        [&](int n, int i, const std::vector<int>& s) -> std::vector<int> {
            if (n == 1) return {vertex_of(n, s, 1 - i)};
            std::vector<int> r;
            if (i == 0) {
                r.assign(s.begin() + 1, s.end());
            } else if (i == n) {
                r.assign(s.begin(), s.end() - 1);
            } else {
                r.assign(s.begin(), s.begin() + (i - 1));
                r.push_back(a.compose(s[sz(i)], s[sz(i - 1)]));
                r.insert(r.end(), s.begin() + (i + 1), s.end());
            }
            return r;
        },
        [&](int n, int i, const std::vector<int>& s) -> std::vector<int> {
            const int id = a.identity(vertex_of(n, s, i));
            if (n == 0) return {id};
            std::vector<int> r(s.begin(), s.begin() + i);
            r.push_back(id);
            r.insert(r.end(), s.begin() + i, s.end());
            return r;
        });
    return out;
}

FinSSet nerve(const FinCategory& a, int truncation) { return nerve_cells(a, truncation).sset; }

SSetMap nerve_of_functor(const FinCategory& a, const FinCategory& b, const Functor& f, int truncation) {
    if (!is_functor(a, b, f)) fail(ErrorCode::InvalidInput, "not a functor");
    const auto na = nerve_cells(a, truncation);
    const auto nb = nerve_cells(b, truncation);
    std::vector<std::vector<int>> cells(sz(truncation) + 1);
    for (int n = 0; n <= truncation; ++n) {
        std::map<std::vector<int>, int> index;
        for (std::size_t c = 0; c < nb.strings[sz(n)].size(); ++c) index.emplace(nb.strings[sz(n)][c], static_cast<int>(c));
        for (const auto& s : na.strings[sz(n)]) {
            std::vector<int> image;
            for (int v : s) image.push_back(n == 0 ? f.on_objects[sz(v)] : f.on_arrows[sz(v)]);
            cells[sz(n)].push_back(index.at(image));
        }
    }
    return SSetMap::trusted(na.sset, nb.sset, std::move(cells));
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(sz(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[sz(v)] != v) v = parent[sz(v)] = parent[sz(parent[sz(v)])];
        return v;
    }
    bool unite(int u, int v) {
        u = find(u);
        v = find(v);
        if (u == v) return false;
        parent[sz(std::max(u, v))] = std::min(u, v);
        return true;
    }
};

std::vector<int> number_classes(UnionFind& uf, int n) {
    std::vector<int> cls(sz(n), -1), of_root(sz(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        const int r = uf.find(v);
        if (of_root[sz(r)] < 0) of_root[sz(r)] = next++;
        cls[sz(v)] = of_root[sz(r)];
    }
    return cls;
}

}  // namespace

std::vector<int> pi0(const FinSSet& x) {
    UnionFind uf(x.count(0));
    if (x.truncation() >= 1)
        for (int e = 0; e < x.count(1); ++e) uf.unite(x.face(1, 0, e), x.face(1, 1, e));
    return number_classes(uf, x.count(0));
}

int pi0_count(const FinSSet& x) {
    const auto cls = pi0(x);
    return cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
}

FinSSet product(const FinSSet& x, const FinSSet& y) {
    const int D = x.truncation();
    if (y.truncation() != D) fail(ErrorCode::TruncationMismatch, "product of different truncations");
    std::vector<std::vector<std::string>> labels(sz(D) + 1);
    Table faces(sz(D) + 1), degens(sz(D) + 1);
    for (int n = 0; n <= D; ++n) {
        const int ny = y.count(n);
        for (int a = 0; a < x.count(n); ++a)
            for (int b = 0; b < ny; ++b) labels[sz(n)].push_back("(" + x.label(n, a) + "," + y.label(n, b) + ")");
        for (int i = 0; n > 0 && i <= n; ++i) {
            std::vector<int> col;
            const int my = y.count(n - 1);
            for (int a = 0; a < x.count(n); ++a)
                for (int b = 0; b < ny; ++b) col.push_back(x.face(n, i, a) * my + y.face(n, i, b));
            faces[sz(n)].push_back(std::move(col));
        }
        for (int i = 0; n < D && i <= n; ++i) {
            std::vector<int> col;
            const int my = y.count(n + 1);
            for (int a = 0; a < x.count(n); ++a)
                for (int b = 0; b < ny; ++b) col.push_back(x.degen(n, i, a) * my + y.degen(n, i, b));
            degens[sz(n)].push_back(std::move(col));
        }
    }
    return FinSSet(D, std::move(labels), std::move(faces), std::move(degens));
}

SSetMap product_projection(const FinSSet& x, const FinSSet& y, int side) {
    const auto p = product(x, y);
    std::vector<std::vector<int>> cells(sz(x.truncation()) + 1);
    for (int n = 0; n <= x.truncation(); ++n)
        for (int a = 0; a < x.count(n); ++a)
            for (int b = 0; b < y.count(n); ++b) cells[sz(n)].push_back(side == 0 ? a : b);
    return SSetMap::trusted(p, side == 0 ? x : y, std::move(cells));
}

SSetMap product_map(const SSetMap& f, const SSetMap& g) {
    const auto src = product(f.source(), g.source());
    const auto tgt = product(f.target(), g.target());
    std::vector<std::vector<int>> cells(sz(src.truncation()) + 1);
    for (int n = 0; n <= src.truncation(); ++n)
        for (int a = 0; a < f.source().count(n); ++a)
            for (int b = 0; b < g.source().count(n); ++b)
                cells[sz(n)].push_back(f(n, a) * g.target().count(n) + g(n, b));
    return SSetMap::trusted(src, tgt, std::move(cells));
}

Coproduct coproduct(const FinSSet& x, const FinSSet& y) {
    const int D = x.truncation();
    if (y.truncation() != D) fail(ErrorCode::TruncationMismatch, "coproduct of different truncations");
    std::vector<std::vector<std::string>> labels(sz(D) + 1);
    Table faces(sz(D) + 1), degens(sz(D) + 1);
    std::vector<std::vector<int>> left(sz(D) + 1), right(sz(D) + 1);
    for (int n = 0; n <= D; ++n) {
        for (int a = 0; a < x.count(n); ++a) {
            labels[sz(n)].push_back("l." + x.label(n, a));
            left[sz(n)].push_back(a);
        }
        for (int b = 0; b < y.count(n); ++b) {
            labels[sz(n)].push_back("r." + y.label(n, b));
            right[sz(n)].push_back(x.count(n) + b);
        }
        for (int i = 0; n > 0 && i <= n; ++i) {
            std::vector<int> col;
            for (int a = 0; a < x.count(n); ++a) col.push_back(x.face(n, i, a));
            for (int b = 0; b < y.count(n); ++b) col.push_back(x.count(n - 1) + y.face(n, i, b));
            faces[sz(n)].push_back(std::move(col));
        }
        for (int i = 0; n < D && i <= n; ++i) {
            std::vector<int> col;
            for (int a = 0; a < x.count(n); ++a) col.push_back(x.degen(n, i, a));
            for (int b = 0; b < y.count(n); ++b) col.push_back(x.count(n + 1) + y.degen(n, i, b));
            degens[sz(n)].push_back(std::move(col));
        }
    }
    Coproduct out;
    out.object = FinSSet(D, std::move(labels), std::move(faces), std::move(degens));
    out.left = SSetMap::trusted(x, out.object, std::move(left));
    out.right = SSetMap::trusted(y, out.object, std::move(right));
    return out;
}

Pullback pullback(const SSetMap& f, const SSetMap& g) {
    if (!(f.target() == g.target())) fail(ErrorCode::DomainMismatch, "pullback legs have different targets");
    const FinSSet& x = f.source();
    const FinSSet& y = g.source();
    const int D = x.truncation();
    std::vector<std::vector<std::pair<int, int>>> cells(sz(D) + 1);
    for (int n = 0; n <= D; ++n)
        for (int a = 0; a < x.count(n); ++a)
            for (int b = 0; b < y.count(n); ++b)
                if (f(n, a) == g(n, b)) cells[sz(n)].push_back({a, b});
    Pullback out;
    out.object = build_sset<std::pair<int, int>>(
        D, cells, [&](int n, const std::pair<int, int>& p) { return "(" + x.label(n, p.first) + "," + y.label(n, p.second) + ")"; },
        [&](int n, int i, const std::pair<int, int>& p) { return std::pair{x.face(n, i, p.first), y.face(n, i, p.second)}; },
        [&](int n, int i, const std::pair<int, int>& p) { return std::pair{x.degen(n, i, p.first), y.degen(n, i, p.second)}; });
    std::vector<std::vector<int>> left(sz(D) + 1), right(sz(D) + 1);
    for (int n = 0; n <= D; ++n)
        for (const auto& [a, b] : cells[sz(n)]) {
            left[sz(n)].push_back(a);
            right[sz(n)].push_back(b);
        }
    out.left = SSetMap::trusted(out.object, x, std::move(left));
    out.right = SSetMap::trusted(out.object, y, std::move(right));
    return out;
}

Quotient quotient(const FinSSet& x, const std::vector<std::vector<std::pair<int, int>>>& pairs) {
    const int D = x.truncation();
    std::vector<UnionFind> uf;
    for (int n = 0; n <= D; ++n) uf.emplace_back(x.count(n));
    std::vector<std::pair<int, std::pair<int, int>>> work;
    for (int n = 0; n <= D && n < static_cast<int>(pairs.size()); ++n)
        for (const auto& p : pairs[sz(n)]) work.push_back({n, p});
    while (!work.empty()) {
        const auto [n, p] = work.back();
        work.pop_back();
        if (!uf[sz(n)].unite(p.first, p.second)) continue;
        for (int i = 0; n > 0 && i <= n; ++i) work.push_back({n - 1, {x.face(n, i, p.first), x.face(n, i, p.second)}});
        for (int i = 0; n < D && i <= n; ++i) work.push_back({n + 1, {x.degen(n, i, p.first), x.degen(n, i, p.second)}});
    }
    std::vector<std::vector<int>> cls(sz(D) + 1);
    std::vector<std::vector<int>> rep(sz(D) + 1);
    for (int n = 0; n <= D; ++n) {
        cls[sz(n)] = number_classes(uf[sz(n)], x.count(n));
        for (int c = 0; c < x.count(n); ++c)
            if (cls[sz(n)][sz(c)] == static_cast<int>(rep[sz(n)].size())) rep[sz(n)].push_back(c);
    }
    std::vector<std::vector<std::string>> labels(sz(D) + 1);
    Table faces(sz(D) + 1), degens(sz(D) + 1);
    for (int n = 0; n <= D; ++n) {
        for (int r : rep[sz(n)]) labels[sz(n)].push_back(x.label(n, r));
        for (int i = 0; n > 0 && i <= n; ++i) {
            std::vector<int> col(rep[sz(n)].size(), -1);
            for (int c = 0; c < x.count(n); ++c) {
                int& slot = col[sz(cls[sz(n)][sz(c)])];
                const int v = cls[sz(n - 1)][sz(x.face(n, i, c))];
                if (slot >= 0 && slot != v)
                    fail(ErrorCode::IllFormedQuotient, "induced d" + std::to_string(i) + " is not single-valued at degree " + std::to_string(n));
                slot = v;
            }
            faces[sz(n)].push_back(std::move(col));
        }
        for (int i = 0; n < D && i <= n; ++i) {
            std::vector<int> col(rep[sz(n)].size(), -1);
            for (int c = 0; c < x.count(n); ++c) {
                int& slot = col[sz(cls[sz(n)][sz(c)])];
                const int v = cls[sz(n + 1)][sz(x.degen(n, i, c))];
                if (slot >= 0 && slot != v)
                    fail(ErrorCode::IllFormedQuotient, "induced s" + std::to_string(i) + " is not single-valued at degree " + std::to_string(n));
                slot = v;
            }
            degens[sz(n)].push_back(std::move(col));
        }
    }
    Quotient out;
    out.object = FinSSet(D, std::move(labels), std::move(faces), std::move(degens));
    out.projection = SSetMap::trusted(x, out.object, std::move(cls));
    return out;
}

Quotient coequalizer(const SSetMap& f, const SSetMap& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target()))
        fail(ErrorCode::DomainMismatch, "coequalizer needs parallel maps");
    std::vector<std::vector<std::pair<int, int>>> pairs(sz(f.source().truncation()) + 1);
    for (int n = 0; n <= f.source().truncation(); ++n)
        for (int c = 0; c < f.source().count(n); ++c) pairs[sz(n)].push_back({f(n, c), g(n, c)});
    return quotient(f.target(), pairs);
}

Inclusion sub_sset(const FinSSet& x, const std::vector<std::vector<bool>>& keep) {
    const int D = x.truncation();
    if (static_cast<int>(keep.size()) != D + 1) fail(ErrorCode::InvalidInput, "keep mask needs one entry per degree");
    std::vector<std::vector<int>> kept(sz(D) + 1), renumber(sz(D) + 1);
    for (int n = 0; n <= D; ++n) {
        if (static_cast<int>(keep[sz(n)].size()) != x.count(n)) fail(ErrorCode::InvalidInput, "keep mask has the wrong length");
        renumber[sz(n)].assign(sz(x.count(n)), -1);
        for (int c = 0; c < x.count(n); ++c)
            if (keep[sz(n)][sz(c)]) {
                renumber[sz(n)][sz(c)] = static_cast<int>(kept[sz(n)].size());
                kept[sz(n)].push_back(c);
            }
    }
    std::vector<std::vector<std::string>> labels(sz(D) + 1);
    Table faces(sz(D) + 1), degens(sz(D) + 1);
    for (int n = 0; n <= D; ++n) {
        for (int c : kept[sz(n)]) labels[sz(n)].push_back(x.label(n, c));
        for (int i = 0; n > 0 && i <= n; ++i) {
            std::vector<int> col;
            for (int c : kept[sz(n)]) {
                const int v = renumber[sz(n - 1)][sz(x.face(n, i, c))];
                if (v < 0) fail(ErrorCode::InvalidInput, "subset is not closed under d" + std::to_string(i) + " at '" + x.label(n, c) + "'");
                col.push_back(v);
            }
            faces[sz(n)].push_back(std::move(col));
        }
        for (int i = 0; n < D && i <= n; ++i) {
            std::vector<int> col;
            for (int c : kept[sz(n)]) {
                const int v = renumber[sz(n + 1)][sz(x.degen(n, i, c))];
                if (v < 0) fail(ErrorCode::InvalidInput, "subset is not closed under s" + std::to_string(i) + " at '" + x.label(n, c) + "'");
                col.push_back(v);
            }
            degens[sz(n)].push_back(std::move(col));
        }
    }
    Inclusion out;
    out.object = FinSSet(D, std::move(labels), std::move(faces), std::move(degens));
    out.inclusion = SSetMap::trusted(out.object, x, std::move(kept));
    return out;
}

Inclusion remove_cell(const FinSSet& x, int n, int c) {
    const int D = x.truncation();
    std::vector<std::vector<bool>> keep(sz(D) + 1);
    for (int m = 0; m <= D; ++m) keep[sz(m)].assign(sz(x.count(m)), true);
    keep.at(sz(n)).at(sz(c)) = false;
    for (int m = n + 1; m <= D; ++m)
        for (int d = 0; d < x.count(m); ++d)
            for (int i = 0; i <= m; ++i)
                if (!keep[sz(m - 1)][sz(x.face(m, i, d))]) keep[sz(m)][sz(d)] = false;
    return sub_sset(x, keep);
}

Inclusion image(const SSetMap& f) {
    const FinSSet& y = f.target();
    std::vector<std::vector<bool>> keep(sz(y.truncation()) + 1);
    for (int n = 0; n <= y.truncation(); ++n) {
        keep[sz(n)].assign(sz(y.count(n)), false);
        for (int v : f.cells()[sz(n)]) keep[sz(n)][sz(v)] = true;
    }
    return sub_sset(y, keep);
}

namespace {

class MapSearch {
public:
    MapSearch(const FinSSet& x, const FinSSet& y, const std::function<bool(const SSetMap&)>& visit,
              const MapOptions& options)
        : x_(x), y_(y), visit_(visit), options_(options), budget_(options.budget) {
        D_ = x.truncation();
        if (y.truncation() != D_) fail(ErrorCode::TruncationMismatch, "maps between different truncations");
        by_faces_.resize(sz(D_) + 1);
        for (int n = 1; n <= D_; ++n)
            for (int c = 0; c < y.count(n); ++c) by_faces_[sz(n)][faces_of(y, n, c)].push_back(c);
        reps_.resize(sz(D_) + 1);
        for (int n = 0; n <= D_; ++n) reps_[sz(n)].resize(sz(x.count(n)));
        for (int n = 0; n < D_; ++n)
            for (int i = 0; i <= n; ++i)
                for (int c = 0; c < x.count(n); ++c) reps_[sz(n + 1)][sz(x.degen(n, i, c))].push_back({i, c});
        for (int n = 0; n <= D_; ++n)
            for (int c = 0; c < x.count(n); ++c) order_.push_back({n, c});
        // cofaces[n][c]: non-degenerate degree-(n+1) cells having c as a face,
        // checked for a filler as soon as their boundary is placed
        cofaces_.resize(sz(D_) + 1);
        for (int n = 0; n <= D_; ++n) cofaces_[sz(n)].resize(sz(x.count(n)));
        for (int n = 1; n <= D_; ++n)
            for (int c = 0; c < x.count(n); ++c) {
                if (!reps_[sz(n)][sz(c)].empty()) continue;
                std::set<int> seen;
                for (int i = 0; i <= n; ++i)
                    if (seen.insert(x.face(n, i, c)).second) cofaces_[sz(n - 1)][sz(x.face(n, i, c))].push_back(c);
            }
        cells_.resize(sz(D_) + 1);
        used_.resize(sz(D_) + 1);
        for (int n = 0; n <= D_; ++n) {
            cells_[sz(n)].assign(sz(x.count(n)), -1);
            used_[sz(n)].assign(sz(y.count(n)), 0);
        }
    }

    void run() { step(0); }

private:
    static std::vector<int> faces_of(const FinSSet& s, int n, int c) {
        std::vector<int> out;
        for (int i = 0; i <= n; ++i) out.push_back(s.face(n, i, c));
        return out;
    }

    bool accept(int n, int c, int v) {
        if (options_.injective && used_[sz(n)][sz(v)]) return false;
        return !options_.allow || options_.allow(n, c, v);
    }

    // Whether every coface of (n, c) whose boundary is now complete still has
    // an acceptable filler.
    bool fillable(int n, int c) {
        if (n == D_) return true;
        for (int p : cofaces_[sz(n)][sz(c)]) {
            std::vector<int> key;
            for (int i = 0; i <= n + 1; ++i) {
                const int v = cells_[sz(n)][sz(x_.face(n + 1, i, p))];
                if (v < 0) break;
                key.push_back(v);
            }
            if (static_cast<int>(key.size()) < n + 2) continue;
            auto it = by_faces_[sz(n + 1)].find(key);
            if (it == by_faces_[sz(n + 1)].end()) return false;
            bool any = false;
            for (int w : it->second) any = any || accept(n + 1, p, w);
            if (!any) return false;
        }
        return true;
    }

    bool place(std::size_t pos, int n, int c, int v) {
        budget_.spend();
        cells_[sz(n)][sz(c)] = v;
        ++used_[sz(n)][sz(v)];
        const bool go_on = !fillable(n, c) || step(pos + 1);
        --used_[sz(n)][sz(v)];
        cells_[sz(n)][sz(c)] = -1;
        return go_on;
    }

    // Returns false once the visitor asked to stop.
    bool step(std::size_t pos) {
        if (pos == order_.size()) return visit_(SSetMap::trusted(x_, y_, cells_));
        const auto [n, c] = order_[pos];
        const auto& reps = reps_[sz(n)][sz(c)];
        if (!reps.empty()) {
            int forced = -1;
            for (const auto& [i, lower] : reps) {
                const int v = y_.degen(n - 1, i, cells_[sz(n - 1)][sz(lower)]);
                if (forced >= 0 && forced != v) return true;
                forced = v;
            }
            return !accept(n, c, forced) || place(pos, n, c, forced);
        }
        if (n == 0) {
            for (int v = 0; v < y_.count(0); ++v)
                if (accept(0, c, v) && !place(pos, 0, c, v)) return false;
            return true;
        }
        std::vector<int> key;
        for (int i = 0; i <= n; ++i) key.push_back(cells_[sz(n - 1)][sz(x_.face(n, i, c))]);
        auto it = by_faces_[sz(n)].find(key);
        if (it == by_faces_[sz(n)].end()) return true;
        for (int v : it->second)
            if (accept(n, c, v) && !place(pos, n, c, v)) return false;
        return true;
    }

    const FinSSet& x_;
    const FinSSet& y_;
    const std::function<bool(const SSetMap&)>& visit_;
    const MapOptions& options_;
    Budget budget_;
    int D_ = 0;
    std::vector<std::map<std::vector<int>, std::vector<int>>> by_faces_;
    std::vector<std::vector<std::vector<std::pair<int, int>>>> reps_;
    std::vector<std::pair<int, int>> order_;
    std::vector<std::vector<std::vector<int>>> cofaces_;
    std::vector<std::vector<int>> cells_;
    std::vector<std::vector<int>> used_;
};

}  // namespace

void for_each_map(const FinSSet& x, const FinSSet& y, const std::function<bool(const SSetMap&)>& visit,
                  const MapOptions& options) {
    MapSearch(x, y, visit, options).run();
}

std::vector<SSetMap> mapset(const FinSSet& x, const FinSSet& y, std::uint64_t budget) {
    std::vector<SSetMap> out;
    MapOptions options;
    options.budget = budget;
    for_each_map(
        x, y,
        [&](const SSetMap& f) {
            out.push_back(f);
            return true;
        },
        options);
    return out;
}

std::optional<SSetMap> find_isomorphism(const FinSSet& x, const FinSSet& y, std::uint64_t budget) {
    if (x.truncation() != y.truncation()) return std::nullopt;
    for (int n = 0; n <= x.truncation(); ++n)
        if (x.count(n) != y.count(n)) return std::nullopt;
    std::optional<SSetMap> found;
    MapOptions options;
    options.budget = budget;
    options.injective = true;
    for_each_map(
        x, y,
        [&](const SSetMap& f) {
            found = f;
            return false;
        },
        options);
    return found;
}

InternalHom internal_hom(const FinSSet& x, const FinSSet& y, int truncation, std::uint64_t budget,
                         const std::function<bool(int, int, int, int)>& allow) {
    const int T = y.truncation();
    if (x.truncation() != T) fail(ErrorCode::TruncationMismatch, "internal hom between different truncations");
    const int D = truncation < 0 ? T : truncation;
    InternalHom out;
    out.maps.resize(sz(D) + 1);
    // simplices[k][n]: the maps [n] -> [k], indexed by rank
    std::vector<std::vector<std::vector<SimplexMap>>> simplices(sz(D) + 2);
    for (int k = 0; k <= D + 1; ++k)
        for (int n = 0; n <= T; ++n) simplices[sz(k)].push_back(enumerate_maps(n, k));
    Budget spent(budget);
    std::vector<std::map<std::vector<std::vector<int>>, int>> index(sz(D) + 1);
    for (int k = 0; k <= D; ++k) {
        const auto p = product(x, standard(k, T));
        MapOptions options;
        options.budget = budget - spent.used();
        if (allow) options.allow = [&](int d, int c, int v) { return allow(k, d, c, v); };
        for_each_map(
            p, y,
            [&](const SSetMap& f) {
                spent.spend();
                index[sz(k)].emplace(f.cells(), static_cast<int>(out.maps[sz(k)].size()));
                out.maps[sz(k)].push_back(f.cells());
                return true;
            },
            options);
    }
    // precomposition with x * theta for theta : [j] -> [k]
    auto restrict = [&](int k, const std::vector<std::vector<int>>& cells, int j, const SimplexMap& theta) {
        std::vector<std::vector<int>> result(sz(T) + 1);
        for (int n = 0; n <= T; ++n) {
            const auto& src = simplices[sz(j)][sz(n)];
            const int wide = static_cast<int>(simplices[sz(k)][sz(n)].size());
            for (int a = 0; a < x.count(n); ++a)
                for (const auto& alpha : src)
                    result[sz(n)].push_back(cells[sz(n)][sz(a * wide + static_cast<int>(rank(compose(alpha, theta))))]);
        }
        return index[sz(j)].at(result);
    };
    std::vector<std::vector<std::string>> labels(sz(D) + 1);
    Table faces(sz(D) + 1), degens(sz(D) + 1);
    for (int k = 0; k <= D; ++k) {
        for (std::size_t c = 0; c < out.maps[sz(k)].size(); ++c) labels[sz(k)].push_back("h" + std::to_string(c));
        for (int i = 0; k > 0 && i <= k; ++i) {
            std::vector<int> col;
            for (const auto& cells : out.maps[sz(k)]) col.push_back(restrict(k, cells, k - 1, SimplexMap::coface(k, i)));
            faces[sz(k)].push_back(std::move(col));
        }
        for (int i = 0; k < D && i <= k; ++i) {
            std::vector<int> col;
            for (const auto& cells : out.maps[sz(k)]) col.push_back(restrict(k, cells, k + 1, SimplexMap::codegeneracy(k, i)));
            degens[sz(k)].push_back(std::move(col));
        }
    }
    out.object = FinSSet(D, std::move(labels), std::move(faces), std::move(degens));
    return out;
}

SSetMap evaluate_at_vertex(const InternalHom& hom, int n, int v, const FinSSet& y) {
    const int D = hom.object.truncation();
    if (D != y.truncation()) fail(ErrorCode::TruncationMismatch, "evaluation needs matching truncations");
    std::vector<std::vector<int>> cells(sz(D) + 1);
    for (int k = 0; k <= D; ++k) {
        // the degree-k cell (constant v, identity) of standard(n) * standard(k)
        const int a = static_cast<int>(rank(SimplexMap(n, std::vector<int>(sz(k) + 1, v))));
        const int b = static_cast<int>(rank(SimplexMap::identity(k)));
        const int wide = static_cast<int>(count_maps(k, k));
        for (const auto& cells_k : hom.maps[sz(k)]) cells[sz(k)].push_back(cells_k[sz(k)][sz(a * wide + b)]);
    }
    return SSetMap(hom.object, y, std::move(cells));
}

std::vector<int> spine(const FinSSet& x, int n, int c) {
    std::vector<int> edges;
    for (int i = 0; i < n; ++i) edges.push_back(act(x, se(i, n), c));
    return edges;
}

SegalWitness is_strict_segal(const FinSSet& x) {
    SegalWitness w;
    for (int n = 2; n <= x.truncation(); ++n) {
        std::map<std::vector<int>, int> seen;
        for (int c = 0; c < x.count(n); ++c) {
            auto edges = spine(x, n, c);
            auto [it, fresh] = seen.emplace(edges, c);
            if (!fresh) {
                w = {false, n, edges,
                     "cells '" + x.label(n, it->second) + "' and '" + x.label(n, c) + "' share a spine"};
                return w;
            }
        }
        // every composable tuple of edges must have a filler
        std::vector<int> tuple;
        bool missing = false;
        std::function<void()> extend = [&] {
            if (missing) return;
            if (static_cast<int>(tuple.size()) == n) {
                if (!seen.count(tuple)) missing = true;
                return;
            }
            for (int e = 0; e < x.count(1) && !missing; ++e) {
                if (!tuple.empty() && x.face(1, 1, e) != x.face(1, 0, tuple.back())) continue;
                tuple.push_back(e);
                extend();
                if (!missing) tuple.pop_back();
            }
        };
        extend();
        if (missing) {
            std::vector<std::string> ids;
            for (int e : tuple) ids.push_back(x.label(1, e));
            w = {false, n, tuple, "composable edges (" + join(ids, ", ") + ") have no filler"};
            return w;
        }
    }
    return w;
}

FinCategory fundamental_category(const FinSSet& x) {
    if (x.truncation() < 2) fail(ErrorCode::NotSegal, "fundamental category needs truncation >= 2");
    const auto w = is_strict_segal(x);
    if (!w.segal) fail(ErrorCode::NotSegal, "not strict Segal in degree " + std::to_string(w.degree) + ": " + w.detail);
    std::vector<std::string> objects = x.labels()[0];
    std::vector<Arrow> arrows;
    for (int e = 0; e < x.count(1); ++e) arrows.push_back({x.label(1, e), x.face(1, 1, e), x.face(1, 0, e)});
    std::vector<int> identities;
    for (int v = 0; v < x.count(0); ++v) identities.push_back(x.degen(0, 0, v));
    std::vector<Composite> composites;
    for (int c = 0; c < x.count(2); ++c) composites.push_back({x.face(2, 0, c), x.face(2, 2, c), x.face(2, 1, c)});
    try {
        return FinCategory(std::move(objects), std::move(arrows), std::move(identities), composites);
    } catch (const Error& e) {
        fail(ErrorCode::NotSegal, std::string("edges do not form a category: ") + e.what());
    }
}

}  // namespace segalkit
