#include "segalkit/fincat.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace segalkit {

namespace {

std::string arrow_desc(const FinCategory& c, int a) {
    return "'" + c.arrow(a).id + "'";
}

}  // namespace

FinCategory::FinCategory(std::vector<std::string> objects, std::vector<Arrow> arrows,
                         std::vector<int> identities, std::span<const Composite> composites)
    : objects_(std::move(objects)), arrows_(std::move(arrows)), identities_(std::move(identities)) {
    const int n_obj = object_count();
    const int n_arr = arrow_count();
    {
        std::set<std::string> seen(objects_.begin(), objects_.end());
        if (static_cast<int>(seen.size()) != n_obj)
            fail(ErrorCode::InvalidInput, "duplicate object name");
    }
    {
        std::set<std::string> seen;
        for (const auto& a : arrows_) {
            if (!seen.insert(a.id).second) fail(ErrorCode::InvalidInput, "duplicate arrow id '" + a.id + "'");
            if (a.source < 0 || a.source >= n_obj || a.target < 0 || a.target >= n_obj)
                fail(ErrorCode::InvalidInput, "arrow '" + a.id + "' has an unknown endpoint");
        }
    }
    if (static_cast<int>(identities_.size()) != n_obj)
        fail(ErrorCode::InvalidInput, "every object needs exactly one identity");
    for (int x = 0; x < n_obj; ++x) {
        const int id = identities_[static_cast<std::size_t>(x)];
        if (id < 0 || id >= n_arr || arrows_[static_cast<std::size_t>(id)].source != x ||
            arrows_[static_cast<std::size_t>(id)].target != x)
            fail(ErrorCode::InvalidInput, "identity of object '" + objects_[static_cast<std::size_t>(x)] +
                                              "' is not an endo-arrow of it");
    }
    if (std::set<int>(identities_.begin(), identities_.end()).size() != identities_.size())
        fail(ErrorCode::InvalidInput, "two objects share an identity arrow");

    const auto A = static_cast<std::size_t>(n_arr);
    table_.assign(A * A, -1);
    auto slot = [&](int g, int f) -> int& { return table_[static_cast<std::size_t>(g) * A + static_cast<std::size_t>(f)]; };
    for (int a = 0; a < n_arr; ++a) {
        slot(a, identity(source(a))) = a;
        slot(identity(target(a)), a) = a;
    }
    for (const auto& entry : composites) {
        const auto [g, f, r] = entry;
        if (g < 0 || g >= n_arr || f < 0 || f >= n_arr || r < 0 || r >= n_arr)
            fail(ErrorCode::InvalidInput, "composition entry refers to an unknown arrow");
        if (target(f) != source(g))
            fail(ErrorCode::InvalidInput, "composition entry " + arrow_desc(*this, g) + " o " +
                                              arrow_desc(*this, f) + " is not composable");
        if (source(r) != source(f) || target(r) != target(g))
            fail(ErrorCode::InvalidInput, "composite of " + arrow_desc(*this, g) + " o " +
                                              arrow_desc(*this, f) + " has the wrong endpoints");
        int& cell = slot(g, f);
        if (cell != -1 && cell != r)
            fail(ErrorCode::InvalidInput, "conflicting composites for " + arrow_desc(*this, g) + " o " +
                                              arrow_desc(*this, f));
        cell = r;
    }
    for (int g = 0; g < n_arr; ++g)
        for (int f = 0; f < n_arr; ++f)
            if (target(f) == source(g) && slot(g, f) == -1)
                fail(ErrorCode::InvalidInput, "missing composite " + arrow_desc(*this, g) + " o " +
                                                  arrow_desc(*this, f));
    for (int h = 0; h < n_arr; ++h)
        for (int g = 0; g < n_arr; ++g) {
            if (target(g) != source(h)) continue;
            for (int f = 0; f < n_arr; ++f) {
                if (target(f) != source(g)) continue;
                if (compose(compose(h, g), f) != compose(h, compose(g, f)))
                    fail(ErrorCode::InvalidInput, "composition is not associative on " + arrow_desc(*this, h) +
                                                      ", " + arrow_desc(*this, g) + ", " + arrow_desc(*this, f));
            }
        }
    homs_.assign(static_cast<std::size_t>(n_obj) * static_cast<std::size_t>(n_obj), {});
    for (int a = 0; a < n_arr; ++a)
        homs_[static_cast<std::size_t>(source(a)) * static_cast<std::size_t>(n_obj) +
              static_cast<std::size_t>(target(a))]
            .push_back(a);
}

std::optional<int> FinCategory::inverse(int a) const {
    for (int b : hom(target(a), source(a)))
        if (compose(b, a) == identity(source(a)) && compose(a, b) == identity(target(a))) return b;
    return std::nullopt;
}

int FinCategory::find_object(std::string_view name) const {
    for (int x = 0; x < object_count(); ++x)
        if (objects_[static_cast<std::size_t>(x)] == name) return x;
    return -1;
}

int FinCategory::find_arrow(std::string_view id) const {
    for (int a = 0; a < arrow_count(); ++a)
        if (arrows_[static_cast<std::size_t>(a)].id == id) return a;
    return -1;
}

std::vector<Composite> FinCategory::composites() const {
    std::vector<Composite> out;
    for (int g = 0; g < arrow_count(); ++g) {
        if (is_identity(g)) continue;
        for (int f = 0; f < arrow_count(); ++f)
            if (!is_identity(f) && target(f) == source(g)) out.push_back({g, f, compose(g, f)});
    }
    return out;
}

FinCategory point_category() { return linear(0); }

FinCategory empty_category() { return FinCategory(); }

FinCategory linear(int n) {
    if (n < 0) fail(ErrorCode::InvalidInput, "linear(n) needs n >= 0");
    std::vector<std::string> objects;
    for (int i = 0; i <= n; ++i) objects.push_back(std::to_string(i));
    std::vector<Arrow> arrows;
    std::map<std::pair<int, int>, int> index;
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            index[{i, j}] = static_cast<int>(arrows.size());
            arrows.push_back({std::to_string(i) + "->" + std::to_string(j), i, j});
        }
    std::vector<int> identities;
    for (int i = 0; i <= n; ++i) identities.push_back(index[{i, i}]);
    std::vector<Composite> composites;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) composites.push_back({index[{j, k}], index[{i, j}], index[{i, k}]});
    return FinCategory(std::move(objects), std::move(arrows), std::move(identities), composites);
}

FinCategory interval_category() { return linear(1); }

FinCategory bar_interval() {
    std::vector<Arrow> arrows{{"1x", 0, 0}, {"1y", 1, 1}, {"f", 0, 1}, {"g", 1, 0}};
    const std::vector<Composite> composites{{3, 2, 0}, {2, 3, 1}};
    return FinCategory({"x", "y"}, std::move(arrows), {0, 1}, composites);
}

FinCategory discrete_category(int k) {
    if (k < 0) fail(ErrorCode::InvalidInput, "negative object count");
    std::vector<std::string> objects;
    std::vector<Arrow> arrows;
    std::vector<int> identities;
    for (int i = 0; i < k; ++i) {
        objects.push_back(std::to_string(i));
        arrows.push_back({"1_" + std::to_string(i), i, i});
        identities.push_back(i);
    }
    return FinCategory(std::move(objects), std::move(arrows), std::move(identities), {});
}

FinCategory cyclic_group(int k) {
    if (k < 1) fail(ErrorCode::InvalidInput, "cyclic group order must be positive");
    std::vector<Arrow> arrows;
    for (int i = 0; i < k; ++i) arrows.push_back({"g" + std::to_string(i), 0, 0});
    std::vector<Composite> composites;
    for (int a = 1; a < k; ++a)
        for (int b = 1; b < k; ++b) composites.push_back({a, b, (a + b) % k});
    return FinCategory({"*"}, std::move(arrows), {0}, composites);
}

FinCategory opposite(const FinCategory& c) {
    std::vector<Arrow> arrows;
    for (const auto& a : c.arrows()) arrows.push_back({a.id, a.target, a.source});
    std::vector<int> identities;
    for (int x = 0; x < c.object_count(); ++x) identities.push_back(c.identity(x));
    std::vector<Composite> composites;
    for (const auto& [g, f, r] : c.composites()) composites.push_back({f, g, r});
    return FinCategory(c.objects(), std::move(arrows), std::move(identities), composites);
}

FinCategory builtin(std::string_view name, int n) {
    if (name == "point") return point_category();
    if (name == "empty") return empty_category();
    if (name == "linear") return linear(n);
    if (name == "interval") return interval_category();
    if (name == "bar_interval") return bar_interval();
    fail(ErrorCode::InvalidInput, "unknown builtin category '" + std::string(name) + "'");
}

bool is_functor(const FinCategory& a, const FinCategory& b, const Functor& f) {
    if (static_cast<int>(f.on_objects.size()) != a.object_count() ||
        static_cast<int>(f.on_arrows.size()) != a.arrow_count())
        return false;
    for (int x : f.on_objects)
        if (x < 0 || x >= b.object_count()) return false;
    for (int y : f.on_arrows)
        if (y < 0 || y >= b.arrow_count()) return false;
    for (int x = 0; x < a.object_count(); ++x)
        if (f.on_arrows[static_cast<std::size_t>(a.identity(x))] != b.identity(f.on_objects[static_cast<std::size_t>(x)]))
            return false;
    for (int u = 0; u < a.arrow_count(); ++u) {
        const int v = f.on_arrows[static_cast<std::size_t>(u)];
        if (b.source(v) != f.on_objects[static_cast<std::size_t>(a.source(u))] ||
            b.target(v) != f.on_objects[static_cast<std::size_t>(a.target(u))])
            return false;
    }
    for (int g = 0; g < a.arrow_count(); ++g)
        for (int h = 0; h < a.arrow_count(); ++h) {
            const int gh = a.compose(g, h);
            if (gh < 0) continue;
            if (f.on_arrows[static_cast<std::size_t>(gh)] !=
                b.compose(f.on_arrows[static_cast<std::size_t>(g)], f.on_arrows[static_cast<std::size_t>(h)]))
                return false;
        }
    return true;
}

Functor identity_functor(const FinCategory& c) {
    Functor f;
    f.on_objects.resize(static_cast<std::size_t>(c.object_count()));
    f.on_arrows.resize(static_cast<std::size_t>(c.arrow_count()));
    std::iota(f.on_objects.begin(), f.on_objects.end(), 0);
    std::iota(f.on_arrows.begin(), f.on_arrows.end(), 0);
    return f;
}

Functor compose(const Functor& first, const Functor& second) {
    Functor out;
    for (int x : first.on_objects) out.on_objects.push_back(second.on_objects.at(static_cast<std::size_t>(x)));
    for (int a : first.on_arrows) out.on_arrows.push_back(second.on_arrows.at(static_cast<std::size_t>(a)));
    return out;
}

namespace {

std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exponent) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        result *= base;
    }
    return result;
}

class FunctorSearch {
public:
    FunctorSearch(const FinCategory& a, const FinCategory& b, const std::function<bool(const Functor&)>& visit,
                  std::uint64_t budget)
        : a_(a), b_(b), visit_(visit), budget_(budget) {
        // checks_[k]: composable pairs whose last-assigned member is arrow k
        checks_.resize(static_cast<std::size_t>(a.arrow_count()));
        for (int g = 0; g < a.arrow_count(); ++g)
            for (int f = 0; f < a.arrow_count(); ++f) {
                const int gf = a.compose(g, f);
                if (gf < 0) continue;
                checks_[static_cast<std::size_t>(std::max({g, f, gf}))].push_back({g, f, gf});
            }
    }

    void run() {
        const auto count = saturating_power(static_cast<std::uint64_t>(b_.object_count()),
                                            static_cast<std::uint64_t>(a_.object_count()));
        if (count > budget_.limit())
            fail(ErrorCode::BudgetExceeded, "object assignments exceed the enumeration budget");
        functor_.on_objects.assign(static_cast<std::size_t>(a_.object_count()), 0);
        functor_.on_arrows.assign(static_cast<std::size_t>(a_.arrow_count()), -1);
        if (a_.object_count() > 0 && b_.object_count() == 0) return;
        while (true) {
            budget_.spend();
            if (!assign_arrow(0)) return;
            int pos = a_.object_count() - 1;
            while (pos >= 0 && functor_.on_objects[static_cast<std::size_t>(pos)] == b_.object_count() - 1)
                functor_.on_objects[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0) return;
            ++functor_.on_objects[static_cast<std::size_t>(pos)];
        }
    }

private:
    bool consistent(int k) const {
        for (const auto& [g, f, gf] : checks_[static_cast<std::size_t>(k)])
            if (functor_.on_arrows[static_cast<std::size_t>(gf)] !=
                b_.compose(functor_.on_arrows[static_cast<std::size_t>(g)], functor_.on_arrows[static_cast<std::size_t>(f)]))
                return false;
        return true;
    }

    // Returns false when the visitor asked to stop.
    bool assign_arrow(int k) {
        if (k == a_.arrow_count()) return visit_(functor_);
        const int x = functor_.on_objects[static_cast<std::size_t>(a_.source(k))];
        const int y = functor_.on_objects[static_cast<std::size_t>(a_.target(k))];
        if (a_.is_identity(k)) {
            functor_.on_arrows[static_cast<std::size_t>(k)] = b_.identity(x);
            return !consistent(k) || assign_arrow(k + 1);
        }
        for (int candidate : b_.hom(x, y)) {
            budget_.spend();
            functor_.on_arrows[static_cast<std::size_t>(k)] = candidate;
            if (consistent(k) && !assign_arrow(k + 1)) return false;
        }
        return true;
    }

    const FinCategory& a_;
    const FinCategory& b_;
    const std::function<bool(const Functor&)>& visit_;
    Budget budget_;
    Functor functor_;
    std::vector<std::vector<Composite>> checks_;
};

}  // namespace

void for_each_functor(const FinCategory& a, const FinCategory& b,
                      const std::function<bool(const Functor&)>& visit, std::uint64_t budget) {
    FunctorSearch(a, b, visit, budget).run();
}

std::vector<Functor> enumerate_functors(const FinCategory& a, const FinCategory& b, std::uint64_t budget) {
    std::vector<Functor> out;
    for_each_functor(
        a, b,
        [&](const Functor& f) {
            out.push_back(f);
            return true;
        },
        budget);
    return out;
}

bool is_fully_faithful(const FinCategory& a, const FinCategory& b, const Functor& f) {
    for (int x = 0; x < a.object_count(); ++x)
        for (int y = 0; y < a.object_count(); ++y) {
            const auto& src = a.hom(x, y);
            const auto& dst = b.hom(f.on_objects[static_cast<std::size_t>(x)], f.on_objects[static_cast<std::size_t>(y)]);
            if (src.size() != dst.size()) return false;
            std::set<int> images;
            for (int u : src) images.insert(f.on_arrows[static_cast<std::size_t>(u)]);
            if (images.size() != dst.size()) return false;
        }
    return true;
}

bool is_essentially_surjective(const FinCategory& a, const FinCategory& b, const Functor& f) {
    const auto classes = object_iso_classes(b);
    std::set<int> hit;
    for (int x = 0; x < a.object_count(); ++x)
        hit.insert(classes[static_cast<std::size_t>(f.on_objects[static_cast<std::size_t>(x)])]);
    for (int y = 0; y < b.object_count(); ++y)
        if (!hit.count(classes[static_cast<std::size_t>(y)])) return false;
    return true;
}

bool is_equivalence(const FinCategory& a, const FinCategory& b, const Functor& f) {
    return is_fully_faithful(a, b, f) && is_essentially_surjective(a, b, f);
}

EquivalenceResult are_equivalent(const FinCategory& a, const FinCategory& b, std::uint64_t budget) {
    EquivalenceResult result;
    for_each_functor(
        a, b,
        [&](const Functor& f) {
            if (!is_equivalence(a, b, f)) return true;
            result.equivalent = true;
            result.witness = f;
            return false;
        },
        budget);
    return result;
}

std::optional<Functor> find_isomorphism(const FinCategory& a, const FinCategory& b, std::uint64_t budget) {
    if (a.object_count() != b.object_count() || a.arrow_count() != b.arrow_count()) return std::nullopt;
    std::optional<Functor> found;
    for_each_functor(
        a, b,
        [&](const Functor& f) {
            std::set<int> images(f.on_arrows.begin(), f.on_arrows.end());
            if (static_cast<int>(images.size()) != b.arrow_count()) return true;
            found = f;
            return false;
        },
        budget);
    return found;
}

namespace {

bool extend_transformation(const FinCategory& a, const FinCategory& b, const Functor& f, const Functor& g,
                           std::vector<int>& components, int x) {
    if (x == a.object_count()) return true;
    const int fx = f.on_objects[static_cast<std::size_t>(x)];
    const int gx = g.on_objects[static_cast<std::size_t>(x)];
    for (int alpha : b.hom(fx, gx)) {
        if (!b.is_isomorphism(alpha)) continue;
        components[static_cast<std::size_t>(x)] = alpha;
        bool ok = true;
        // naturality on arrows between already-assigned objects
        for (int y = 0; y <= x && ok; ++y) {
            for (int u : a.hom(y, x)) {
                const int lhs = b.compose(g.on_arrows[static_cast<std::size_t>(u)], components[static_cast<std::size_t>(y)]);
                const int rhs = b.compose(alpha, f.on_arrows[static_cast<std::size_t>(u)]);
                if (lhs != rhs) { ok = false; break; }
            }
            for (int u : a.hom(x, y)) {
                if (!ok) break;
                const int lhs = b.compose(g.on_arrows[static_cast<std::size_t>(u)], alpha);
                const int rhs = b.compose(components[static_cast<std::size_t>(y)], f.on_arrows[static_cast<std::size_t>(u)]);
                if (lhs != rhs) ok = false;
            }
        }
        if (ok && extend_transformation(a, b, f, g, components, x + 1)) return true;
    }
    return false;
}

}  // namespace

bool naturally_isomorphic(const FinCategory& a, const FinCategory& b, const Functor& f, const Functor& g) {
    std::vector<int> components(static_cast<std::size_t>(a.object_count()), -1);
    return extend_transformation(a, b, f, g, components, 0);
}

bool is_rigid(const FinCategory& c) {
    for (int x = 0; x < c.object_count(); ++x)
        for (int a : c.hom(x, x))
            if (a != c.identity(x) && c.is_isomorphism(a)) return false;
    return true;
}

std::vector<int> object_iso_classes(const FinCategory& c) {
    std::vector<int> cls(static_cast<std::size_t>(c.object_count()), -1);
    int next = 0;
    for (int x = 0; x < c.object_count(); ++x) {
        if (cls[static_cast<std::size_t>(x)] >= 0) continue;
        cls[static_cast<std::size_t>(x)] = next;
        for (int y = x + 1; y < c.object_count(); ++y)
            for (int a : c.hom(x, y))
                if (c.is_isomorphism(a)) {
                    cls[static_cast<std::size_t>(y)] = next;
                    break;
                }
        ++next;
    }
    return cls;
}

std::vector<int> arrow_iso_classes(const FinCategory& c) {
    auto connected = [&](int f, int g) {
        for (int u : c.hom(c.source(f), c.source(g))) {
            if (!c.is_isomorphism(u)) continue;
            for (int v : c.hom(c.target(f), c.target(g)))
                if (c.is_isomorphism(v) && c.compose(v, f) == c.compose(g, u)) return true;
        }
        return false;
    };
    std::vector<int> cls(static_cast<std::size_t>(c.arrow_count()), -1);
    int next = 0;
    for (int f = 0; f < c.arrow_count(); ++f) {
        if (cls[static_cast<std::size_t>(f)] >= 0) continue;
        cls[static_cast<std::size_t>(f)] = next;
        for (int g = f + 1; g < c.arrow_count(); ++g)
            if (cls[static_cast<std::size_t>(g)] < 0 && connected(f, g)) cls[static_cast<std::size_t>(g)] = next;
        ++next;
    }
    return cls;
}

namespace {

struct Letter {
    int side;  // 0 = left, 1 = right
    int arrow;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct Word {
    int source;
    int target;
    std::vector<Letter> letters;
    friend auto operator<=>(const Word&, const Word&) = default;
};

class PushoutBuilder {
public:
    PushoutBuilder(const FinCategory& a, const FinCategory& b, std::span<const std::pair<int, int>> glue)
        : a_(a), b_(b) {
        const int total = a.object_count() + b.object_count();
        parent_.resize(static_cast<std::size_t>(total));
        std::iota(parent_.begin(), parent_.end(), 0);
        for (const auto& [x, y] : glue) {
            if (x < 0 || x >= a.object_count() || y < 0 || y >= b.object_count())
                fail(ErrorCode::InvalidInput, "gluing refers to an unknown object");
            unite(x, a.object_count() + y);
        }
        class_of_.assign(static_cast<std::size_t>(total), -1);
        for (int v = 0; v < total; ++v) {
            const int root = find(v);
            if (class_of_[static_cast<std::size_t>(root)] < 0) {
                class_of_[static_cast<std::size_t>(root)] = static_cast<int>(members_.size());
                members_.emplace_back();
            }
            class_of_[static_cast<std::size_t>(v)] = class_of_[static_cast<std::size_t>(root)];
            members_[static_cast<std::size_t>(class_of_[static_cast<std::size_t>(v)])].push_back(v);
        }
        for (int side = 0; side < 2; ++side) {
            const FinCategory& c = side == 0 ? a : b;
            for (int u = 0; u < c.arrow_count(); ++u)
                if (!c.is_identity(u)) letters_.push_back({side, u});
        }
    }

    Pushout build(std::uint64_t budget) {
        Budget steps(budget, ErrorCode::NonTerminating);
        std::vector<Word> words;
        std::map<Word, int> index;
        auto add = [&](Word w) {
            if (index.emplace(w, static_cast<int>(words.size())).second) words.push_back(std::move(w));
        };
        for (int x = 0; x < static_cast<int>(members_.size()); ++x) add({x, x, {}});
        for (const auto& l : letters_) add({letter_source(l), letter_target(l), {l}});
        for (std::size_t k = 0; k < words.size(); ++k) {
            for (const auto& l : letters_) {
                if (letter_source(l) != words[k].target) continue;
                steps.spend();
                add(append(words[k], l));
            }
        }

        std::vector<std::string> objects;
        for (const auto& m : members_) {
            std::string name;
            for (int v : m) name += (name.empty() ? "" : "=") + vertex_name(v);
            objects.push_back(name);
        }
        std::vector<Arrow> arrows;
        std::vector<int> identities(members_.size());
        for (const auto& w : words) {
            std::string id;
            if (w.letters.empty()) {
                id = "1_" + objects[static_cast<std::size_t>(w.source)];
                identities[static_cast<std::size_t>(w.source)] = static_cast<int>(arrows.size());
            }
            for (const auto& l : w.letters) id += (id.empty() ? "" : ";") + letter_name(l);
            arrows.push_back({id, w.source, w.target});
        }
        std::vector<Composite> composites;
        for (std::size_t g = 0; g < words.size(); ++g) {
            if (words[g].letters.empty()) continue;
            for (std::size_t f = 0; f < words.size(); ++f) {
                if (words[f].letters.empty() || words[f].target != words[g].source) continue;
                Word w = words[f];
                for (const auto& l : words[g].letters) w = append(w, l);
                composites.push_back({static_cast<int>(g), static_cast<int>(f), index.at(w)});
            }
        }
        Pushout out;
        out.category = FinCategory(std::move(objects), std::move(arrows), std::move(identities), composites);
        for (int side = 0; side < 2; ++side) {
            const FinCategory& c = side == 0 ? a_ : b_;
            Functor& f = side == 0 ? out.left : out.right;
            for (int x = 0; x < c.object_count(); ++x) f.on_objects.push_back(object_class(side, x));
            for (int u = 0; u < c.arrow_count(); ++u) {
                const int x = object_class(side, c.source(u));
                if (c.is_identity(u))
                    f.on_arrows.push_back(out.category.identity(x));
                else
                    f.on_arrows.push_back(index.at({x, object_class(side, c.target(u)), {{side, u}}}));
            }
        }
        return out;
    }

private:
    int find(int v) {
        while (parent_[static_cast<std::size_t>(v)] != v) v = parent_[static_cast<std::size_t>(v)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
        return v;
    }
    void unite(int u, int v) {
        u = find(u);
        v = find(v);
        if (u != v) parent_[static_cast<std::size_t>(std::max(u, v))] = std::min(u, v);
    }

    const FinCategory& side_category(int side) const { return side == 0 ? a_ : b_; }
    int object_class(int side, int x) const {
        return class_of_[static_cast<std::size_t>(side == 0 ? x : a_.object_count() + x)];
    }
    int letter_source(const Letter& l) const { return object_class(l.side, side_category(l.side).source(l.arrow)); }
    int letter_target(const Letter& l) const { return object_class(l.side, side_category(l.side).target(l.arrow)); }
    std::string vertex_name(int v) const {
        return v < a_.object_count() ? "l." + a_.object(v) : "r." + b_.object(v - a_.object_count());
    }
    std::string letter_name(const Letter& l) const {
        return (l.side == 0 ? "l." : "r.") + side_category(l.side).arrow(l.arrow).id;
    }

    // Appends a letter and reduces: adjacent letters from the same side that
    // compose inside that side are multiplied out, identities disappear.
    Word append(Word w, Letter l) const {
        w.target = letter_target(l);
        while (true) {
            if (w.letters.empty()) {
                w.letters.push_back(l);
                return w;
            }
            const Letter top = w.letters.back();
            const FinCategory& c = side_category(l.side);
            if (top.side != l.side || c.target(top.arrow) != c.source(l.arrow)) {
                w.letters.push_back(l);
                return w;
            }
            w.letters.pop_back();
            const int product = c.compose(l.arrow, top.arrow);
            if (c.is_identity(product)) return w;
            l = {l.side, product};
        }
    }

    const FinCategory& a_;
    const FinCategory& b_;
    std::vector<int> parent_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> members_;
    std::vector<Letter> letters_;
};

FinCategory reorder_objects(const FinCategory& c, const std::vector<int>& new_of_old,
                            const std::vector<std::string>& names) {
    std::vector<Arrow> arrows;
    for (const auto& a : c.arrows())
        arrows.push_back({a.id, new_of_old[static_cast<std::size_t>(a.source)], new_of_old[static_cast<std::size_t>(a.target)]});
    std::vector<int> identities(static_cast<std::size_t>(c.object_count()));
    for (int x = 0; x < c.object_count(); ++x)
        identities[static_cast<std::size_t>(new_of_old[static_cast<std::size_t>(x)])] = c.identity(x);
    return FinCategory(names, std::move(arrows), std::move(identities), c.composites());
}

}  // namespace

Pushout pushout_over_objects(const FinCategory& a, const FinCategory& b,
                             std::span<const std::pair<int, int>> glue, std::uint64_t budget) {
    return PushoutBuilder(a, b, glue).build(budget);
}

FinCategory spine_category(int n, std::uint64_t budget) {
    if (n < 0) fail(ErrorCode::InvalidInput, "spine length must be >= 0");
    if (n == 0) return point_category();
    const FinCategory edge = linear(1);
    FinCategory chain = edge;
    std::vector<int> vertices{0, 1};  // chain vertex k -> object index
    for (int k = 2; k <= n; ++k) {
        const std::pair<int, int> glue{vertices.back(), 0};
        Pushout p = pushout_over_objects(chain, edge, std::span(&glue, 1), budget);
        for (int& v : vertices) v = p.left.on_objects[static_cast<std::size_t>(v)];
        vertices.push_back(p.right.on_objects[1]);
        chain = std::move(p.category);
    }
    std::vector<int> new_of_old(static_cast<std::size_t>(chain.object_count()));
    std::vector<std::string> names;
    for (int k = 0; k <= n; ++k) {
        new_of_old[static_cast<std::size_t>(vertices[static_cast<std::size_t>(k)])] = k;
        names.push_back(std::to_string(k));
    }
    return reorder_objects(chain, new_of_old, names);
}

RelCategory::RelCategory(FinCategory base, std::vector<int> weq) : base_(std::move(base)), weq_(std::move(weq)) {
    member_.assign(static_cast<std::size_t>(base_.arrow_count()), false);
    for (int a : weq_) {
        if (a < 0 || a >= base_.arrow_count()) fail(ErrorCode::InvalidInput, "weak equivalence refers to an unknown arrow");
        member_[static_cast<std::size_t>(a)] = true;
    }
    std::sort(weq_.begin(), weq_.end());
    weq_.erase(std::unique(weq_.begin(), weq_.end()), weq_.end());
    for (int x = 0; x < base_.object_count(); ++x)
        if (!member_[static_cast<std::size_t>(base_.identity(x))])
            fail(ErrorCode::InvalidInput, "weak equivalences must contain the identity of '" + base_.object(x) + "'");
    for (int g : weq_)
        for (int f : weq_) {
            const int gf = base_.compose(g, f);
            if (gf >= 0 && !member_[static_cast<std::size_t>(gf)])
                fail(ErrorCode::InvalidInput, "weak equivalences are not closed under composition: '" +
                                                  base_.arrow(g).id + "' o '" + base_.arrow(f).id + "'");
        }
}

RelCategory RelCategory::minimal(FinCategory base) {
    std::vector<int> weq;
    for (int x = 0; x < base.object_count(); ++x) weq.push_back(base.identity(x));
    return RelCategory(std::move(base), std::move(weq));
}

RelCategory RelCategory::isomorphisms(FinCategory base) {
    std::vector<int> weq;
    for (int a = 0; a < base.arrow_count(); ++a)
        if (base.is_isomorphism(a)) weq.push_back(a);
    return RelCategory(std::move(base), std::move(weq));
}

RelCategory RelCategory::maximal(FinCategory base) {
    std::vector<int> weq(static_cast<std::size_t>(base.arrow_count()));
    std::iota(weq.begin(), weq.end(), 0);
    return RelCategory(std::move(base), std::move(weq));
}

}  // namespace segalkit
