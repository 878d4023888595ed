#include "segalkit/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace segalkit {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

std::string object_name(int x) { return std::string(1, static_cast<char>('a' + x)); }

struct Encoded {
    std::vector<int> code;
    std::vector<int> object_new;  // old object -> new index
    std::vector<int> arrow_new;   // old arrow -> new index
};

// Lexicographically least encoding over object permutations and orderings of
// the non-identity arrows inside each hom-set.
Encoded canonical_encoding(const FinCategory& c) {
    const int k = c.object_count();
    std::vector<int> order(sz(k));  // order[new] = old
    std::iota(order.begin(), order.end(), 0);
    std::optional<Encoded> best;
    std::uint64_t visited = 0;
    do {
        std::vector<std::vector<int>> homs;  // non-identity arrows per hom in new order
        for (int x = 0; x < k; ++x)
            for (int y = 0; y < k; ++y) {
                std::vector<int> h;
                for (int a : c.hom(order[sz(x)], order[sz(y)]))
                    if (!c.is_identity(a)) h.push_back(a);
                std::sort(h.begin(), h.end());
                homs.push_back(std::move(h));
            }
        std::function<void(std::size_t)> permute = [&](std::size_t slot) {
            if (slot < homs.size()) {
                auto& h = homs[slot];
                std::sort(h.begin(), h.end());
                do {
                    permute(slot + 1);
                } while (std::next_permutation(h.begin(), h.end()));
                return;
            }
            if (++visited > kDefaultEnumerationBudget) fail(ErrorCode::BudgetExceeded, "canonical form search too large");
            Encoded e;
            e.object_new.assign(sz(k), 0);
            for (int x = 0; x < k; ++x) e.object_new[sz(order[sz(x)])] = x;
            e.arrow_new.assign(sz(c.arrow_count()), -1);
            std::vector<int> arrows_in_order;
            e.code.push_back(k);
            for (int x = 0; x < k; ++x)
                for (int y = 0; y < k; ++y) {
                    const auto& h = homs[sz(x * k + y)];
                    e.code.push_back(static_cast<int>(h.size()) + (x == y));
                    if (x == y) arrows_in_order.push_back(c.identity(order[sz(x)]));
                    arrows_in_order.insert(arrows_in_order.end(), h.begin(), h.end());
                }
            for (std::size_t n = 0; n < arrows_in_order.size(); ++n) e.arrow_new[sz(arrows_in_order[n])] = static_cast<int>(n);
            for (int g : arrows_in_order)
                for (int f : arrows_in_order)
                    if (!c.is_identity(g) && !c.is_identity(f) && c.target(f) == c.source(g))
                        e.code.push_back(e.arrow_new[sz(c.compose(g, f))]);
            if (!best || e.code < best->code) best = std::move(e);
        };
        permute(0);
    } while (std::next_permutation(order.begin(), order.end()));
    return *best;
}

FinCategory from_encoding(const FinCategory& c, const Encoded& e) {
    std::vector<std::string> objects;
    for (int x = 0; x < c.object_count(); ++x) objects.push_back(object_name(x));
    std::vector<Arrow> arrows(sz(c.arrow_count()));
    std::vector<int> identities(sz(c.object_count()));
    int counter = 0;
    std::vector<int> old_of_new(sz(c.arrow_count()));
    for (int a = 0; a < c.arrow_count(); ++a) old_of_new[sz(e.arrow_new[sz(a)])] = a;
    for (int n = 0; n < c.arrow_count(); ++n) {
        const int a = old_of_new[sz(n)];
        const int s = e.object_new[sz(c.source(a))], t = e.object_new[sz(c.target(a))];
        if (c.is_identity(a)) {
            arrows[sz(n)] = {"1" + object_name(s), s, t};
            identities[sz(s)] = n;
        } else {
            arrows[sz(n)] = {"f" + std::to_string(++counter), s, t};
        }
    }
    std::vector<Composite> composites;
    for (const auto& [g, f, r] : c.composites())
        composites.push_back({e.arrow_new[sz(g)], e.arrow_new[sz(f)], e.arrow_new[sz(r)]});
    std::sort(composites.begin(), composites.end(), [](const Composite& x, const Composite& y) {
        return std::tie(x.second, x.first) < std::tie(y.second, y.first);
    });
    return FinCategory(std::move(objects), std::move(arrows), std::move(identities), composites);
}

// Backtracking over composition tables for a fixed hom-count matrix.
class TableSearch {
public:
    TableSearch(int k, const std::vector<int>& counts, Budget& budget,
                const std::function<void(const FinCategory&)>& emit)
        : k_(k), budget_(budget), emit_(emit) {
        for (int x = 0; x < k; ++x)
            for (int y = 0; y < k; ++y)
                for (int m = 0; m < counts[sz(x * k + y)]; ++m) {
                    if (x == y && m == 0) identity_.push_back(static_cast<int>(src_.size()));
                    src_.push_back(x);
                    tgt_.push_back(y);
                }
        std::vector<int> ids(sz(k));
        for (int x = 0; x < k; ++x) ids[sz(x)] = identity_[sz(x)];
        const int n = static_cast<int>(src_.size());
        table_.assign(sz(n * n), -1);
        homs_.assign(sz(k * k), {});
        for (int a = 0; a < n; ++a) homs_[sz(src_[sz(a)] * k + tgt_[sz(a)])].push_back(a);
        for (int g = 0; g < n; ++g)
            for (int f = 0; f < n; ++f) {
                if (tgt_[sz(f)] != src_[sz(g)]) continue;
                if (is_id(g)) at(g, f) = f;
                else if (is_id(f)) at(g, f) = g;
                else open_.push_back({g, f});
            }
    }

    void run() { step(0); }

private:
    bool is_id(int a) const { return identity_[sz(src_[sz(a)])] == a; }
    int& at(int g, int f) { return table_[sz(g) * src_.size() + sz(f)]; }
    int get(int g, int f) const { return g < 0 || f < 0 ? -1 : table_[sz(g) * src_.size() + sz(f)]; }

    bool associative() const {
        const int n = static_cast<int>(src_.size());
        for (int h = 0; h < n; ++h)
            for (int g = 0; g < n; ++g) {
                if (tgt_[sz(g)] != src_[sz(h)]) continue;
                for (int f = 0; f < n; ++f) {
                    if (tgt_[sz(f)] != src_[sz(g)]) continue;
                    const int lhs = get(get(h, g), f), rhs = get(h, get(g, f));
                    if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
                }
            }
        return true;
    }

    void step(std::size_t pos) {
        if (pos == open_.size()) {
            std::vector<std::string> objects;
            for (int x = 0; x < k_; ++x) objects.push_back(object_name(x));
            std::vector<Arrow> arrows;
            for (std::size_t a = 0; a < src_.size(); ++a) arrows.push_back({"u" + std::to_string(a), src_[a], tgt_[a]});
            std::vector<Composite> composites;
            for (const auto& [g, f] : open_) composites.push_back({g, f, get(g, f)});
            emit_(FinCategory(std::move(objects), std::move(arrows), identity_, composites));
            return;
        }
        const auto [g, f] = open_[pos];
        for (int r : homs_[sz(src_[sz(f)] * k_ + tgt_[sz(g)])]) {
            budget_.spend();
            at(g, f) = r;
            if (associative()) step(pos + 1);
        }
        at(g, f) = -1;
    }

    int k_;
    Budget& budget_;
    const std::function<void(const FinCategory&)>& emit_;
    std::vector<int> src_, tgt_, identity_;
    std::vector<int> table_;
    std::vector<std::vector<int>> homs_;
    std::vector<std::pair<int, int>> open_;
};

}  // namespace

FinCategory canonical_form(const FinCategory& c) { return from_encoding(c, canonical_encoding(c)); }

std::vector<FinCategory> small_categories(int max_objects, int max_arrows, std::uint64_t budget) {
    if (max_objects < 0 || max_arrows < 0) fail(ErrorCode::InvalidInput, "bounds must be >= 0");
    Budget steps(budget);
    std::map<std::vector<int>, FinCategory> found;
    const std::function<void(const FinCategory&)> emit = [&](const FinCategory& c) {
        auto e = canonical_encoding(c);
        if (!found.count(e.code)) found.emplace(e.code, from_encoding(c, e));
    };
    for (int k = 0; k <= max_objects && k <= max_arrows; ++k) {
        std::vector<int> counts(sz(k * k), 0);
        for (int x = 0; x < k; ++x) counts[sz(x * k + x)] = 1;
        // odometer over hom counts with total <= max_arrows
        std::function<void(std::size_t, int)> choose = [&](std::size_t slot, int total) {
            if (slot == counts.size()) {
                TableSearch(k, counts, steps, emit).run();
                return;
            }
            const int x = static_cast<int>(slot) / k, y = static_cast<int>(slot) % k;
            const int base = x == y ? 1 : 0;
            for (int m = base; total + m - base <= max_arrows; ++m) {
                counts[slot] = m;
                choose(slot + 1, total + m - base);
            }
            counts[slot] = base;
        };
        choose(0, k);
    }
    std::vector<FinCategory> out;
    for (auto& [code, c] : found) out.push_back(c);
    std::stable_sort(out.begin(), out.end(), [](const FinCategory& a, const FinCategory& b) {
        return std::pair(a.object_count(), a.arrow_count()) < std::pair(b.object_count(), b.arrow_count());
    });
    return out;
}

std::vector<int> composition_closure(const FinCategory& c, std::vector<int> arrows) {
    std::set<int> closed(arrows.begin(), arrows.end());
    for (int x = 0; x < c.object_count(); ++x) closed.insert(c.identity(x));
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<int> snapshot(closed.begin(), closed.end());
        for (int g : snapshot)
            for (int f : snapshot) {
                const int gf = c.compose(g, f);
                if (gf >= 0 && closed.insert(gf).second) grew = true;
            }
    }
    return {closed.begin(), closed.end()};
}

namespace {

FinCategory random_poset(std::mt19937_64& rng, int k) {
    std::vector<std::vector<bool>> le(sz(k), std::vector<bool>(sz(k), false));
    for (int i = 0; i < k; ++i) le[sz(i)][sz(i)] = true;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) le[sz(i)][sz(j)] = rng() % 2 == 0;
    for (int m = 0; m < k; ++m)
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (le[sz(i)][sz(m)] && le[sz(m)][sz(j)]) le[sz(i)][sz(j)] = true;
    std::vector<std::string> objects;
    for (int i = 0; i < k; ++i) objects.push_back(object_name(i));
    std::vector<Arrow> arrows;
    std::map<std::pair<int, int>, int> index;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (le[sz(i)][sz(j)]) {
                index[{i, j}] = static_cast<int>(arrows.size());
                arrows.push_back({object_name(i) + object_name(j), i, j});
            }
    std::vector<int> identities;
    for (int i = 0; i < k; ++i) identities.push_back(index[{i, i}]);
    std::vector<Composite> composites;
    for (const auto& [ij, f] : index)
        for (const auto& [jl, g] : index)
            if (ij.second == jl.first) composites.push_back({g, f, index.at({ij.first, jl.second})});
    return FinCategory(std::move(objects), std::move(arrows), std::move(identities), composites);
}

FinCategory building_block(std::mt19937_64& rng) {
    switch (rng() % 5) {
    case 0: return point_category();
    case 1: return linear(1);
    case 2: return bar_interval();
    case 3: {
        std::vector<Arrow> arrows{{"1", 0, 0}, {"e", 0, 0}};
        const std::vector<Composite> c{{1, 1, 1}};
        return FinCategory({"*"}, arrows, {0}, c);
    }
    default: return cyclic_group(2);
    }
}

}  // namespace

FinCategory random_category(std::mt19937_64& rng, int max_objects) {
    if (max_objects < 1) fail(ErrorCode::InvalidInput, "random category needs at least one object");
    if (rng() % 2 == 0) return canonical_form(random_poset(rng, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_objects))));
    FinCategory a = building_block(rng);
    FinCategory b = building_block(rng);
    if (a.object_count() + b.object_count() - 1 > max_objects) return canonical_form(a);
    const std::pair<int, int> glue{static_cast<int>(rng() % static_cast<std::uint64_t>(a.object_count())),
                                   static_cast<int>(rng() % static_cast<std::uint64_t>(b.object_count()))};
    try {
        return canonical_form(pushout_over_objects(a, b, std::span(&glue, 1), 500).category);
    } catch (const Error&) {
        return canonical_form(a);  // free products of non-trivial monoids are infinite
    }
}

RelCategory random_relative_category(std::mt19937_64& rng, int max_objects) {
    FinCategory base = random_category(rng, max_objects);
    std::vector<int> chosen;
    for (int a = 0; a < base.arrow_count(); ++a)
        if (rng() % 3 == 0) chosen.push_back(a);
    auto weq = composition_closure(base, std::move(chosen));
    return RelCategory(std::move(base), std::move(weq));
}

}  // namespace segalkit
