#include <algorithm>
#include <set>

#include "segalkit/fincat.hpp"
#include "segalkit/sset.hpp"

namespace segalkit {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

// Strict-Segal simplicial subsets of nerve(c). Such a subset is determined by
// its vertices and edges (higher cells are forced by the spine bijection), so
// we range over vertex and edge subsets, take every nerve cell whose edges all
// survive, and keep the candidates that are closed and strict Segal.
std::vector<FinSSet> segal_subobjects(const FinCategory& c, int truncation, Budget& budget) {
    const FinSSet x = nerve(c, truncation);
    std::vector<int> free_edges;
    for (int e = 0; e < x.count(1); ++e)
        if (!x.is_degenerate(1, e)) free_edges.push_back(e);
    if (x.count(0) + free_edges.size() >= 24) fail(ErrorCode::BudgetExceeded, "too many cells for subobject search");
    std::vector<FinSSet> out;
    for (std::uint64_t vmask = 0; vmask < (1ULL << x.count(0)); ++vmask)
        for (std::uint64_t emask = 0; emask < (1ULL << free_edges.size()); ++emask) {
            budget.spend();
            std::vector<std::vector<bool>> keep(sz(truncation) + 1);
            for (int n = 0; n <= truncation; ++n) keep[sz(n)].assign(sz(x.count(n)), false);
            for (int v = 0; v < x.count(0); ++v) keep[0][sz(v)] = (vmask >> v) & 1;
            for (std::size_t k = 0; k < free_edges.size(); ++k) keep[1][sz(free_edges[k])] = (emask >> k) & 1;
            bool closed = true;
            for (int e = 0; e < x.count(1); ++e) {
                if (x.is_degenerate(1, e)) keep[1][sz(e)] = keep[0][sz(x.face(1, 0, e))];
                if (keep[1][sz(e)] && !(keep[0][sz(x.face(1, 0, e))] && keep[0][sz(x.face(1, 1, e))])) closed = false;
            }
            if (!closed) continue;
            for (int n = 2; n <= truncation; ++n)
                for (int cell = 0; cell < x.count(n); ++cell) {
                    bool all = true;
                    for (int a = 0; a < n && all; ++a)
                        for (int b = a + 1; b <= n && all; ++b) {
                            std::vector<int> images{a, b};
                            all = keep[1][sz(act(x, SimplexMap(n, images), cell))];
                        }
                    keep[sz(n)][sz(cell)] = all;
                }
            Inclusion sub;
            try {
                sub = sub_sset(x, keep);
            } catch (const Error&) {
                continue;
            }
            if (is_strict_segal(sub.object).segal) out.push_back(sub.object);
        }
    return out;
}

}  // namespace

IntervalProperties interval_properties(const FinCategory& c, std::uint64_t budget) {
    IntervalProperties p;
    const auto classes = object_iso_classes(c);
    const std::set<int> distinct(classes.begin(), classes.end());
    p.two_rigid_classes = distinct.size() == 2 && is_rigid(c);
    p.not_discrete_pair = !are_equivalent(c, discrete_category(2), budget).equivalent;

    const int truncation = 2;
    Budget steps(budget);
    const std::vector<std::pair<std::string, FinSSet>> references{
        {"empty", FinSSet(truncation)},
        {"point", point_sset(truncation)},
        {"two points", nerve(discrete_category(2), truncation)},
        {"whole", nerve(c, truncation)},
    };
    std::vector<FinSSet> representatives;
    for (const auto& sub : segal_subobjects(c, truncation, steps)) {
        bool known = false;
        for (const auto& r : representatives)
            if (isomorphic(r, sub)) known = true;
        if (known) continue;
        representatives.push_back(sub);
        std::string name;
        for (const auto& [ref_name, ref] : references)
            if (name.empty() && isomorphic(ref, sub)) name = ref_name;
        if (name.empty())
            name = "other(" + std::to_string(sub.count(0)) + " vertices, " + std::to_string(sub.count(1)) + " edges)";
        p.subobject_classes.push_back(name);
    }
    std::set<std::string> names(p.subobject_classes.begin(), p.subobject_classes.end());
    p.four_subobjects = p.subobject_classes.size() == 4 &&
                        names == std::set<std::string>{"empty", "point", "two points", "whole"};
    return p;
}

std::vector<IntervalMatch> characterize_interval(std::span<const FinCategory> corpus, std::uint64_t budget) {
    std::vector<IntervalMatch> out;
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const auto p = interval_properties(corpus[k], budget);
        if (p.two_rigid_classes && p.not_discrete_pair && p.four_subobjects) out.push_back({k, p.subobject_classes});
    }
    return out;
}

}  // namespace segalkit
