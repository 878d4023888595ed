#include "segalkit/harness.hpp"

#include <chrono>
#include <map>
#include <set>

#include "segalkit/corpus.hpp"

namespace segalkit {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

Report make(std::string name) {
    Report r;
    r.check = std::move(name);
    return r;
}

// Cell counts per degree, a compact witness for simplicial sets.
Json shape(const FinSSet& x) {
    Json j = Json::array();
    for (int n = 0; n <= x.truncation(); ++n) j.push_back(x.count(n));
    return j;
}

// Whether `f` induces a bijection between class sets.
bool class_bijection(const std::vector<int>& from, const std::vector<int>& to, const std::vector<int>& on) {
    std::map<int, int> image;
    std::set<int> hit;
    for (std::size_t k = 0; k < from.size(); ++k) {
        const int t = to[sz(on[k])];
        auto [it, fresh] = image.emplace(from[k], t);
        if (!fresh && it->second != t) return false;
        hit.insert(t);
    }
    const std::set<int> all(to.begin(), to.end());
    return hit.size() == image.size() && hit == all;
}

Report merge(std::string name, const std::vector<Report>& parts) {
    Report out = make(std::move(name));
    int pass = 0, failed = 0, unverifiable = 0;
    std::set<std::string> notes;
    for (const auto& p : parts) {
        if (p.verdict == Verdict::Pass) ++pass;
        if (p.verdict == Verdict::Unverifiable) ++unverifiable;
        if (p.verdict == Verdict::Fail) {
            ++failed;
            if (out.witnesses.size() < 5)
                for (const auto& w : p.witnesses) out.witnesses.push_back(w);
        }
        for (const auto& n : p.hypothesis_notes)
            if (notes.insert(n).second) out.hypothesis_notes.push_back(n);
    }
    out.verdict = failed ? Verdict::Fail : pass ? Verdict::Pass : Verdict::Unverifiable;
    out.metrics["instances"] = parts.size();
    out.metrics["passed"] = pass;
    out.metrics["failed"] = failed;
    out.metrics["unverifiable"] = unverifiable;
    return out;
}

}  // namespace

const char* to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Unverifiable: return "unverifiable";
    }
    return "unknown";
}

void Report::fail(Json witness) {
    verdict = Verdict::Fail;
    witnesses.push_back(std::move(witness));
}

Json Report::to_json() const {
    Json j;
    j["$schema"] = schema::kReport;
    j["check"] = check;
    j["verdict"] = to_string(verdict);
    j["hypothesisNotes"] = hypothesis_notes;
    j["witnesses"] = witnesses;
    j["metrics"] = metrics;
    return j;
}

Report check_interval() {
    Report r = make("interval");
    const int T = 3;
    // (i) C(0) is terminal
    const auto terminal = standard(0, T);
    int probes = 0;
    for (const auto& k : {FinSSet(T), point_sset(T), standard(1, T), standard(2, T), nerve(interval_category(), T),
                          nerve(bar_interval(), T)}) {
        const auto maps = mapset(k, terminal).size();
        ++probes;
        if (maps != 1) r.fail({{"condition", "i"}, {"source", shape(k)}, {"maps", maps}});
    }
    r.metrics["terminalProbes"] = probes;
    // (ii) the co-category structure: [1] glued n times is [n]
    for (int n = 1; n <= 5; ++n) {
        const auto glued = spine_category(n);
        if (!find_isomorphism(glued, linear(n)))
            r.fail({{"condition", "ii"}, {"n", n}, {"pushout", to_json(glued, false)}});
    }
    r.metrics["spineDegrees"] = 5;
    // (iii) the realization of N(I-bar) is contractible
    const auto realized = realize(constant_levels(nerve(bar_interval(), T), T));
    const auto fc = fundamental_category(realized);
    const auto eq = are_equivalent(fc, point_category());
    r.metrics["realizedBarCells"] = shape(realized);
    if (!eq.equivalent) r.fail({{"condition", "iii"}, {"fundamentalCategory", to_json(fc, false)}});
    // before localization the strict co-Segal map h(1) u_h(0) h(1) -> h(2) is not a levelwise bijection
    const auto s2 = standard(2, T);
    std::vector<std::vector<bool>> keep(sz(T) + 1);
    for (int n = 0; n <= T; ++n)
        for (int c = 0; c < s2.count(n); ++c) {
            const int lo = act(s2, SimplexMap::vertex(n, 0), c), hi = act(s2, SimplexMap::vertex(n, n), c);
            keep[sz(n)].push_back(hi - lo <= 1);
        }
    const auto glued = discrete_levels(sub_sset(s2, keep).object, T);
    const auto h2 = h_space(2, T, T);
    const bool strict = glued.level(1).count(0) == h2.level(1).count(0);
    r.metrics["strictSpaceSegal"] = strict;
    r.metrics["gluedLevel1"] = glued.level(1).count(0);
    r.metrics["h2Level1"] = h2.level(1).count(0);
    r.hypothesis_notes.push_back("C(n) = h(n) is not an interval among simplicial spaces before localization: the glued h(1) u_h(0) h(1) has " +
                                 std::to_string(glued.level(1).count(0)) + " level-1 points against " +
                                 std::to_string(h2.level(1).count(0)) + " for h(2)");
    return r;
}

Report check_A3(const std::vector<FinSSet>& parts, const SSetMap& z) {
    if (parts.empty()) fail(ErrorCode::InvalidInput, "A3 needs at least one summand");
    FinSSet total = parts[0];
    std::vector<SSetMap> legs{identity_map(parts[0])};
    for (std::size_t k = 1; k < parts.size(); ++k) {
        const auto cp = coproduct(total, parts[k]);
        for (auto& leg : legs) leg = compose(leg, cp.left);
        legs.push_back(cp.right);
        total = cp.object;
    }
    return check_A3(parts, legs, z);
}

Report check_A3(const std::vector<FinSSet>& parts, const std::vector<SSetMap>& legs, const SSetMap& z) {
    Report r = make("A3");
    bool injective = true;
    for (const auto& leg : legs) injective = injective && leg.is_injective();
    r.hypothesis_notes.push_back(injective ? "legs are degreewise injective, so strict pullbacks compute the homotopy pullbacks"
                                           : "some leg is not injective; strict pullbacks only");
    for (std::size_t i = 0; i < legs.size(); ++i) {
        const auto self = pullback(legs[i], legs[i]).object;
        if (!isomorphic(self, parts[i]))
            r.fail({{"clause", "X_i x_X X_i = X_i"}, {"summand", i}, {"pullback", shape(self)}, {"summand_cells", shape(parts[i])}});
        for (std::size_t j = i + 1; j < legs.size(); ++j) {
            const auto cross = pullback(legs[i], legs[j]).object;
            if (cross.total_cells() != 0) {
                Json w = {{"clause", "X_i x_X X_j empty"}, {"summands", {i, j}}, {"pullback", shape(cross)}};
                for (int n = 0; n <= cross.truncation(); ++n)
                    if (cross.count(n)) {
                        w["cell"] = cross.label(n, 0);
                        break;
                    }
                r.fail(std::move(w));
            }
        }
    }
    FinSSet sum(z.source().truncation());
    for (const auto& leg : legs) sum = coproduct(sum, pullback(z, leg).object).object;
    if (!isomorphic(sum, z.source()))
        r.fail({{"clause", "sum of Z x_X X_i = Z"}, {"sum", shape(sum)}, {"z", shape(z.source())}});
    r.metrics["summands"] = legs.size();
    return r;
}

Report check_indecomposable() {
    Report r = make("indecomposable");
    const int T = 3;
    const auto s1 = standard(1, T);
    const std::vector<FinSSet> blocks{point_sset(T), s1, nerve(interval_category(), T), nerve(bar_interval(), T)};
    int maps = 0;
    for (const auto& a : blocks)
        for (const auto& b : blocks) {
            const auto cp = coproduct(a, b);
            for (const auto& f : mapset(s1, cp.object)) {
                ++maps;
                int left = 0, right = 0;
                for (int n = 0; n <= T; ++n)
                    for (int c = 0; c < s1.count(n); ++c) (f(n, c) < a.count(n) ? left : right)++;
                if (left && right) r.fail({{"clause", "edge lands in one summand"}, {"map", assignment_json(f)}});
            }
        }
    const auto ends = mapset(standard(0, T), s1).size();
    const auto endos = mapset(s1, s1).size();
    const int comps = pi0_count(s1);
    if (ends != 2) r.fail({{"clause", "two endpoints"}, {"count", ends}});
    if (endos != 3) r.fail({{"clause", "three endomorphisms"}, {"count", endos}});
    if (comps != 1) r.fail({{"clause", "connected"}, {"components", comps}});
    r.metrics["edgeMaps"] = maps;
    r.metrics["endpoints"] = ends;
    r.metrics["endomorphisms"] = endos;
    r.metrics["components"] = comps;
    return r;
}

Report check_A5(const FinCategory& a, int truncation, int outer_truncation, std::uint64_t budget) {
    Report r = make("A5");
    const int T = truncation, N = outer_truncation;
    const auto full = nerve(a, std::max(T, N));
    const auto x = discrete_levels(full, T);
    const auto real = realize_cells(x);
    const auto inc = level0_to_realization(x);
    const auto cn = c_nerve(inc, N, budget);
    r.hypothesis_notes.push_back("levels of a discrete nerve are discrete, hence 0-local");
    r.metrics["truncation"] = T;
    r.metrics["outerTruncation"] = N;
    std::vector<SSetMap> comparison;
    for (int n = 0; n <= N; ++n) {
        const FinSSet& src = x.level(n);
        std::vector<std::vector<int>> cells(sz(T) + 1);
        for (int k = 0; k <= T; ++k)
            for (int s = 0; s < src.count(k); ++s) {
                std::vector<int> tuple;
                for (int v = 0; v <= n; ++v) tuple.push_back(act(full, SimplexMap::vertex(n, v), s));
                // the map standard(n) x standard(k) -> |X| through the first projection
                std::vector<std::vector<int>> table(sz(T) + 1);
                for (int d = 0; d <= T; ++d) {
                    const int wide = static_cast<int>(count_maps(d, k));
                    const int tall = static_cast<int>(count_maps(d, n));
                    for (int alpha = 0; alpha < tall; ++alpha)
                        for (int b = 0; b < wide; ++b) table[sz(d)].push_back(real.cell(d, n, alpha, s));
                }
                cells[sz(k)].push_back(cn.cell(n, k, tuple, cn.hom_cell(n, k, table)));
            }
        comparison.emplace_back(src, cn.space.level(n), std::move(cells));
    }
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i <= n; ++i)
            if (compose(x.face(n, i), comparison[sz(n - 1)]) != compose(comparison[sz(n)], cn.space.face(n, i)))
                r.fail({{"clause", "comparison commutes with outer faces"}, {"level", n}, {"face", i}});
    int isos = 0;
    for (int n = 0; n <= N; ++n) {
        const auto& f = comparison[sz(n)];
        isos += f.is_isomorphism();
        if (!is_equivalence(f, CheckMode::Pi0))
            r.fail({{"clause", "pi0 bijection"}, {"level", n}, {"source", shape(f.source())}, {"target", shape(f.target())}});
        else if (T >= 2 && !is_equivalence(f, CheckMode::NerveEquivalence))
            r.fail({{"clause", "equivalence of categories"}, {"level", n}});
    }
    r.metrics["levelIsomorphisms"] = isos;
    return r;
}

Report check_A6(const FinCategory& a, const FinCategory& b, const Functor& f) {
    Report r = make("A6");
    const int T = 2;
    const bool equivalence = is_equivalence(nerve_of_functor(a, b, f, T), CheckMode::NerveEquivalence);
    const bool objects = class_bijection(object_iso_classes(a), object_iso_classes(b), f.on_objects);
    const bool arrows = class_bijection(arrow_iso_classes(a), arrow_iso_classes(b), f.on_arrows);
    r.metrics["equivalence"] = equivalence;
    r.metrics["objectClassesBijective"] = objects;
    r.metrics["arrowClassesBijective"] = arrows;
    r.metrics["converseHolds"] = !(objects && arrows) || equivalence;
    r.hypothesis_notes.push_back("only equivalence => bijections on [*,-] and [C(1),-] is asserted; the converse is recorded");
    if (equivalence && !(objects && arrows))
        r.fail({{"source", to_json(a, false)}, {"target", to_json(b, false)}, {"functor", to_json(f, a, b, false)}});
    return r;
}

Report check_A6_corpus(const std::vector<FinCategory>& corpus, std::uint64_t budget) {
    Report r = make("A6");
    int instances = 0, equivalences = 0, bijective = 0, converse_failures = 0;
    for (const auto& a : corpus)
        for (const auto& b : corpus)
            for_each_functor(
                a, b,
                [&](const Functor& f) {
                    const auto one = check_A6(a, b, f);
                    ++instances;
                    equivalences += one.metrics["equivalence"].get<bool>();
                    const bool both = one.metrics["objectClassesBijective"].get<bool>() && one.metrics["arrowClassesBijective"].get<bool>();
                    bijective += both;
                    converse_failures += !one.metrics["converseHolds"].get<bool>();
                    if (!one.passed() && r.witnesses.size() < 5) r.fail(one.witnesses[0]);
                    return true;
                },
                budget);
    r.hypothesis_notes.push_back("only equivalence => bijections on [*,-] and [C(1),-] is asserted; the converse is recorded");
    r.metrics["corpus"] = corpus.size();
    r.metrics["functors"] = instances;
    r.metrics["equivalences"] = equivalences;
    r.metrics["bijectiveOnClasses"] = bijective;
    r.metrics["converseFailures"] = converse_failures;
    return r;
}

Report check_A7(int n, int m, std::uint64_t budget) {
    Report r = make("A7");
    if (n < 0 || m < 0 || n > 3 || m > 3) fail(ErrorCode::IndexOutOfRange, "A7 is checked for n, m <= 3");
    const int N = std::max(n, m);
    const auto simplex = enumerate_maps(n, m, budget).size();
    const auto spaces = space_mapset(h_space(n, N, 0), h_space(m, N, 0), budget).size();
    const auto functors = enumerate_functors(linear(n), linear(m), budget);
    std::vector<Functor> classes;
    for (const auto& f : functors) {
        bool known = false;
        for (const auto& g : classes) known = known || naturally_isomorphic(linear(n), linear(m), f, g);
        if (!known) classes.push_back(f);
    }
    r.metrics["n"] = n;
    r.metrics["m"] = m;
    r.metrics["simplexMaps"] = simplex;
    r.metrics["spaceMaps"] = spaces;
    r.metrics["functors"] = functors.size();
    r.metrics["isoClasses"] = classes.size();
    if (spaces != simplex || functors.size() != simplex || classes.size() != simplex)
        r.fail({{"counts", {simplex, spaces, functors.size(), classes.size()}}});
    return r;
}

Report check_hmono(const SimplicialSpace& x) {
    Report r = make("hmono");
    const auto verdict = is_complete(x);
    for (const auto& n : verdict.notes) r.hypothesis_notes.push_back(n);
    if (!verdict.complete) {
        r.verdict = Verdict::Unverifiable;
        r.hypothesis_notes.push_back("hypothesis not met: the space is not complete (" + verdict.detail + ")");
        return r;
    }
    const auto c0 = pi0(x.level(0));
    const auto c1 = pi0(x.level(1));
    const auto h = hoequiv(x);
    std::map<int, int> image;
    std::set<int> hit;
    for (int v = 0; v < x.level(0).count(0); ++v) {
        const int t = c1[sz(x.degen(0, 0)(0, v))];
        auto [it, fresh] = image.emplace(c0[sz(v)], t);
        if (!fresh && it->second != t) r.fail({{"clause", "well defined"}, {"vertex", x.level(0).label(0, v)}});
        hit.insert(t);
    }
    if (hit.size() != image.size()) r.fail({{"clause", "pi0 injective"}, {"components", image.size()}, {"image", hit.size()}});
    if (hit != std::set<int>(h.components.begin(), h.components.end()))
        r.fail({{"clause", "image is hoequiv"}, {"image", std::vector<int>(hit.begin(), hit.end())}, {"hoequiv", h.components}});
    r.metrics["level0Components"] = image.size();
    r.metrics["level1Components"] = h.level1_components;
    r.metrics["hoequivComponents"] = h.components.size();
    return r;
}

Report check_initial() {
    Report r = make("initial");
    const int T = 3;
    const FinSSet empty(T);
    const auto p = point_sset(T);
    const auto to_empty = mapset(p, empty).size();
    const auto edge_to_empty = mapset(standard(1, T), empty).size();
    const auto from_empty = mapset(empty, p).size();
    const bool iso = isomorphic(p, empty);
    r.metrics["pointToEmpty"] = to_empty;
    r.metrics["edgeToEmpty"] = edge_to_empty;
    r.metrics["emptyToPoint"] = from_empty;
    r.metrics["pointIsoEmpty"] = iso;
    if (to_empty) r.fail({{"clause", "Map(*, empty) is empty"}, {"count", to_empty}});
    if (edge_to_empty) r.fail({{"clause", "Map(C(1), empty) is empty"}, {"count", edge_to_empty}});
    if (from_empty != 1) r.fail({{"clause", "empty is initial"}, {"count", from_empty}});
    if (iso) r.fail({{"clause", "* and empty are not isomorphic"}});
    return r;
}

Report interval_uniqueness_search(int max_objects, int max_arrows, std::uint64_t budget) {
    Report r = make("interval-uniqueness");
    const auto all = small_categories(max_objects, max_arrows, budget);
    std::vector<FinCategory> rigid;
    for (const auto& c : all)
        if (is_rigid(c)) rigid.push_back(c);
    const auto matches = characterize_interval(rigid, budget);
    std::vector<std::size_t> classes;  // one corpus index per equivalence class
    for (const auto& m : matches) {
        bool known = false;
        for (auto k : classes) known = known || are_equivalent(rigid[k], rigid[m.index], budget).equivalent;
        if (!known) classes.push_back(m.index);
    }
    r.metrics["maxObjects"] = max_objects;
    r.metrics["maxArrows"] = max_arrows;
    r.metrics["corpus"] = all.size();
    r.metrics["rigid"] = rigid.size();
    r.metrics["matches"] = matches.size();
    r.metrics["classes"] = classes.size();
    const bool unique_interval = classes.size() == 1 && find_isomorphism(rigid[classes[0]], interval_category()).has_value();
    if (!unique_interval) {
        Json w = {{"clause", "exactly one class, isomorphic to I"}, {"classes", Json::array()}};
        for (auto k : classes) w["classes"].push_back(to_json(rigid[k], false));
        r.fail(std::move(w));
    } else {
        r.witnesses.push_back({{"match", to_json(rigid[classes[0]], false)}, {"subobjects", matches[0].subobject_classes}});
    }
    return r;
}

Report check_nerve_segal(const std::vector<FinCategory>& corpus) {
    Report r = make("nerve-segal");
    int mutations = 0;
    for (const auto& c : corpus) {
        const auto n = nerve(c, 3);
        const auto v = is_strict_segal(n);
        if (!v.segal) r.fail({{"clause", "nerve is strict Segal"}, {"category", to_json(c, false)}, {"detail", v.detail}});
        // degenerate 2-cells cannot be deleted on their own
        for (int cell = 0; cell < n.count(2); ++cell) {
            if (n.is_degenerate(2, cell)) continue;
            const auto mutant = remove_cell(n, 2, cell).object;
            const auto w = is_strict_segal(mutant);
            ++mutations;
            if (w.segal || w.tuple.empty())
                r.fail({{"clause", "deleting a 2-cell breaks Segal"}, {"category", to_json(c, false)}, {"cell", n.label(2, cell)}});
        }
    }
    r.metrics["categories"] = corpus.size();
    r.metrics["mutations"] = mutations;
    return r;
}

Report check_completeness_rigidity(const std::vector<FinCategory>& corpus) {
    Report r = make("completeness-rigidity");
    int complete = 0, rigid = 0;
    for (const auto& c : corpus) {
        const bool k = is_complete(discrete_levels(nerve(c, 2), 2)).complete;
        const bool g = is_rigid(c);
        complete += k;
        rigid += g;
        if (k != g) r.fail({{"category", to_json(c, false)}, {"complete", k}, {"rigid", g}});
    }
    r.hypothesis_notes.push_back("a discrete nerve is complete exactly when its only isomorphisms are identities");
    r.metrics["categories"] = corpus.size();
    r.metrics["complete"] = complete;
    r.metrics["rigid"] = rigid;
    return r;
}

Report check_classification(const RelCategory& rel, int outer_truncation, int inner_truncation) {
    Report r = make("classification");
    const auto x = classification_diagram(rel, outer_truncation, inner_truncation);
    const auto v = is_segal(x, CheckMode::Strict);
    if (!v.segal) r.fail({{"clause", "strict Segal"}, {"relative", to_json(rel, false)}, {"detail", v.detail}});
    const auto hc = homotopy_cat(x);
    if (!find_isomorphism(hc.category, rel.base()))
        r.fail({{"clause", "homotopy category is the base"}, {"relative", to_json(rel, false)}, {"homotopy", to_json(hc.category, false)}});
    Json levels = Json::array();
    for (const auto& l : x.levels()) levels.push_back(shape(l));
    r.metrics["levels"] = std::move(levels);
    return r;
}

Report check_unverifiable(const std::string& axiom) {
    Report r = make(axiom);
    r.verdict = Verdict::Unverifiable;
    if (axiom == "A1")
        r.hypothesis_notes.push_back("A1 quantifies over all diagrams of the model category (weak internality); not decidable on finite corpora");
    else if (axiom == "A4")
        r.hypothesis_notes.push_back("A4 needs homotopy pullback stability of realizations; homotopy pullbacks are not computed");
    else
        r.hypothesis_notes.push_back(axiom + " is outside desk scale");
    return r;
}

Corpus default_corpus(std::uint64_t seed) {
    Corpus out;
    out.seed = seed;
    out.categories = small_categories(2, 5);
    for (const auto& extra : {linear(2), linear(3), linear(4), bar_interval()}) {
        const auto canon = canonical_form(extra);
        bool known = false;
        for (const auto& c : out.categories) known = known || c == canon;
        if (!known) out.categories.push_back(canon);
    }
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 3; ++k) out.relative.push_back(random_relative_category(rng, 3));
    return out;
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{"interval", "A1", "A3", "indecomposable", "A4", "A5", "A6",
                                                "A7", "hmono", "initial", "interval-uniqueness"};
    return names;
}

const std::vector<std::string>& extra_check_names() {
    static const std::vector<std::string> names{"nerve-segal", "completeness-rigidity", "classification"};
    return names;
}

std::vector<Report> run_check(const std::string& name, const Corpus& corpus) {
    const auto& cats = corpus.categories;
    if (name == "interval") return {check_interval()};
    if (name == "A1" || name == "A4") return {check_unverifiable(name)};
    if (name == "A3") {
        const int T = 3;
        const auto p = point_sset(T);
        const auto pp = coproduct(p, p);
        const auto ni = nerve(interval_category(), T), nb = nerve(bar_interval(), T);
        const auto ib = coproduct(ni, nb);
        int arrow = 0;
        while (ni.is_degenerate(1, arrow)) ++arrow;
        const auto edge = yoneda_map(ib.object, 1, ib.left(1, arrow));
        return {merge("A3", {check_A3({p, p}, identity_map(pp.object)), check_A3({ni, nb}, edge)})};
    }
    if (name == "indecomposable") return {check_indecomposable()};
    if (name == "A5") {
        std::vector<Report> parts;
        for (const auto& c : cats) parts.push_back(check_A5(c));
        return {merge("A5", parts)};
    }
    if (name == "A6") {
        std::vector<FinCategory> small;
        for (const auto& c : cats)
            if (c.arrow_count() <= 4) small.push_back(c);
        return {check_A6_corpus(small)};
    }
    if (name == "A7") {
        std::vector<Report> parts;
        for (int n = 0; n <= 3; ++n)
            for (int m = 0; m <= 3; ++m) parts.push_back(check_A7(n, m));
        return {merge("A7", parts)};
    }
    if (name == "hmono") {
        std::vector<Report> parts;
        for (const auto& c : cats) parts.push_back(check_hmono(discrete_levels(nerve(c, 2), 2)));
        for (const auto& rel : corpus.relative) parts.push_back(check_hmono(classification_diagram(rel)));
        return {merge("hmono", parts)};
    }
    if (name == "initial") return {check_initial()};
    if (name == "interval-uniqueness") return {interval_uniqueness_search(2, 5)};
    if (name == "nerve-segal") return {check_nerve_segal(cats)};
    if (name == "completeness-rigidity") return {check_completeness_rigidity(cats)};
    if (name == "classification") {
        std::vector<Report> parts;
        for (const auto& rel : corpus.relative) parts.push_back(check_classification(rel));
        return {merge("classification", parts)};
    }
    fail(ErrorCode::InvalidInput, "unknown check '" + name + "'");
}

Json run_all(const Corpus& corpus, bool timings) { return run_checks(corpus, check_names(), timings); }

Json run_checks(const Corpus& corpus, const std::vector<std::string>& names, bool timings) {
    Json out;
    out["$schema"] = schema::kBatch;
    out["seed"] = corpus.seed;
    out["corpus"] = {{"categories", corpus.categories.size()}, {"relative", corpus.relative.size()}};
    Json reports = Json::array();
    Json summary = {{"pass", 0}, {"fail", 0}, {"unverifiable", 0}};
    for (const auto& name : names) {
        const auto start = std::chrono::steady_clock::now();
        for (auto& r : run_check(name, corpus)) {
            if (timings)
                r.metrics["millis"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
            summary[to_string(r.verdict)] = summary[to_string(r.verdict)].get<int>() + 1;
            reports.push_back(r.to_json());
        }
    }
    out["reports"] = std::move(reports);
    out["summary"] = std::move(summary);
    return out;
}

}  // namespace segalkit
