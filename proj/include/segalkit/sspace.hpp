#pragma once

// Simplicial spaces: outer-simplicial diagrams of finite simplicial sets,
// truncated in both directions.

#include <optional>
#include <string>
#include <vector>

#include "segalkit/fincat.hpp"
#include "segalkit/sset.hpp"

namespace segalkit {

class SimplicialSpace {
public:
    SimplicialSpace() = default;
    // faces[n][i] : level n -> level n-1 (faces[0] empty); degens[n][i] :
    // level n -> level n+1 for n < outer truncation. Throws InvalidInput on a
    // violated outer identity and TruncationMismatch on unequal inner
    // truncations.
    SimplicialSpace(std::vector<FinSSet> levels, std::vector<std::vector<SSetMap>> faces,
                    std::vector<std::vector<SSetMap>> degens);

    int outer_truncation() const noexcept { return static_cast<int>(levels_.size()) - 1; }
    int inner_truncation() const { return levels_.at(0).truncation(); }
    const FinSSet& level(int n) const { return levels_.at(static_cast<std::size_t>(n)); }
    const SSetMap& face(int n, int i) const {
        return faces_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i));
    }
    const SSetMap& degen(int n, int i) const {
        return degens_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i));
    }
    const std::vector<FinSSet>& levels() const noexcept { return levels_; }
    const std::vector<std::vector<SSetMap>>& faces() const noexcept { return faces_; }
    const std::vector<std::vector<SSetMap>>& degens() const noexcept { return degens_; }

    friend bool operator==(const SimplicialSpace&, const SimplicialSpace&) = default;

private:
    std::vector<FinSSet> levels_;
    std::vector<std::vector<SSetMap>> faces_;
    std::vector<std::vector<SSetMap>> degens_;
};

// The outer action of theta : [m] -> [n], a map level n -> level m.
SSetMap outer_map(const SimplicialSpace& x, const SimplexMap& theta);

// Level n is the set of degree-n cells of k, as a discrete simplicial set;
// the outer truncation is that of k.
SimplicialSpace discrete_levels(const FinSSet& k, int inner_truncation = kDefaultTruncation);
// Every level is k, every structure map the identity.
SimplicialSpace constant_levels(const FinSSet& k, int outer_truncation = kDefaultTruncation);
// The space represented by [n]: level k is the discrete set of maps [k] -> [n].
SimplicialSpace h_space(int n, int outer_truncation = kDefaultTruncation,
                        int inner_truncation = kDefaultTruncation);

enum class CheckMode { Strict, Pi0, NerveEquivalence };
const char* to_string(CheckMode mode) noexcept;
std::optional<CheckMode> parse_check_mode(std::string_view text);

struct SegalVerdict {
    bool segal = true;
    CheckMode mode = CheckMode::Strict;
    int degree = -1;     // outer degree of the first failure
    std::string detail;  // counterexample description
};

// The iterated strict fiber power level1 x_{level0} ... x_{level0} level1
// (n factors) and the Segal map of level n into it.
struct SegalMap {
    FinSSet fiber_power;
    SSetMap map;
};
SegalMap segal_map(const SimplicialSpace& x, int n);

// Strict: every Segal map is an isomorphism. Pi0: the Segal map becomes a
// bijection pi0(X_n) -> pi0(X_1) x_{pi0 X_0} ... x_{pi0 X_0} pi0(X_1).
// NerveEquivalence: levels and fiber powers are nerves and the Segal map
// induces an equivalence of categories (OracleUnavailable otherwise).
SegalVerdict is_segal(const SimplicialSpace& x, CheckMode mode = CheckMode::Strict);

struct HomotopyCategory {
    FinCategory category;
    // arrow index per vertex of level 1
    std::vector<int> arrow_of_vertex;
    bool level0_discrete = true;
};
// Objects are the vertices of level 0; hom(x, y) is pi0 of the strict fiber
// of level 1 over the degenerate pair (x, y); composition through level-2
// vertices. Throws NotSegal when a composite is missing and
// IllDefinedComposition when it is not single-valued or breaks a law.
HomotopyCategory homotopy_cat(const SimplicialSpace& x);

struct HoEquiv {
    std::vector<int> components;  // invertible components of pi0(level 1)
    int level1_components = 0;
    bool mixed = false;  // some component holds both invertible and non-invertible vertices
    bool level0_discrete = true;
};
HoEquiv hoequiv(const SimplicialSpace& x);

struct CompletenessVerdict {
    bool complete = false;
    CheckMode mode = CheckMode::Pi0;
    int level0_components = 0;
    int hoequiv_components = 0;
    std::string detail;
    std::vector<std::string> notes;
};
// pi0(level 0) -> hoequiv through the outer degeneracy is a bijection; in
// NerveEquivalence mode the induced functor on fundamental categories must
// also be an equivalence.
CompletenessVerdict is_complete(const SimplicialSpace& x, CheckMode mode = CheckMode::Pi0);

// Every total outer degeneracy level 0 -> level n is an equivalence in the
// given mode.
bool is_zero_local(const SimplicialSpace& x, CheckMode mode = CheckMode::Pi0);

// The functor between fundamental categories induced by a map of strict
// Segal simplicial sets.
Functor induced_functor(const SSetMap& f);
// Whether f is an equivalence in `mode`; NerveEquivalence throws
// OracleUnavailable unless both ends are strict Segal with truncation >= 2.
bool is_equivalence(const SSetMap& f, CheckMode mode);

// Level n is the nerve of the category of functors [n] -> base with natural
// transformations whose components are weak equivalences.
SimplicialSpace classification_diagram(const RelCategory& r, int outer_truncation = 2,
                                       int inner_truncation = 2,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

// Maps of simplicial spaces, as one SSetMap per level.
std::vector<std::vector<SSetMap>> space_mapset(const SimplicialSpace& x, const SimplicialSpace& y,
                                               std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace segalkit
