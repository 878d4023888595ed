#pragma once

// Truncated finite simplicial sets with explicit face and degeneracy tables.
// Degenerate cells are stored like any other cell; a set truncated at D
// carries degrees 0..D.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "segalkit/error.hpp"
#include "segalkit/fincat.hpp"
#include "segalkit/simplex.hpp"

namespace segalkit {

inline constexpr int kDefaultTruncation = 3;

class FinSSet {
public:
    // labels[n][c] names cell c of degree n; faces[n][i][c] is d_i of a degree-n
    // cell (faces[0] is empty); degens[n][i][c] is s_i of a degree-n cell for
    // n < truncation. Throws InvalidInput naming the degree and cell of the
    // first violated identity.
    FinSSet(int truncation, std::vector<std::vector<std::string>> labels,
            std::vector<std::vector<std::vector<int>>> faces,
            std::vector<std::vector<std::vector<int>>> degens);
    // The empty simplicial set truncated at `truncation`.
    explicit FinSSet(int truncation = kDefaultTruncation);

    int truncation() const noexcept;
    int count(int n) const;
    std::size_t total_cells() const;
    const std::string& label(int n, int c) const;
    int find_cell(int n, std::string_view label) const;  // -1 when absent

    int face(int n, int i, int c) const;   // d_i : X_n -> X_{n-1}
    int degen(int n, int i, int c) const;  // s_i : X_n -> X_{n+1}
    bool is_degenerate(int n, int c) const;

    const std::vector<std::vector<std::string>>& labels() const;

    friend bool operator==(const FinSSet& a, const FinSSet& b);

private:
    struct Tables;
    std::shared_ptr<const Tables> t_;
};

// The action of a monotone map theta : [k] -> [n] on a degree-n cell.
int act(const FinSSet& x, const SimplexMap& theta, int c);

class SSetMap {
public:
    SSetMap() = default;
    // Throws InvalidInput unless the truncations agree and the cell functions
    // commute with every face and degeneracy.
    SSetMap(FinSSet source, FinSSet target, std::vector<std::vector<int>> cells);
    // Skips validation; for maps that are correct by construction.
    static SSetMap trusted(FinSSet source, FinSSet target, std::vector<std::vector<int>> cells);

    const FinSSet& source() const noexcept { return source_; }
    const FinSSet& target() const noexcept { return target_; }
    int operator()(int n, int c) const {
        return cells_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(c));
    }
    const std::vector<std::vector<int>>& cells() const noexcept { return cells_; }

    bool is_injective() const;
    bool is_surjective() const;
    bool is_isomorphism() const { return is_injective() && is_surjective(); }

    friend bool operator==(const SSetMap&, const SSetMap&) = default;

private:
    FinSSet source_;
    FinSSet target_;
    std::vector<std::vector<int>> cells_;
};

SSetMap identity_map(const FinSSet& x);
// "f, then g".
SSetMap compose(const SSetMap& f, const SSetMap& g);

// Degree-k cells are the maps [k] -> [n], in lexicographic order, labelled by
// their image sequences ("0,0,1").
FinSSet standard(int n, int truncation = kDefaultTruncation);
FinSSet point_sset(int truncation = kDefaultTruncation);
// One vertex per label, every higher cell degenerate.
FinSSet discrete_sset(const std::vector<std::string>& vertices, int truncation = kDefaultTruncation);
FinSSet truncate(const FinSSet& x, int truncation);

struct NerveCells {
    FinSSet sset;
    // strings[n][c]: the composable arrows of a degree-n cell in application
    // order; a vertex is stored as {object}.
    std::vector<std::vector<std::vector<int>>> strings;
};
NerveCells nerve_cells(const FinCategory& a, int truncation = kDefaultTruncation);
FinSSet nerve(const FinCategory& a, int truncation = kDefaultTruncation);
SSetMap nerve_of_functor(const FinCategory& a, const FinCategory& b, const Functor& f,
                         int truncation = kDefaultTruncation);

// Component index per vertex, numbered by first occurrence.
std::vector<int> pi0(const FinSSet& x);
int pi0_count(const FinSSet& x);

// Degree-n cell (a, b) of a product sits at index a * |Y_n| + b.
FinSSet product(const FinSSet& x, const FinSSet& y);
SSetMap product_projection(const FinSSet& x, const FinSSet& y, int side);
SSetMap product_map(const SSetMap& f, const SSetMap& g);

struct Coproduct {
    FinSSet object;
    SSetMap left;
    SSetMap right;
};
Coproduct coproduct(const FinSSet& x, const FinSSet& y);

struct Pullback {
    FinSSet object;
    SSetMap left;   // to the source of f
    SSetMap right;  // to the source of g
};
Pullback pullback(const SSetMap& f, const SSetMap& g);

struct Quotient {
    FinSSet object;
    SSetMap projection;
};
// Quotient by the equivalence relation generated by `pairs` (per degree),
// closed under faces and degeneracies. Throws IllFormedQuotient when the
// induced structure maps are not single-valued.
Quotient quotient(const FinSSet& x, const std::vector<std::vector<std::pair<int, int>>>& pairs);
Quotient coequalizer(const SSetMap& f, const SSetMap& g);

struct Inclusion {
    FinSSet object;
    SSetMap inclusion;
};
// The simplicial subset on the kept cells; throws InvalidInput unless closed
// under faces and degeneracies.
Inclusion sub_sset(const FinSSet& x, const std::vector<std::vector<bool>>& keep);
// Removes a cell together with everything having it as an iterated face.
Inclusion remove_cell(const FinSSet& x, int n, int c);
// The image of a map, as a simplicial subset of its target.
Inclusion image(const SSetMap& f);

struct MapOptions {
    std::uint64_t budget = kDefaultEnumerationBudget;
    bool injective = false;
    // Optional filter on individual cell assignments (degree, source cell, target cell).
    std::function<bool(int, int, int)> allow;
};

// Every simplicial map x -> y, found by degree-ascending backtracking over
// cells in index order. The visitor returns false to stop.
void for_each_map(const FinSSet& x, const FinSSet& y, const std::function<bool(const SSetMap&)>& visit,
                  const MapOptions& options = {});
std::vector<SSetMap> mapset(const FinSSet& x, const FinSSet& y,
                            std::uint64_t budget = kDefaultEnumerationBudget);
std::optional<SSetMap> find_isomorphism(const FinSSet& x, const FinSSet& y,
                                        std::uint64_t budget = kDefaultEnumerationBudget);
inline bool isomorphic(const FinSSet& x, const FinSSet& y) { return find_isomorphism(x, y).has_value(); }

struct InternalHom {
    FinSSet object;
    // maps[k][c]: cell table of the map x * standard(k) -> y behind cell c.
    std::vector<std::vector<std::vector<std::vector<int>>>> maps;
};
// Degree-k cells are the maps x * standard(k) -> y, with structure maps by
// precomposition. `truncation` defaults to that of y. An `allow` filter
// (k, degree, cell of x * standard(k), target cell) restricts to a
// simplicial subset; it must be stable under precomposition.
InternalHom internal_hom(const FinSSet& x, const FinSSet& y, int truncation = -1,
                         std::uint64_t budget = kDefaultEnumerationBudget,
                         const std::function<bool(int, int, int, int)>& allow = {});
// For x = standard(n): the map hom(standard(n), y) -> y evaluating at vertex v.
SSetMap evaluate_at_vertex(const InternalHom& hom, int n, int v, const FinSSet& y);

struct SegalWitness {
    bool segal = true;
    int degree = -1;
    std::vector<int> tuple;  // the offending spine tuple of edge cells
    std::string detail;
};
// Whether every spine map X_n -> X_1 x_{X_0} ... x_{X_0} X_1 is bijective.
SegalWitness is_strict_segal(const FinSSet& x);
// The spine edges se_0..se_{n-1} of a degree-n cell.
std::vector<int> spine(const FinSSet& x, int n, int c);

// Objects are vertices, arrows are edges, composition through the unique
// degree-2 filler. Throws NotSegal unless x is strict Segal with truncation >= 2.
FinCategory fundamental_category(const FinSSet& x);

}  // namespace segalkit
