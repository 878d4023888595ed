#pragma once

// Realization of simplicial spaces against the standard simplices, the
// diagonal, homotopy fiber products through standard(1), and nerves of maps.

#include <array>
#include <map>
#include <random>

#include "segalkit/sspace.hpp"

namespace segalkit {

struct Realization {
    FinSSet object;  // truncation min(inner, outer)
    // rep[k][c]: (level n, rank of theta : [k] -> [n], cell of level n) of
    // the least element of the class behind cell c
    std::vector<std::vector<std::array<int, 3>>> rep;
    // the realization cell of a pair (theta, c) in standard(n)_k x (X_n)_k
    int cell(int k, int n, int theta_rank, int c) const;

    std::vector<std::vector<int>> offset;    // offset[k][n] into the node numbering
    std::vector<std::vector<int>> class_of;  // class_of[k][node]
    std::vector<std::vector<int>> widths;    // widths[k][n] = |(X_n)_k|
};

// The coend of standard(n) x X_n, computed degreewise as a coequalizer over
// outer cofaces and codegeneracies.
Realization realize_cells(const SimplicialSpace& x);
FinSSet realize(const SimplicialSpace& x);
// The realization of a map given levelwise.
SSetMap realize_map(const SimplicialSpace& x, const SimplicialSpace& y, const std::vector<SSetMap>& f);

// Degree-n cells are the degree-n cells of level n; truncation min(inner, outer).
FinSSet diagonal(const SimplicialSpace& x);
// (theta, c) |-> theta^* c, the comparison with the diagonal.
SSetMap realization_to_diagonal(const SimplicialSpace& x);
// Level 0 (truncated to the realization) into the realization.
SSetMap level0_to_realization(const SimplicialSpace& x);

// The map standard(n) -> y picking the degree-n cell c.
SSetMap yoneda_map(const FinSSet& y, int n, int c);
// The map a -> b x c with components f and g.
SSetMap pairing(const SSetMap& f, const SSetMap& g);

// (X x Y) x_{Z x Z} hom(standard(1), Z) along f x g and the two endpoints.
FinSSet c_fiber_product(const SSetMap& f, const SSetMap& g,
                        std::uint64_t budget = kDefaultEnumerationBudget);

struct CNerve {
    SimplicialSpace space;
    std::vector<InternalHom> homs;  // hom(standard(n), Y) per level
    // cell of level n, inner degree k, for a tuple of source cells and a hom cell
    int cell(int n, int k, const std::vector<int>& tuple, int hom_cell) const;
    // hom cell of level n, inner degree k, with the given cell table
    int hom_cell(int n, int k, const std::vector<std::vector<int>>& table) const;

    std::vector<int> source_counts;  // |X_k|
    std::vector<std::vector<std::map<std::pair<int, int>, int>>> pairs;                 // [n][k]
    std::vector<std::vector<std::map<std::vector<std::vector<int>>, int>>> hom_index;  // [n][k]
};
// Level n is X^(n+1) x_{Y^(n+1)} hom(standard(n), Y) along p^(n+1) and the
// n+1 vertex evaluations; outer maps act on the tuple and by precomposition.
CNerve c_nerve(const SSetMap& p, int outer_truncation = 2, std::uint64_t budget = kDefaultEnumerationBudget);

// Levelwise operations on spaces.
SimplicialSpace external_product(const FinSSet& k, const FinSSet& l);
SimplicialSpace space_coproduct(const SimplicialSpace& x, const SimplicialSpace& y);

// A random space with the given truncations and at most `max_cells` cells in
// every (level, inner degree), built from discrete and constant levels,
// external products, coproducts and classification diagrams.
SimplicialSpace random_space(std::mt19937_64& rng, int outer_truncation, int inner_truncation, int max_cells = 20);

}  // namespace segalkit
