#pragma once

// Exhaustive and seeded corpora of small categories.

#include <cstdint>
#include <random>
#include <vector>

#include "segalkit/fincat.hpp"

namespace segalkit {

// A canonical representative of the isomorphism class of c: objects and
// arrows renamed ("a", "b", ...; "1a", "f1", ...) and ordered so that
// isomorphic categories give equal values.
FinCategory canonical_form(const FinCategory& c);

// Every category with at most `max_objects` objects and `max_arrows` arrows
// (identities included), one per isomorphism class, ordered by object count,
// arrow count and then canonical encoding.
std::vector<FinCategory> small_categories(int max_objects, int max_arrows,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

// A random category on at most `max_objects` objects: either a random poset
// or two small building blocks (point, [1], I-bar, an idempotent, Z/2) glued
// at one object.
FinCategory random_category(std::mt19937_64& rng, int max_objects);

// A random relative category: a random base with weak equivalences the
// composition closure of a random arrow subset.
RelCategory random_relative_category(std::mt19937_64& rng, int max_objects);

// Closes a set of arrows under composition and adds all identities.
std::vector<int> composition_closure(const FinCategory& c, std::vector<int> arrows);

}  // namespace segalkit
