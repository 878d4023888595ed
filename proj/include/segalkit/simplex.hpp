#pragma once

// Combinatorics of the simplex category: objects [n] = {0 < 1 < ... < n} and
// weakly increasing maps between them.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "segalkit/error.hpp"

namespace segalkit {

// A monotone map [n] -> [m], stored as its full image sequence.
class SimplexMap {
public:
    SimplexMap() : codomain_(0), images_{0} {}
    // Throws InvalidInput unless `images` is non-empty, weakly increasing and
    // bounded by `codomain`.
    SimplexMap(int codomain, std::vector<int> images);

    static SimplexMap identity(int n);
    // delta_i : [n-1] -> [n], the injection missing i.
    static SimplexMap coface(int n, int i);
    // sigma_i : [n+1] -> [n], the surjection hitting i twice.
    static SimplexMap codegeneracy(int n, int i);
    // The vertex [0] -> [n] hitting v.
    static SimplexMap vertex(int n, int v);
    // The unique map [n] -> [0].
    static SimplexMap collapse(int n);

    int domain() const noexcept { return static_cast<int>(images_.size()) - 1; }
    int codomain() const noexcept { return codomain_; }
    std::span<const int> images() const noexcept { return images_; }
    int operator()(int k) const { return images_.at(static_cast<std::size_t>(k)); }

    bool is_identity() const noexcept;
    bool is_injective() const noexcept;
    bool is_surjective() const noexcept;

    // Text form "n->m:[i0,...,in]".
    std::string to_string() const;
    static SimplexMap parse(std::string_view text);

    friend bool operator==(const SimplexMap&, const SimplexMap&) = default;
    friend std::strong_ordering operator<=>(const SimplexMap& a, const SimplexMap& b);

private:
    int codomain_;
    std::vector<int> images_;
};

// compose(f, g) is "f, then g": result(k) = g(f(k)).
SimplexMap compose(const SimplexMap& f, const SimplexMap& g);

// The spine edge [1] -> [n] sending 0 to i and 1 to i + 1.
SimplexMap se(int i, int n);

// Order reversal k -> m - f(n - k).
SimplexMap reverse_map(const SimplexMap& f);

// binomial(n + m + 1, n + 1), saturating at UINT64_MAX.
std::uint64_t count_maps(int n, int m);

// All maps [n] -> [m] in lexicographic order of image sequences.
std::vector<SimplexMap> enumerate_maps(int n, int m,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

// Position of f inside enumerate_maps(f.domain(), f.codomain()).
std::uint64_t rank(const SimplexMap& f);

struct Generator {
    enum class Kind { Coface, Codegeneracy };
    Kind kind;
    int degree;  // codomain of the generator
    int index;

    SimplexMap as_map() const;
    std::string to_string() const;
    friend bool operator==(const Generator&, const Generator&) = default;
};

// Epi-mono factorization into generators, listed in application order: the
// first entry is applied first. Identities factor as the empty word.
std::vector<Generator> factorize(const SimplexMap& f);

// An object-fixing automorphism of the truncation of the simplex category to
// objects [0..max_degree], as an explicit relabeling table.
struct DeltaAutomorphism {
    int max_degree = 0;
    std::vector<std::pair<SimplexMap, SimplexMap>> table;

    SimplexMap apply(const SimplexMap& f) const;
    bool is_identity() const;
};

// Exhaustive search over assignments of the generators compatible with every
// length-two relation, followed by a full functoriality and bijectivity check
// of the induced relabeling.
std::vector<DeltaAutomorphism> automorphisms(int max_degree,
                                             std::uint64_t budget = kDefaultEnumerationBudget);

inline constexpr int kMaxAutomorphismDegree = 4;

}  // namespace segalkit
