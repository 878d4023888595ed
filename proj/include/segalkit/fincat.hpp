#pragma once

// Finite categories given by explicit composition tables, functors between
// them, and the searches built on functor enumeration.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "segalkit/error.hpp"

namespace segalkit {

struct Arrow {
    std::string id;
    int source = 0;
    int target = 0;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

// A composition entry: second o first = result, as arrow indices.
struct Composite {
    int second;
    int first;
    int result;
};

class FinCategory {
public:
    FinCategory() = default;  // the empty category

    // Validates the category axioms; throws InvalidInput naming the first
    // violated law. `composites` must cover every composable pair whose
    // members are both non-identities; pairs involving identities are implied.
    FinCategory(std::vector<std::string> objects, std::vector<Arrow> arrows,
                std::vector<int> identities, std::span<const Composite> composites);

    int object_count() const noexcept { return static_cast<int>(objects_.size()); }
    int arrow_count() const noexcept { return static_cast<int>(arrows_.size()); }
    const std::string& object(int x) const { return objects_.at(static_cast<std::size_t>(x)); }
    const Arrow& arrow(int a) const { return arrows_.at(static_cast<std::size_t>(a)); }
    const std::vector<std::string>& objects() const noexcept { return objects_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

    int identity(int x) const { return identities_.at(static_cast<std::size_t>(x)); }
    bool is_identity(int a) const { return identity(arrow(a).source) == a; }
    int source(int a) const { return arrow(a).source; }
    int target(int a) const { return arrow(a).target; }

    // second o first, or -1 when target(first) != source(second).
    int compose(int second, int first) const {
        return table_[static_cast<std::size_t>(second) * arrows_.size() + static_cast<std::size_t>(first)];
    }

    const std::vector<int>& hom(int x, int y) const {
        return homs_[static_cast<std::size_t>(x) * objects_.size() + static_cast<std::size_t>(y)];
    }

    std::optional<int> inverse(int a) const;
    bool is_isomorphism(int a) const { return inverse(a).has_value(); }

    int find_object(std::string_view name) const;  // -1 when absent
    int find_arrow(std::string_view id) const;     // -1 when absent

    // Composition entries for non-identity pairs, ordered by (second, first).
    std::vector<Composite> composites() const;

    friend bool operator==(const FinCategory&, const FinCategory&) = default;

private:
    std::vector<std::string> objects_;
    std::vector<Arrow> arrows_;
    std::vector<int> identities_;
    std::vector<int> table_;
    std::vector<std::vector<int>> homs_;
};

FinCategory point_category();
FinCategory empty_category();
// The poset [n] = {0 < 1 < ... < n}; arrows "i->j" for i <= j.
FinCategory linear(int n);
// I: two objects and a single arrow between them.
FinCategory interval_category();
// I-bar: two objects and a unique isomorphism between them.
FinCategory bar_interval();
FinCategory discrete_category(int k);
// The cyclic group of order k as a one-object category.
FinCategory cyclic_group(int k);
FinCategory opposite(const FinCategory& c);

// point | empty | linear | interval | bar_interval; `n` is read by linear only.
FinCategory builtin(std::string_view name, int n = 0);

// Object and arrow assignments, relative to a (source, target) pair that the
// caller keeps alongside.
struct Functor {
    std::vector<int> on_objects;
    std::vector<int> on_arrows;
    friend bool operator==(const Functor&, const Functor&) = default;
};

bool is_functor(const FinCategory& a, const FinCategory& b, const Functor& f);
Functor identity_functor(const FinCategory& c);
Functor compose(const Functor& first, const Functor& second);

// Visits every functor a -> b in deterministic order (object assignments
// lexicographically, then arrow assignments lexicographically). The visitor
// returns false to stop early.
void for_each_functor(const FinCategory& a, const FinCategory& b,
                      const std::function<bool(const Functor&)>& visit,
                      std::uint64_t budget = kDefaultEnumerationBudget);
std::vector<Functor> enumerate_functors(const FinCategory& a, const FinCategory& b,
                                        std::uint64_t budget = kDefaultEnumerationBudget);

bool is_fully_faithful(const FinCategory& a, const FinCategory& b, const Functor& f);
bool is_essentially_surjective(const FinCategory& a, const FinCategory& b, const Functor& f);
bool is_equivalence(const FinCategory& a, const FinCategory& b, const Functor& f);

struct EquivalenceResult {
    bool equivalent = false;
    std::optional<Functor> witness;
};
// First fully faithful, essentially surjective functor in enumeration order.
EquivalenceResult are_equivalent(const FinCategory& a, const FinCategory& b,
                                 std::uint64_t budget = kDefaultEnumerationBudget);

std::optional<Functor> find_isomorphism(const FinCategory& a, const FinCategory& b,
                                        std::uint64_t budget = kDefaultEnumerationBudget);

bool naturally_isomorphic(const FinCategory& a, const FinCategory& b, const Functor& f,
                          const Functor& g);

bool is_rigid(const FinCategory& c);

// Isomorphism class index per object, numbered by first occurrence.
std::vector<int> object_iso_classes(const FinCategory& c);
// Class index per arrow, where two arrows are identified when an invertible
// square connects them.
std::vector<int> arrow_iso_classes(const FinCategory& c);

struct Pushout {
    FinCategory category;
    Functor left;
    Functor right;
};

// Pushout of a <- D -> b where D is discrete: `glue` lists identified object
// pairs (object of a, object of b). Morphisms are reduced words over the
// non-identity arrows of both sides; closure stops with NonTerminating once
// `budget` generation steps have been spent.
Pushout pushout_over_objects(const FinCategory& a, const FinCategory& b,
                             std::span<const std::pair<int, int>> glue,
                             std::uint64_t budget = kDefaultPushoutBudget);

// [1] glued end to start n times, built by iterated pushouts. Object k of the
// result is the k-th vertex along the chain.
FinCategory spine_category(int n, std::uint64_t budget = kDefaultPushoutBudget);

class RelCategory {
public:
    RelCategory() = default;
    // Throws InvalidInput unless weq contains all identities and is closed
    // under composition.
    RelCategory(FinCategory base, std::vector<int> weq);

    const FinCategory& base() const noexcept { return base_; }
    const std::vector<int>& weq() const noexcept { return weq_; }
    bool is_weq(int a) const { return member_.at(static_cast<std::size_t>(a)); }

    static RelCategory minimal(FinCategory base);       // identities only
    static RelCategory isomorphisms(FinCategory base);  // all invertible arrows
    static RelCategory maximal(FinCategory base);       // every arrow

    friend bool operator==(const RelCategory&, const RelCategory&) = default;

private:
    FinCategory base_;
    std::vector<int> weq_;
    std::vector<bool> member_;
};

// Categories satisfying the three interval properties: two isomorphism
// classes of objects with no non-trivial automorphisms; not equivalent to the
// discrete two-object category; strict-Segal simplicial subsets of the nerve
// falling into exactly the four classes empty, point, two points, whole.
struct IntervalMatch {
    std::size_t index;  // position inside the corpus
    std::vector<std::string> subobject_classes;
};

struct IntervalProperties {
    bool two_rigid_classes = false;
    bool not_discrete_pair = false;
    bool four_subobjects = false;
    std::vector<std::string> subobject_classes;
};

IntervalProperties interval_properties(const FinCategory& c,
                                       std::uint64_t budget = kDefaultEnumerationBudget);
std::vector<IntervalMatch> characterize_interval(std::span<const FinCategory> corpus,
                                                 std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace segalkit
