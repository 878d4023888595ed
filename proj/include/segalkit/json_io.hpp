#pragma once

// JSON documents for every value type. Printing is deterministic and
// parse(print(x)) == x; malformed input throws InvalidInput with a location.

#include <string>
#include <string_view>

#include <json.hpp>

#include "segalkit/fincat.hpp"
#include "segalkit/sset.hpp"
#include "segalkit/sspace.hpp"

namespace segalkit {

using Json = nlohmann::ordered_json;

namespace schema {
inline constexpr const char* kSimplexMap = "segalkit/simplex-map/v1";
inline constexpr const char* kCategory = "segalkit/category/v1";
inline constexpr const char* kRelCategory = "segalkit/relative-category/v1";
inline constexpr const char* kFunctor = "segalkit/functor/v1";
inline constexpr const char* kSSet = "segalkit/sset/v1";
inline constexpr const char* kSSetMap = "segalkit/sset-map/v1";
inline constexpr const char* kSpace = "segalkit/space/v1";
inline constexpr const char* kReport = "segalkit/report/v1";
inline constexpr const char* kBatch = "segalkit/batch/v1";
inline constexpr const char* kResult = "segalkit/result/v1";
}  // namespace schema

// Parses text, reporting "line L, column C" on syntax errors.
Json parse_json(std::string_view text);
// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

// The document kind from its "$schema" tag, or guessed from its keys:
// "category", "relative-category", "functor", "sset", "sset-map", "space",
// "simplex-map"; empty when unknown.
std::string document_kind(const Json& j);

Json to_json(const SimplexMap& f);
SimplexMap simplex_map_from_json(const Json& j);

Json to_json(const FinCategory& c, bool tagged = true);
FinCategory category_from_json(const Json& j);
Json to_json(const RelCategory& r, bool tagged = true);
RelCategory relative_category_from_json(const Json& j);
Json to_json(const Functor& f, const FinCategory& a, const FinCategory& b, bool tagged = true);
Functor functor_from_json(const Json& j, const FinCategory& a, const FinCategory& b);

Json to_json(const FinSSet& x, bool tagged = true);
FinSSet sset_from_json(const Json& j);
// Per-degree assignment object {"0": [...], "1": [...], ...}.
Json assignment_json(const SSetMap& f);
SSetMap sset_map_from_assignment(const Json& j, const FinSSet& source, const FinSSet& target);
Json to_json(const SSetMap& f, bool tagged = true);
SSetMap sset_map_from_json(const Json& j);

Json to_json(const SimplicialSpace& x, bool tagged = true);
SimplicialSpace space_from_json(const Json& j);

}  // namespace segalkit
