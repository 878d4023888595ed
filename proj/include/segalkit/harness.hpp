#pragma once

// Desk-scale instances of the axioms and lemmas, each producing a Report.

#include <cstdint>
#include <string>
#include <vector>

#include "segalkit/json_io.hpp"
#include "segalkit/realization.hpp"

namespace segalkit {

enum class Verdict { Pass, Fail, Unverifiable };
const char* to_string(Verdict v) noexcept;

struct Report {
    std::string check;
    Verdict verdict = Verdict::Pass;
    std::vector<std::string> hypothesis_notes;
    Json witnesses = Json::array();
    Json metrics = Json::object();

    // Marks the report failed with a concrete counterexample.
    void fail(Json witness);
    bool passed() const noexcept { return verdict == Verdict::Pass; }
    Json to_json() const;
};

Report check_interval();
// Parts glued into their coproduct.
Report check_A3(const std::vector<FinSSet>& parts, const SSetMap& z);
// Parts with explicit legs into a common target (which need not be their coproduct).
Report check_A3(const std::vector<FinSSet>& parts, const std::vector<SSetMap>& legs, const SSetMap& z);
Report check_indecomposable();
Report check_A5(const FinCategory& a, int truncation = 2, int outer_truncation = 2,
                std::uint64_t budget = kDefaultEnumerationBudget);
Report check_A6(const FinCategory& a, const FinCategory& b, const Functor& f);
// Every functor between members of `corpus`.
Report check_A6_corpus(const std::vector<FinCategory>& corpus, std::uint64_t budget = kDefaultEnumerationBudget);
Report check_A7(int n, int m, std::uint64_t budget = kDefaultEnumerationBudget);
Report check_hmono(const SimplicialSpace& x);
Report check_initial();
Report interval_uniqueness_search(int max_objects = 2, int max_arrows = 5,
                                  std::uint64_t budget = kDefaultEnumerationBudget);
// Strict Segal nerves, and failure of every nerve with one 2-cell deleted.
Report check_nerve_segal(const std::vector<FinCategory>& corpus);
// is_complete of discrete nerves against is_rigid.
Report check_completeness_rigidity(const std::vector<FinCategory>& corpus);
// Strict Segal and homotopy-category round trip of a classification diagram.
Report check_classification(const RelCategory& r, int outer_truncation = 2, int inner_truncation = 2);
// Axioms outside desk scale (A1, A4).
Report check_unverifiable(const std::string& axiom);

struct Corpus {
    std::uint64_t seed = 0;
    std::vector<FinCategory> categories;    // <= 2 objects, <= 5 arrows, then [n] for n <= 4 and I-bar
    std::vector<RelCategory> relative;      // seeded random relative categories
};
Corpus default_corpus(std::uint64_t seed = 0);

// The axiom and lemma checks, in batch order.
const std::vector<std::string>& check_names();
// Further corpus sweeps accepted by run_check but left out of run_all.
const std::vector<std::string>& extra_check_names();
// One named check over the default corpus.
std::vector<Report> run_check(const std::string& name, const Corpus& corpus);
// Every check, as one document; timings are recorded only when asked for so
// that the default output is byte-stable.
Json run_all(const Corpus& corpus, bool timings = false);
// The same document for a chosen list of checks.
Json run_checks(const Corpus& corpus, const std::vector<std::string>& names, bool timings = false);

}  // namespace segalkit
