// Command-line front end over the C interface: one document in, one out.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "segalkit/segalkit.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kCheckFailed = 1, kInputError = 2, kBudget = 3 };

struct Flags {
    int truncation = 3;
    int outer = 2;
    std::uint64_t budget = 1'000'000;
    std::string mode = "pi0";
    std::uint64_t seed = 0;
    std::string out;
    bool timings = false;
};

// A failed library call, carrying its status.
struct Failure : std::runtime_error {
    sk_status status;
    Failure(sk_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(sk_status s) {
    if (s != SK_OK) throw Failure(s, std::string(sk_status_name(s)) + ": " + sk_last_error());
}

std::string take(char* s) {
    std::string out = s ? s : "";
    sk_string_free(s);
    return out;
}

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using Category = std::unique_ptr<sk_category, Deleter<sk_category, sk_category_free>>;
using RelCat = std::unique_ptr<sk_relcat, Deleter<sk_relcat, sk_relcat_free>>;
using SSet = std::unique_ptr<sk_sset, Deleter<sk_sset, sk_sset_free>>;
using Map = std::unique_ptr<sk_map, Deleter<sk_map, sk_map_free>>;
using Space = std::unique_ptr<sk_space, Deleter<sk_space, sk_space_free>>;

std::string read_input(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Failure(SK_INVALID_INPUT, "cannot read '" + path + "'");
        buf << in.rdbuf();
    }
    return buf.str();
}

std::string kind_of(const std::string& text) {
    char* kind = nullptr;
    check(sk_document_kind(text.c_str(), &kind));
    return take(kind);
}

sk_mode mode_of(const std::string& m) {
    if (m == "strict") return SK_MODE_STRICT;
    if (m == "nerve-equivalence") return SK_MODE_NERVE_EQUIVALENCE;
    return SK_MODE_PI0;
}

class Runner {
public:
    Runner(const Flags& flags, std::string subcommand) : flags_(flags), subcommand_(std::move(subcommand)) {}

    // Adds the metadata block and writes the document; returns the exit code.
    int finish(Json doc, int code = kOk) {
        Json meta;
        meta["tool"] = std::string("segalkit ") + sk_version();
        meta["subcommand"] = subcommand_;
        meta["inputs"] = inputs_;
        meta["flags"] = {{"truncation", flags_.truncation}, {"outer", flags_.outer}, {"budget", flags_.budget},
                         {"mode", flags_.mode},             {"seed", flags_.seed},   {"timings", flags_.timings}};
        doc["metadata"] = std::move(meta);
        const std::string text = doc.dump(2) + "\n";
        if (flags_.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(flags_.out, std::ios::binary);
            if (!out) throw Failure(SK_INVALID_INPUT, "cannot write '" + flags_.out + "'");
            out << text;
        }
        return code;
    }

    std::string input(const std::string& path) {
        inputs_.push_back(path);
        return read_input(path);
    }

    const Flags& flags() const { return flags_; }

private:
    Flags flags_;
    std::string subcommand_;
    Json inputs_ = Json::array();
};

Json parse(const std::string& text) { return Json::parse(text); }

Json sset_doc(const sk_sset* x) {
    char* s = nullptr;
    check(sk_sset_json(x, &s));
    return parse(take(s));
}

Json space_doc(const sk_space* x) {
    char* s = nullptr;
    check(sk_space_json(x, &s));
    return parse(take(s));
}

Space read_space(const std::string& text) {
    sk_space* x = nullptr;
    check(sk_space_parse(text.c_str(), &x));
    return Space(x);
}

// A space, or a simplicial set or category read as its discrete nerve.
Space space_from_any(const std::string& text, const Flags& f) {
    const auto kind = kind_of(text);
    if (kind == "space") return read_space(text);
    SSet x;
    if (kind == "category") {
        sk_category* c = nullptr;
        check(sk_category_parse(text.c_str(), &c));
        Category owned(c);
        sk_sset* n = nullptr;
        check(sk_nerve(c, f.outer, &n));
        x.reset(n);
    } else if (kind == "sset") {
        sk_sset* n = nullptr;
        check(sk_sset_parse(text.c_str(), &n));
        x.reset(n);
    } else {
        throw Failure(SK_INVALID_INPUT, "expected a space, simplicial set or category document");
    }
    sk_space* s = nullptr;
    check(sk_discrete_levels(x.get(), f.truncation, &s));
    return Space(s);
}

// `out` is read only after the call has filled it.
Json verdict_call(sk_status s, char** out) {
    check(s);
    return parse(take(*out));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"segalkit: finite simplicial sets, Segal spaces and desk-scale axiom checks"};
    app.require_subcommand(1);
    Flags flags;
    app.add_option("--truncation", flags.truncation, "inner simplicial truncation")->check(CLI::Range(0, 6));
    app.add_option("--outer", flags.outer, "outer truncation of spaces")->check(CLI::Range(0, 6));
    app.add_option("--budget", flags.budget, "step budget for exhaustive searches");
    app.add_option("--mode", flags.mode, "equivalence mode")
        ->check(CLI::IsMember({"strict", "pi0", "nerve-equivalence"}));
    app.add_option("--seed", flags.seed, "seed for random corpora");
    app.add_option("--out", flags.out, "output path (default stdout)");
    app.add_flag("--timings", flags.timings, "record per-check wall-clock times");

    int n = 0, m = 0, max_degree = 4, max_objects = 2, max_arrows = 5, relative = 3;
    std::string path, check_name;
    bool all = false;

    auto* delta_hom = app.add_subcommand("delta-hom", "monotone maps [n] -> [m]");
    delta_hom->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
    delta_hom->add_option("m", m)->required()->check(CLI::NonNegativeNumber);
    auto* delta_aut = app.add_subcommand("delta-aut", "automorphisms of the truncated simplex category");
    delta_aut->add_option("max_degree", max_degree)->check(CLI::Range(0, 4));
    auto* nerve = app.add_subcommand("nerve", "nerve of a category document");
    auto* segal = app.add_subcommand("segal-check", "Segal condition for a simplicial set or space");
    auto* complete = app.add_subcommand("complete-check", "completeness of a space (or discrete nerve)");
    auto* realize = app.add_subcommand("realize", "realization of a space");
    auto* diag = app.add_subcommand("diagonal", "diagonal of a space");
    auto* cnerve = app.add_subcommand("c-nerve", "nerve of a map of simplicial sets through standard(1)");
    auto* classify = app.add_subcommand("classify", "classification diagram of a relative category");
    auto* validate = app.add_subcommand("validate", "parse and check any document");
    for (auto* sub : {nerve, segal, complete, realize, diag, cnerve, classify, validate})
        sub->add_option("input", path, "document path, or - for stdin")->required();
    auto* axiom = app.add_subcommand("axiom-check", "desk-scale axiom and lemma checks");
    axiom->add_option("check", check_name, "a single check");
    axiom->add_flag("--all", all, "every check in batch order");
    auto* interval = app.add_subcommand("interval-search", "categories satisfying the interval properties");
    auto* corpus = app.add_subcommand("corpus-gen", "small-category corpus and seeded relative categories");
    for (auto* sub : {interval, corpus}) {
        sub->add_option("max_objects", max_objects)->check(CLI::Range(0, 3));
        sub->add_option("max_arrows", max_arrows)->check(CLI::Range(0, 6));
    }
    corpus->add_option("--relative", relative, "number of random relative categories")->check(CLI::Range(0, 100));
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    CLI::App* sub = app.get_subcommands().front();
    Runner run(flags, sub->get_name());
    const sk_mode mode = mode_of(flags.mode);
    try {
        if (sub == delta_hom) {
            char* out = nullptr;
            check(sk_delta_maps(n, m, flags.budget, &out));
            return run.finish(parse(take(out)));
        }
        if (sub == delta_aut) {
            char* out = nullptr;
            check(sk_delta_automorphisms(max_degree, flags.budget, &out));
            return run.finish(parse(take(out)));
        }
        if (sub == validate) {
            const auto text = run.input(path);
            char* out = nullptr;
            Json doc;
            doc["$schema"] = "segalkit/result/v1";
            doc["operation"] = "validate";
            const sk_status s = sk_validate(text.c_str(), &out);
            if (s != SK_OK) {
                doc["valid"] = false;
                doc["error"] = {{"code", sk_status_name(s)}, {"message", sk_last_error()}};
                std::cerr << "error: " << sk_status_name(s) << ": " << sk_last_error() << "\n";
                return run.finish(doc, s == SK_BUDGET_EXCEEDED || s == SK_NON_TERMINATING ? kBudget : kInputError);
            }
            take(out);
            doc["valid"] = true;
            doc["kind"] = kind_of(text);
            return run.finish(doc);
        }
        if (sub == nerve) {
            const auto text = run.input(path);
            sk_category* c = nullptr;
            check(sk_category_parse(text.c_str(), &c));
            Category owned(c);
            sk_sset* x = nullptr;
            check(sk_nerve(c, flags.truncation, &x));
            return run.finish(sset_doc(SSet(x).get()));
        }
        if (sub == segal) {
            const auto text = run.input(path);
            const auto kind = kind_of(text);
            int passed = 0;
            char* out = nullptr;
            Json doc;
            if (kind == "sset") {
                sk_sset* x = nullptr;
                check(sk_sset_parse(text.c_str(), &x));
                SSet owned(x);
                doc = verdict_call(sk_sset_segal(x, &passed, &out), &out);
            } else if (kind == "space") {
                auto x = read_space(text);
                doc = verdict_call(sk_space_segal(x.get(), mode, &passed, &out), &out);
            } else {
                throw Failure(SK_INVALID_INPUT, "expected a simplicial set or space document");
            }
            return run.finish(doc, passed ? kOk : kCheckFailed);
        }
        if (sub == complete) {
            const auto x = space_from_any(run.input(path), flags);
            int passed = 0;
            char* out = nullptr;
            const auto doc = verdict_call(sk_space_complete(x.get(), mode, &passed, &out), &out);
            return run.finish(doc, passed ? kOk : kCheckFailed);
        }
        if (sub == realize || sub == diag) {
            const auto x = read_space(run.input(path));
            sk_sset* r = nullptr;
            check(sub == realize ? sk_realize(x.get(), &r) : sk_diagonal(x.get(), &r));
            Json doc = sset_doc(SSet(r).get());
            const int outer = sk_space_outer_truncation(x.get()), inner = sk_space_inner_truncation(x.get());
            doc["provenance"] = {{"operation", sub->get_name()}, {"input", path}, {"outerTruncation", outer},
                                 {"innerTruncation", inner}, {"truncation", std::min(outer, inner)}};
            return run.finish(doc);
        }
        if (sub == cnerve) {
            const auto text = run.input(path);
            sk_map* p = nullptr;
            check(sk_map_parse(text.c_str(), &p));
            Map owned(p);
            sk_space* x = nullptr;
            check(sk_c_nerve(p, flags.outer, flags.budget, &x));
            Space result(x);
            Json doc = space_doc(x);
            doc["provenance"] = {{"operation", "c-nerve"}, {"input", path}, {"outerTruncation", flags.outer},
                                 {"innerTruncation", sk_space_inner_truncation(x)}};
            return run.finish(doc);
        }
        if (sub == classify) {
            const auto text = run.input(path);
            sk_relcat* r = nullptr;
            check(sk_relcat_parse(text.c_str(), &r));
            RelCat owned(r);
            sk_space* x = nullptr;
            check(sk_classification_diagram(r, flags.outer, flags.truncation, flags.budget, &x));
            return run.finish(space_doc(Space(x).get()));
        }
        if (sub == axiom) {
            if (all == !check_name.empty())
                throw Failure(SK_INVALID_INPUT, "give either a check name or --all");
            int passed = 0;
            char* out = nullptr;
            const auto doc = verdict_call(
                sk_axiom_check(all ? nullptr : check_name.c_str(), flags.seed, flags.timings, &passed, &out), &out);
            return run.finish(doc, passed ? kOk : kCheckFailed);
        }
        if (sub == interval) {
            int passed = 0;
            char* out = nullptr;
            const auto doc = verdict_call(sk_interval_search(max_objects, max_arrows, flags.budget, &passed, &out), &out);
            return run.finish(doc, passed ? kOk : kCheckFailed);
        }
        if (sub == corpus) {
            char* out = nullptr;
            check(sk_corpus(max_objects, max_arrows, flags.seed, relative, flags.budget, &out));
            return run.finish(parse(take(out)));
        }
    } catch (const Failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.status == SK_BUDGET_EXCEEDED || e.status == SK_NON_TERMINATING ? kBudget : kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
