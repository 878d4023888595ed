#include "segalkit/simplex.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>

namespace segalkit {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TruncationMismatch: return "TruncationMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NonTerminating: return "NonTerminating";
    case ErrorCode::IllFormedQuotient: return "IllFormedQuotient";
    case ErrorCode::NotSegal: return "NotSegal";
    case ErrorCode::IllDefinedComposition: return "IllDefinedComposition";
    case ErrorCode::OracleUnavailable: return "OracleUnavailable";
    }
    return "Unknown";
}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

SimplexMap::SimplexMap(int codomain, std::vector<int> images)
    : codomain_(codomain), images_(std::move(images)) {
    if (codomain_ < 0 || images_.empty())
        fail(ErrorCode::InvalidInput, "simplex map needs a codomain >= 0 and at least one image");
    for (std::size_t k = 0; k < images_.size(); ++k) {
        if (images_[k] < 0 || images_[k] > codomain_)
            fail(ErrorCode::InvalidInput, "simplex map image out of range: " + to_string());
        if (k > 0 && images_[k] < images_[k - 1])
            fail(ErrorCode::InvalidInput, "simplex map is not monotone: " + to_string());
    }
}

SimplexMap SimplexMap::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) images[static_cast<std::size_t>(k)] = k;
    return SimplexMap(n, std::move(images));
}

SimplexMap SimplexMap::coface(int n, int i) {
    if (n < 1 || i < 0 || i > n)
        fail(ErrorCode::IndexOutOfRange, "coface index out of range");
    std::vector<int> images;
    for (int k = 0; k < n; ++k) images.push_back(k < i ? k : k + 1);
    return SimplexMap(n, std::move(images));
}

SimplexMap SimplexMap::codegeneracy(int n, int i) {
    if (n < 0 || i < 0 || i > n)
        fail(ErrorCode::IndexOutOfRange, "codegeneracy index out of range");
    std::vector<int> images;
    for (int k = 0; k <= n + 1; ++k) images.push_back(k <= i ? k : k - 1);
    return SimplexMap(n, std::move(images));
}

SimplexMap SimplexMap::vertex(int n, int v) {
    if (v < 0 || v > n) fail(ErrorCode::IndexOutOfRange, "vertex out of range");
    return SimplexMap(n, {v});
}

SimplexMap SimplexMap::collapse(int n) {
    if (n < 0) fail(ErrorCode::InvalidInput, "negative degree");
    return SimplexMap(0, std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
}

bool SimplexMap::is_identity() const noexcept {
    if (domain() != codomain_) return false;
    for (int k = 0; k <= codomain_; ++k)
        if (images_[static_cast<std::size_t>(k)] != k) return false;
    return true;
}

bool SimplexMap::is_injective() const noexcept {
    return std::adjacent_find(images_.begin(), images_.end()) == images_.end();
}

bool SimplexMap::is_surjective() const noexcept {
    return images_.front() == 0 && images_.back() == codomain_ &&
           std::adjacent_find(images_.begin(), images_.end(),
                              [](int a, int b) { return b > a + 1; }) == images_.end();
}

std::string SimplexMap::to_string() const {
    std::ostringstream out;
    out << domain() << "->" << codomain_ << ":[";
    for (std::size_t k = 0; k < images_.size(); ++k) out << (k ? "," : "") << images_[k];
    out << "]";
    return out.str();
}

namespace {

int parse_int(std::string_view text, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        fail(ErrorCode::InvalidInput, "malformed simplex map '" + std::string(whole) + "'");
    return value;
}

}  // namespace

SimplexMap SimplexMap::parse(std::string_view text) {
    const auto arrow = text.find("->");
    const auto colon = text.find(':');
    if (arrow == std::string_view::npos || colon == std::string_view::npos || colon < arrow ||
        text.size() < colon + 3 || text[colon + 1] != '[' || text.back() != ']')
        fail(ErrorCode::InvalidInput, "malformed simplex map '" + std::string(text) + "'");
    const int n = parse_int(text.substr(0, arrow), text);
    const int m = parse_int(text.substr(arrow + 2, colon - arrow - 2), text);
    std::vector<int> images;
    std::string_view body = text.substr(colon + 2, text.size() - colon - 3);
    while (!body.empty()) {
        const auto comma = body.find(',');
        images.push_back(parse_int(body.substr(0, comma), text));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    if (static_cast<int>(images.size()) != n + 1)
        fail(ErrorCode::InvalidInput, "simplex map '" + std::string(text) + "' has wrong length");
    return SimplexMap(m, std::move(images));
}

std::strong_ordering operator<=>(const SimplexMap& a, const SimplexMap& b) {
    if (auto c = a.domain() <=> b.domain(); c != 0) return c;
    if (auto c = a.codomain_ <=> b.codomain_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(),
                                                  b.images_.begin(), b.images_.end());
}

SimplexMap compose(const SimplexMap& f, const SimplexMap& g) {
    if (f.codomain() != g.domain())
        fail(ErrorCode::DomainMismatch,
             "cannot compose " + f.to_string() + " with " + g.to_string());
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(f.domain()) + 1);
    for (int v : f.images()) images.push_back(g(v));
    return SimplexMap(g.codomain(), std::move(images));
}

SimplexMap se(int i, int n) {
    if (n < 1 || i < 0 || i >= n)
        fail(ErrorCode::IndexOutOfRange,
             "se(" + std::to_string(i) + "," + std::to_string(n) + ") out of range");
    return SimplexMap(n, {i, i + 1});
}

SimplexMap reverse_map(const SimplexMap& f) {
    const int n = f.domain();
    const int m = f.codomain();
    std::vector<int> images(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) images[static_cast<std::size_t>(k)] = m - f(n - k);
    return SimplexMap(m, std::move(images));
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(result);
}

}  // namespace

std::uint64_t count_maps(int n, int m) {
    if (n < 0 || m < 0) return 0;
    return binomial(static_cast<std::uint64_t>(n + m + 1), static_cast<std::uint64_t>(n + 1));
}

std::vector<SimplexMap> enumerate_maps(int n, int m, std::uint64_t budget) {
    if (n < 0 || m < 0) fail(ErrorCode::InvalidInput, "negative degree");
    const std::uint64_t count = count_maps(n, m);
    if (count > budget)
        fail(ErrorCode::BudgetExceeded, "Hom([" + std::to_string(n) + "],[" + std::to_string(m) +
                                            "]) has " + std::to_string(count) +
                                            " maps, over the budget of " + std::to_string(budget));
    std::vector<SimplexMap> out;
    out.reserve(count);
    std::vector<int> images(static_cast<std::size_t>(n) + 1, 0);
    while (true) {
        out.emplace_back(m, images);
        // next weakly increasing sequence in lexicographic order
        int pos = n;
        while (pos >= 0 && images[static_cast<std::size_t>(pos)] == m) --pos;
        if (pos < 0) break;
        const int value = images[static_cast<std::size_t>(pos)] + 1;
        for (int k = pos; k <= n; ++k) images[static_cast<std::size_t>(k)] = value;
    }
    return out;
}

std::uint64_t rank(const SimplexMap& f) {
    const int n = f.domain();
    const int m = f.codomain();
    std::uint64_t r = 0;
    int prev = 0;
    for (int p = 0; p <= n; ++p) {
        const int remaining = n - p;  // positions after p
        for (int u = prev; u < f(p); ++u)
            r += binomial(static_cast<std::uint64_t>(m - u + remaining),
                          static_cast<std::uint64_t>(remaining));
        prev = f(p);
    }
    return r;
}

SimplexMap Generator::as_map() const {
    return kind == Kind::Coface ? SimplexMap::coface(degree, index)
                                : SimplexMap::codegeneracy(degree, index);
}

std::string Generator::to_string() const {
    return std::string(kind == Kind::Coface ? "d" : "s") + std::to_string(index) + "^" +
           std::to_string(degree);
}

std::vector<Generator> factorize(const SimplexMap& f) {
    std::vector<Generator> word;
    const int n = f.domain();
    // epi part: collapse repeated positions from the top down
    std::vector<int> repeats;
    for (int p = 0; p < n; ++p)
        if (f(p) == f(p + 1)) repeats.push_back(p);
    int degree = n;
    for (auto it = repeats.rbegin(); it != repeats.rend(); ++it) {
        --degree;
        word.push_back({Generator::Kind::Codegeneracy, degree, *it});
    }
    // mono part: insert missing values from the bottom up
    std::vector<bool> hit(static_cast<std::size_t>(f.codomain()) + 1, false);
    for (int v : f.images()) hit[static_cast<std::size_t>(v)] = true;
    for (int v = 0; v <= f.codomain(); ++v) {
        if (hit[static_cast<std::size_t>(v)]) continue;
        ++degree;
        word.push_back({Generator::Kind::Coface, degree, v});
    }
    return word;
}

SimplexMap DeltaAutomorphism::apply(const SimplexMap& f) const {
    auto it = std::lower_bound(table.begin(), table.end(), f,
                               [](const auto& entry, const SimplexMap& key) { return entry.first < key; });
    if (it == table.end() || it->first != f)
        fail(ErrorCode::IndexOutOfRange, "map " + f.to_string() + " outside the truncation");
    return it->second;
}

bool DeltaAutomorphism::is_identity() const {
    return std::all_of(table.begin(), table.end(),
                       [](const auto& entry) { return entry.first == entry.second; });
}

namespace {

class AutomorphismSearch {
public:
    AutomorphismSearch(int max_degree, std::uint64_t budget)
        : max_degree_(max_degree), budget_(budget) {
        for (int n = 1; n <= max_degree; ++n) {
            for (int i = 0; i <= n; ++i) {
                add_generator({Generator::Kind::Coface, n, i});
                if (i < n) add_generator({Generator::Kind::Codegeneracy, n - 1, i});
            }
        }
        for (const auto& g : generators_) {
            const SimplexMap m = g.as_map();
            candidates_.push_back(enumerate_maps(m.domain(), m.codomain(), budget_.limit()));
        }
        build_relations();
    }

    std::vector<DeltaAutomorphism> run() {
        assignment_.assign(generators_.size(), SimplexMap());
        search(0);
        std::stable_partition(found_.begin(), found_.end(),
                              [](const DeltaAutomorphism& a) { return a.is_identity(); });
        return std::move(found_);
    }

private:
    struct Relation {
        std::size_t first;   // applied first
        std::size_t second;  // applied second
        std::vector<std::size_t> normal_form;
        int domain;
    };

    void add_generator(const Generator& g) {
        index_[key(g)] = generators_.size();
        generators_.push_back(g);
    }

    static std::tuple<int, int, int> key(const Generator& g) {
        return {g.kind == Generator::Kind::Coface ? 0 : 1, g.degree, g.index};
    }

    std::vector<std::size_t> word_indices(const std::vector<Generator>& word) const {
        std::vector<std::size_t> out;
        for (const auto& g : word) out.push_back(index_.at(key(g)));
        return out;
    }

    void build_relations() {
        relations_at_.resize(generators_.size());
        for (std::size_t a = 0; a < generators_.size(); ++a) {
            const SimplexMap ma = generators_[a].as_map();
            for (std::size_t b = 0; b < generators_.size(); ++b) {
                const SimplexMap mb = generators_[b].as_map();
                if (ma.codomain() != mb.domain()) continue;
                Relation rel{a, b, word_indices(factorize(compose(ma, mb))), ma.domain()};
                std::size_t last = std::max(a, b);
                for (auto g : rel.normal_form) last = std::max(last, g);
                relations_at_[last].push_back(std::move(rel));
            }
        }
    }

    SimplexMap evaluate(const std::vector<std::size_t>& word, int domain) const {
        SimplexMap result = SimplexMap::identity(domain);
        for (auto g : word) result = compose(result, assignment_[g]);
        return result;
    }

    bool consistent(std::size_t position) const {
        for (const auto& rel : relations_at_[position]) {
            const SimplexMap lhs = compose(assignment_[rel.first], assignment_[rel.second]);
            if (lhs != evaluate(rel.normal_form, rel.domain)) return false;
        }
        return true;
    }

    void search(std::size_t position) {
        if (position == generators_.size()) {
            finish();
            return;
        }
        for (const auto& candidate : candidates_[position]) {
            budget_.spend();
            assignment_[position] = candidate;
            if (consistent(position)) search(position + 1);
        }
    }

    void finish() {
        DeltaAutomorphism aut;
        aut.max_degree = max_degree_;
        for (int n = 0; n <= max_degree_; ++n) {
            for (int m = 0; m <= max_degree_; ++m) {
                std::vector<SimplexMap> images;
                for (const auto& f : enumerate_maps(n, m, budget_.limit())) {
                    SimplexMap image = evaluate(word_indices(factorize(f)), n);
                    images.push_back(image);
                    aut.table.emplace_back(f, std::move(image));
                }
                std::sort(images.begin(), images.end());
                if (std::adjacent_find(images.begin(), images.end()) != images.end()) return;
            }
        }
        std::sort(aut.table.begin(), aut.table.end());
        // functoriality on every composable pair
        for (const auto& [f, ff] : aut.table) {
            for (int p = 0; p <= max_degree_; ++p) {
                for (const auto& g : enumerate_maps(f.codomain(), p, budget_.limit())) {
                    budget_.spend();
                    if (aut.apply(compose(f, g)) != compose(ff, aut.apply(g))) return;
                }
            }
        }
        found_.push_back(std::move(aut));
    }

    int max_degree_;
    Budget budget_;
    std::vector<Generator> generators_;
    std::map<std::tuple<int, int, int>, std::size_t> index_;
    std::vector<std::vector<SimplexMap>> candidates_;
    std::vector<std::vector<Relation>> relations_at_;
    std::vector<SimplexMap> assignment_;
    std::vector<DeltaAutomorphism> found_;
};

}  // namespace

std::vector<DeltaAutomorphism> automorphisms(int max_degree, std::uint64_t budget) {
    if (max_degree < 0) fail(ErrorCode::InvalidInput, "negative degree");
    if (max_degree > kMaxAutomorphismDegree)
        fail(ErrorCode::BudgetExceeded, "automorphism search is capped at degree " +
                                            std::to_string(kMaxAutomorphismDegree));
    if (max_degree == 0) {
        DeltaAutomorphism id;
        id.table.emplace_back(SimplexMap::identity(0), SimplexMap::identity(0));
        return {id};
    }
    return AutomorphismSearch(max_degree, budget).run();
}

}  // namespace segalkit
