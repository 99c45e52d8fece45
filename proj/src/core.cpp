#include "grhc/core.hpp"

#include <algorithm>
#include <array>

#include "grhc/error.hpp"

namespace grhc {

namespace {

constexpr unsigned kTableN = 128;
constexpr unsigned kTableK = 9;

using BinomialTable = std::array<std::array<std::uint64_t, kTableK>, kTableN>;

const BinomialTable& small_binomials() {
    static const BinomialTable table = [] {
        BinomialTable t{};
        for (unsigned n = 0; n < kTableN; ++n) {
            t[n][0] = 1;
            for (unsigned k = 1; k < kTableK; ++k) t[n][k] = n == 0 ? 0 : t[n - 1][k - 1] + t[n - 1][k];
        }
        return t;
    }();
    return table;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (n < kTableN && k < kTableK) return small_binomials()[n][k];
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > UINT64_MAX) throw CapacityError("binomial coefficient C(" + std::to_string(n) + "," + std::to_string(k) + ") overflows 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

Rank rank_subset(std::span<const Vertex> subset, unsigned r) {
    if (subset.size() != r) throw InvalidSubsetError("subset has " + std::to_string(subset.size()) + " elements, expected " + std::to_string(r));
    Rank rank = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i > 0 && subset[i] <= subset[i - 1]) throw InvalidSubsetError("subset is not strictly increasing");
        rank += binomial(subset[i], i + 1);
    }
    return rank;
}

void unrank_subset(Rank rank, std::span<Vertex> out) {
    // Greedy: the largest element a_k is the biggest value with C(a_k, k) <= rank.
    for (std::size_t k = out.size(); k >= 1; --k) {
        std::uint64_t a = k - 1;
        while (binomial(a + 1, k) <= rank) ++a;
        out[k - 1] = static_cast<Vertex>(a);
        rank -= binomial(a, k);
    }
}

std::vector<Vertex> unrank_subset(Rank rank, unsigned r) {
    std::vector<Vertex> out(r);
    unrank_subset(rank, out);
    return out;
}

bool next_colex_subset(std::span<Vertex> subset, unsigned n) {
    const std::size_t k = subset.size();
    if (k == 0) return false;
    for (std::size_t i = 0; i < k; ++i) {
        const Vertex limit = i + 1 < k ? subset[i + 1] : n;
        if (subset[i] + 1 < limit) {
            ++subset[i];
            for (std::size_t j = 0; j < i; ++j) subset[j] = static_cast<Vertex>(j);
            return true;
        }
    }
    return false;
}

ColexSubsets::iterator::iterator(unsigned n, unsigned k) : n_(n), current_(k), done_(k > n) {
    for (unsigned i = 0; i < k; ++i) current_[i] = i;
}

ColexSubsets::iterator& ColexSubsets::iterator::operator++() {
    if (!done_ && !next_colex_subset(current_, n_)) done_ = true;
    return *this;
}

void TargetPattern::validate(unsigned r) const {
    if (kind == PatternKind::Complete && order < r)
        throw InvalidPatternError("K" + std::to_string(order) + " has order below the uniformity " + std::to_string(r));
    if (kind == PatternKind::MinusOne && order <= r)
        throw InvalidPatternError("K" + std::to_string(order) + "-e needs order above the uniformity " + std::to_string(r));
}

std::uint64_t TargetPattern::edge_count(unsigned r) const {
    return binomial(order, r) - (kind == PatternKind::MinusOne ? 1 : 0);
}

std::string TargetPattern::to_string() const {
    return "K" + std::to_string(order) + (kind == PatternKind::MinusOne ? "-e" : "");
}

bool pattern_contains(const TargetPattern& big, const TargetPattern& small, unsigned r) {
    if (big == small) return true;
    if (small.edge_count(r) == 0) return true;
    if (small.kind == PatternKind::Complete && big.kind == PatternKind::MinusOne) return big.order > small.order;
    return big.order >= small.order;
}

ColoredCompleteHypergraph::ColoredCompleteHypergraph(unsigned order, unsigned uniformity, Color color_count, std::vector<Color> colors)
    : order_(order), uniformity_(uniformity), color_count_(color_count), colors_(std::move(colors)) {
    if (uniformity_ < 2) throw InvalidColoringError("uniformity must be at least 2");
    if (order_ < 1) throw InvalidColoringError("order must be at least 1");
    if (color_count_ < 1) throw InvalidColoringError("color count must be at least 1");
    const auto expected = binomial(order_, uniformity_);
    if (colors_.size() != expected)
        throw InvalidColoringError("coloring has " + std::to_string(colors_.size()) + " entries, expected C(" + std::to_string(order_) + "," +
                                   std::to_string(uniformity_) + ") = " + std::to_string(expected));
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        if (colors_[i] < 1 || colors_[i] > color_count_)
            throw InvalidColoringError("hyperedge " + std::to_string(i) + " has color " + std::to_string(colors_[i]) + " outside 1.." +
                                       std::to_string(color_count_));
    }
}

ColoredCompleteHypergraph ColoredCompleteHypergraph::monochromatic(unsigned order, unsigned uniformity, Color color_count, Color color) {
    return ColoredCompleteHypergraph(order, uniformity, color_count, std::vector<Color>(binomial(order, uniformity), color));
}

std::vector<std::uint64_t> ColoredCompleteHypergraph::color_histogram() const {
    std::vector<std::uint64_t> hist(color_count_ + 1u, 0);
    for (Color c : colors_) ++hist[c];
    return hist;
}

Hypergraph::Hypergraph(unsigned order, unsigned uniformity, std::vector<Rank> edge_ranks)
    : order_(order), uniformity_(uniformity), edges_(std::move(edge_ranks)) {
    if (uniformity_ < 2) throw InvalidSubsetError("uniformity must be at least 2");
    if (order_ < 1) throw InvalidSubsetError("order must be at least 1");
    const auto total = binomial(order_, uniformity_);
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    if (!edges_.empty() && edges_.back() >= total)
        throw InvalidSubsetError("hyperedge rank " + std::to_string(edges_.back()) + " exceeds C(n,r) - 1");
    membership_.assign(total, false);
    for (Rank e : edges_) membership_[e] = true;
}

Hypergraph Hypergraph::complete(unsigned order, unsigned uniformity) {
    std::vector<Rank> ranks(binomial(order, uniformity));
    for (Rank i = 0; i < ranks.size(); ++i) ranks[i] = i;
    return Hypergraph(order, uniformity, std::move(ranks));
}

Hypergraph Hypergraph::from_subsets(unsigned order, unsigned uniformity, const std::vector<std::vector<Vertex>>& edges) {
    std::vector<Rank> ranks;
    ranks.reserve(edges.size());
    for (auto e : edges) {
        std::sort(e.begin(), e.end());
        if (!e.empty() && e.back() >= order) throw InvalidSubsetError("hyperedge vertex out of range");
        ranks.push_back(rank_subset(e, uniformity));
    }
    return Hypergraph(order, uniformity, std::move(ranks));
}

Hypergraph Hypergraph::from_pattern(const TargetPattern& pattern, unsigned uniformity) {
    pattern.validate(uniformity);
    auto h = complete(pattern.order, uniformity);
    if (pattern.kind == PatternKind::Complete) return h;
    auto ranks = h.edges();
    ranks.pop_back();
    return Hypergraph(pattern.order, uniformity, std::move(ranks));
}

Hypergraph Hypergraph::color_class(const ColoredCompleteHypergraph& coloring, Color color) {
    std::vector<Rank> ranks;
    for (Rank i = 0; i < coloring.edge_count(); ++i)
        if (coloring.color_at(i) == color) ranks.push_back(i);
    return Hypergraph(coloring.order(), coloring.uniformity(), std::move(ranks));
}

bool Hypergraph::contains(std::span<const Vertex> subset) const {
    if (subset.size() != uniformity_ || subset.back() >= order_) return false;
    return contains(rank_subset(subset, uniformity_));
}

Hypergraph Hypergraph::complement() const {
    std::vector<Rank> ranks;
    ranks.reserve(membership_.size() - edges_.size());
    for (Rank i = 0; i < membership_.size(); ++i)
        if (!membership_[i]) ranks.push_back(i);
    return Hypergraph(order_, uniformity_, std::move(ranks));
}

}  // namespace grhc
