#pragma once

// Exact combinatorial primitives shared by every other module: colex ranking
// of r-subsets, subset enumeration, and the two hypergraph value types.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace grhc {

using Vertex = std::uint32_t;
using Color = std::uint16_t;
using Rank = std::uint64_t;

/// C(n, k), exact. Throws CapacityError if the value does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Colex rank of a strictly increasing subset: sum of C(a_i, i) over 1-based i.
/// Throws InvalidSubsetError when the subset is not strictly increasing or
/// its length differs from r.
Rank rank_subset(std::span<const Vertex> subset, unsigned r);

/// Inverse of rank_subset by greedy decomposition in the combinatorial number
/// system. The caller is responsible for bounding rank against its own n.
std::vector<Vertex> unrank_subset(Rank rank, unsigned r);
void unrank_subset(Rank rank, std::span<Vertex> out);

/// Forward range over all k-subsets of {0..n-1} in colex order; the i-th
/// element has colex rank i. Yields nothing when k > n.
class ColexSubsets {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = std::vector<Vertex>;
        using difference_type = std::ptrdiff_t;
        using pointer = const value_type*;
        using reference = const value_type&;

        iterator() = default;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            iterator copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const iterator& other) const { return done_ == other.done_ && (done_ || current_ == other.current_); }

    private:
        friend class ColexSubsets;
        iterator(unsigned n, unsigned k);

        unsigned n_ = 0;
        std::vector<Vertex> current_;
        bool done_ = true;
    };

    ColexSubsets(unsigned n, unsigned k) : n_(n), k_(k) {}

    iterator begin() const { return iterator(n_, k_); }
    iterator end() const { return iterator(); }
    std::uint64_t size() const { return k_ > n_ ? 0 : binomial(n_, k_); }

private:
    unsigned n_;
    unsigned k_;
};

inline ColexSubsets enumerate_subsets(unsigned n, unsigned k) { return ColexSubsets(n, k); }

/// Advance a strictly increasing k-subset of {0..n-1} to its colex successor.
/// Returns false (leaving the subset unspecified) after the last one.
bool next_colex_subset(std::span<Vertex> subset, unsigned n);

enum class PatternKind : std::uint8_t { Complete, MinusOne };

/// K_q^{(r)} or K_q^{(r)} - e. The uniformity is contextual; validate() checks
/// a pattern against a particular r.
struct TargetPattern {
    unsigned order = 0;
    PatternKind kind = PatternKind::Complete;

    /// Throws InvalidPatternError unless q >= r (Complete) or q > r (MinusOne).
    void validate(unsigned r) const;

    /// Number of hyperedges of the pattern in uniformity r.
    std::uint64_t edge_count(unsigned r) const;

    /// Minimum number of same-colored hyperedges inside a q-subset of a
    /// complete host that realizes this pattern.
    std::uint64_t required_edges(unsigned r) const { return edge_count(r); }

    std::string to_string() const;

    auto operator<=>(const TargetPattern& other) const {
        if (auto c = order <=> other.order; c != 0) return c;
        // K_q - e sorts before K_q: it is the smaller hypergraph.
        auto rank = [](PatternKind k) { return k == PatternKind::MinusOne ? 0 : 1; };
        return rank(kind) <=> rank(other.kind);
    }
    bool operator==(const TargetPattern&) const = default;
};

/// True when `small` is isomorphic to a subhypergraph of `big` (uniformity r).
bool pattern_contains(const TargetPattern& big, const TargetPattern& small, unsigned r);

/// A t-coloring of all C(n, r) hyperedges of K_n^{(r)}, stored in colex order
/// with colors 1..t.
class ColoredCompleteHypergraph {
public:
    /// Throws InvalidColoringError on a wrong-length array or out-of-range color.
    ColoredCompleteHypergraph(unsigned order, unsigned uniformity, Color color_count, std::vector<Color> colors);

    static ColoredCompleteHypergraph monochromatic(unsigned order, unsigned uniformity, Color color_count, Color color = 1);

    unsigned order() const { return order_; }
    unsigned uniformity() const { return uniformity_; }
    Color color_count() const { return color_count_; }
    std::uint64_t edge_count() const { return colors_.size(); }
    std::span<const Color> colors() const { return colors_; }

    Color color_at(Rank rank) const { return colors_[rank]; }
    /// Color of a strictly increasing r-subset.
    Color color_of(std::span<const Vertex> subset) const { return colors_[rank_subset(subset, uniformity_)]; }

    /// Per-color hyperedge counts, index 0 unused.
    std::vector<std::uint64_t> color_histogram() const;

    bool operator==(const ColoredCompleteHypergraph&) const = default;

private:
    unsigned order_;
    unsigned uniformity_;
    Color color_count_;
    std::vector<Color> colors_;
};

/// An r-uniform hypergraph on {0..n-1} with hyperedges held as colex ranks.
class Hypergraph {
public:
    /// Duplicated ranks collapse; a rank >= C(n, r) throws InvalidSubsetError.
    Hypergraph(unsigned order, unsigned uniformity, std::vector<Rank> edge_ranks);

    static Hypergraph complete(unsigned order, unsigned uniformity);
    static Hypergraph empty(unsigned order, unsigned uniformity) { return Hypergraph(order, uniformity, {}); }
    static Hypergraph from_subsets(unsigned order, unsigned uniformity, const std::vector<std::vector<Vertex>>& edges);
    /// The pattern realized on vertices 0..q-1; for MinusOne the colex-last
    /// hyperedge is the one removed.
    static Hypergraph from_pattern(const TargetPattern& pattern, unsigned uniformity);
    /// Hyperedges of one color class of a coloring.
    static Hypergraph color_class(const ColoredCompleteHypergraph& coloring, Color color);

    unsigned order() const { return order_; }
    unsigned uniformity() const { return uniformity_; }
    std::uint64_t edge_count() const { return edges_.size(); }
    /// Sorted ascending.
    const std::vector<Rank>& edges() const { return edges_; }

    bool contains(Rank rank) const { return rank < membership_.size() && membership_[rank]; }
    bool contains(std::span<const Vertex> subset) const;

    Hypergraph complement() const;

    bool operator==(const Hypergraph& other) const {
        return order_ == other.order_ && uniformity_ == other.uniformity_ && edges_ == other.edges_;
    }

private:
    unsigned order_;
    unsigned uniformity_;
    std::vector<Rank> edges_;
    std::vector<bool> membership_;
};

}  // namespace grhc
