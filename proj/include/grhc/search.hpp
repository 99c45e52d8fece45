#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "grhc/certio.hpp"
#include "grhc/core.hpp"

namespace grhc {

// Hard cap on C(n, r) for the exhaustive engine.
inline constexpr std::uint64_t kSearchMaxEdges = 64;

struct SearchProblem {
    unsigned order = 0;
    unsigned uniformity = 3;
    Color color_count = 2;
    AvoidList avoid;
    bool gallai_mode = false;
    std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
    // 1 = single-threaded reference engine with deterministic node counts.
    unsigned threads = 1;
    // Number of leading hyperedges fixed per shard in threaded mode.
    unsigned prefix_depth = 3;
};

enum class SearchStatus { Found, ExhaustedNone, BudgetExceeded };

std::string to_string(SearchStatus status);

struct SearchOutcome {
    SearchStatus status = SearchStatus::ExhaustedNone;
    std::optional<ColoredCompleteHypergraph> coloring;
    std::uint64_t nodes_visited = 0;
};

/// Depth-first search over hyperedges in colex order for a coloring with no
/// monochromatic avoid[i] in color i+1 (and no rainbow simplex in Gallai
/// mode). Colors with identical avoid patterns are opened in first-use order.
/// Throws CapacityError when C(n, r) exceeds kSearchMaxEdges and ConfigError
/// on a malformed problem.
SearchOutcome search_witness(const SearchProblem& problem);

struct ExactStep {
    unsigned order = 0;
    SearchStatus status = SearchStatus::ExhaustedNone;
    std::uint64_t nodes_visited = 0;
};

struct ExactResult {
    // Set when the search determined the number.
    std::optional<unsigned> value;
    // Witness on value - 1 vertices (absent when value - 1 < r).
    std::optional<ColoredCompleteHypergraph> witness;
    std::vector<ExactStep> steps;
    // Why the value is indeterminate.
    std::string reason;

    bool determined() const { return value.has_value(); }
};

/// Least n <= n_cap at which no witness exists, scanning upward from n = r.
/// Capacity and budget failures make the result indeterminate.
ExactResult exact_number(unsigned uniformity, const AvoidList& avoid, unsigned n_cap, bool gallai_mode = false,
                         std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max(), unsigned threads = 1);

}  // namespace grhc
