#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grhc/certio.hpp"
#include "grhc/core.hpp"

namespace grhc {

using VertexSet = std::vector<Vertex>;

struct ScanOptions {
    // Worker threads for subset scans. Results are independent of this value.
    unsigned threads = 1;
};

struct WitnessReport {
    unsigned order = 0;
    unsigned uniformity = 0;
    AvoidList avoid;
    bool gallai_mode = true;
    bool gallai_ok = true;
    std::optional<VertexSet> rainbow_witness;
    // Entry i covers color i + 1.
    std::vector<std::optional<VertexSet>> per_color_findings;
    // "gr(H_1,...,H_t;r) >= n+1", or "R(...)" with Gallai checking off.
    std::optional<std::string> certified;

    bool is_certified() const { return certified.has_value(); }
};

/// Colex-least (r+1)-subset whose r+1 hyperedges carry pairwise distinct colors.
std::optional<VertexSet> find_rainbow_simplex(const ColoredCompleteHypergraph& coloring, ScanOptions options = {});

/// Colex-least q-subset realizing the pattern monochromatically in `color`:
/// all C(q,r) hyperedges for K_q, at least C(q,r)-1 for K_q-e.
std::optional<VertexSet> find_mono_target(const ColoredCompleteHypergraph& coloring, Color color, const TargetPattern& pattern,
                                          ScanOptions options = {});

/// Independent recounts used to re-validate reported witnesses.
bool exhibits_rainbow_simplex(const ColoredCompleteHypergraph& coloring, const VertexSet& subset);
bool exhibits_mono_target(const ColoredCompleteHypergraph& coloring, Color color, const TargetPattern& pattern, const VertexSet& subset);

/// Exact clique number by branch and bound. Sets smaller than r are cliques
/// vacuously, so the result is at least min(n, r-1).
unsigned clique_number(const Hypergraph& hypergraph);

/// Throws ConfigError when avoid.size() differs from the color count.
WitnessReport verify_witness(const ColoredCompleteHypergraph& coloring, const AvoidList& avoid, bool gallai_mode, ScanOptions options = {});

/// "gr(K4-e,K4;3) >= 8" style rendering.
std::string bound_statement(bool gallai, const AvoidList& avoid, unsigned uniformity, std::uint64_t value);

}  // namespace grhc
