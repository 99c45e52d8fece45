#pragma once

// Witness constructions. Product-style outputs pack the pair (block, inner)
// into the vertex id block * B + inner, where B is the order of the inner
// factor (the base order for the square constructions).

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "grhc/chromatic.hpp"
#include "grhc/core.hpp"

namespace grhc {

/// A 2-uniform coloring, i.e. an edge coloring of K_n.
using GraphColoring = ColoredCompleteHypergraph;

/// Fills every r-subset of {0..n-1}, in colex order, with rule(subset).
ColoredCompleteHypergraph build_coloring(unsigned order, unsigned uniformity, Color color_count,
                                         const std::function<Color(std::span<const Vertex>)>& rule);

/// K_5 with the 5-cycle in color 1 and its complement (another 5-cycle) in color 2.
GraphColoring pentagon_coloring();

/// Each triple takes the unique color whose class induces exactly one or
/// exactly three edges on it. Throws LiftUndefinedError on a rainbow triangle.
ColoredCompleteHypergraph lift_graph(const GraphColoring& graph);

/// Vertex (a, b) for a in outer, b in inner; an edge between different outer
/// vertices takes the outer color, otherwise the inner color. Inner colors are
/// renumbered above the outer palette unless `inner_color_map` (indexed by
/// inner color - 1) says otherwise.
GraphColoring gallai_substitute(const GraphColoring& outer, const GraphColoring& inner,
                                const std::optional<std::vector<Color>>& inner_color_map = std::nullopt);

/// chi(target) - 1 full copies of the base plus one copy of its first
/// s(target) - 1 vertices; hyperedges meeting two or more copies get the new
/// color t. The base on p - 1 vertices must satisfy p >= s(target), otherwise
/// HypothesisError.
ColoredCompleteHypergraph burr_blowup(const ColoredCompleteHypergraph& base, const Hypergraph& target);
ColoredCompleteHypergraph burr_blowup(const ColoredCompleteHypergraph& base, const ChromaticData& target);

/// H1[H2] on n1 * n2 vertices.
Hypergraph lex_product(const Hypergraph& h1, const Hypergraph& h2);

/// Colors by c1 when the outer coordinates are distinct, by c2 when they
/// coincide, and with the last color t otherwise.
ColoredCompleteHypergraph lex_compose(const ColoredCompleteHypergraph& c1, const ColoredCompleteHypergraph& c2);

struct SquareResult {
    ColoredCompleteHypergraph coloring;
    // Set when the base is too small for any hyperedge to meet r distinct
    // blocks, so the base coloring contributes nothing across blocks.
    bool degenerate = false;
};

/// (m-1)^2 vertices in m-1 blocks, each a copy of the 3-uniform base on m-1
/// vertices. Cross-block triples: three blocks -> base color of the block
/// triple; two in block j and one in block k -> t+1 if j < k, t+2 if j > k.
SquareResult square3(const ColoredCompleteHypergraph& base);

/// 4-uniform analogue: four blocks -> base color of the block quadruple;
/// 2+2 -> color 1; 3+1 -> t+1; 2+1+1 -> t+2.
SquareResult square4(const ColoredCompleteHypergraph& base);

}  // namespace grhc
