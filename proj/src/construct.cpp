#include "grhc/construct.hpp"

#include <algorithm>
#include <array>

#include "grhc/error.hpp"
#include "grhc/verify.hpp"

namespace grhc {

ColoredCompleteHypergraph build_coloring(unsigned order, unsigned uniformity, Color color_count,
                                         const std::function<Color(std::span<const Vertex>)>& rule) {
    std::vector<Color> colors;
    colors.reserve(binomial(order, uniformity));
    if (uniformity <= order) {
        std::vector<Vertex> subset(uniformity);
        for (unsigned i = 0; i < uniformity; ++i) subset[i] = i;
        do {
            colors.push_back(rule(subset));
        } while (next_colex_subset(subset, order));
    }
    return ColoredCompleteHypergraph(order, uniformity, color_count, std::move(colors));
}

GraphColoring pentagon_coloring() {
    return build_coloring(5, 2, 2, [](std::span<const Vertex> e) -> Color {
        const auto gap = e[1] - e[0];
        return (gap == 1 || gap == 4) ? 1 : 2;
    });
}

ColoredCompleteHypergraph lift_graph(const GraphColoring& graph) {
    if (graph.uniformity() != 2) throw ConfigError("lift_graph expects a graph coloring (uniformity 2)");
    if (auto tri = find_rainbow_simplex(graph))
        throw LiftUndefinedError("rainbow triangle {" + std::to_string((*tri)[0]) + "," + std::to_string((*tri)[1]) + "," +
                                 std::to_string((*tri)[2]) + "} has no lift");
    return build_coloring(graph.order(), 3, graph.color_count(), [&](std::span<const Vertex> t) -> Color {
        const std::array<Vertex, 2> xy{t[0], t[1]}, xz{t[0], t[2]}, yz{t[1], t[2]};
        const Color a = graph.color_of(xy), b = graph.color_of(xz), c = graph.color_of(yz);
        // Three equal edges: that color has 3 edges. Otherwise the odd edge's
        // color is the only one with exactly 1.
        if (a == b) return c == a ? a : c;
        return a == c ? b : a;
    });
}

GraphColoring gallai_substitute(const GraphColoring& outer, const GraphColoring& inner, const std::optional<std::vector<Color>>& inner_color_map) {
    if (outer.uniformity() != 2 || inner.uniformity() != 2) throw ConfigError("gallai_substitute expects graph colorings");
    if (find_rainbow_simplex(outer) || find_rainbow_simplex(inner)) throw HypothesisError("substitution inputs must be rainbow-triangle-free");
    std::vector<Color> map(inner.color_count());
    unsigned total = outer.color_count();
    if (inner_color_map) {
        if (inner_color_map->size() != inner.color_count()) throw ConfigError("inner color map must have one entry per inner color");
        map = *inner_color_map;
        for (Color c : map) {
            if (c < 1) throw ConfigError("inner color map entries must be positive");
            total = std::max<unsigned>(total, c);
        }
    } else {
        for (Color c = 1; c <= inner.color_count(); ++c) map[c - 1] = static_cast<Color>(outer.color_count() + c);
        total += inner.color_count();
    }
    if (total > UINT16_MAX) throw CapacityError("too many colors");
    const unsigned b = inner.order();
    return build_coloring(outer.order() * b, 2, static_cast<Color>(total), [&](std::span<const Vertex> e) -> Color {
        const std::array<Vertex, 2> a{e[0] / b, e[1] / b};
        if (a[0] != a[1]) return outer.color_of(a);
        const std::array<Vertex, 2> in{e[0] % b, e[1] % b};
        return map[inner.color_of(in) - 1];
    });
}

ColoredCompleteHypergraph burr_blowup(const ColoredCompleteHypergraph& base, const Hypergraph& target) {
    if (target.uniformity() != base.uniformity()) throw ConfigError("blow-up target must share the base uniformity");
    return burr_blowup(base, chromatic_data(target));
}

ColoredCompleteHypergraph burr_blowup(const ColoredCompleteHypergraph& base, const ChromaticData& target) {
    const unsigned block = base.order();
    const unsigned p = block + 1;
    if (target.s > p)
        throw HypothesisError("blow-up needs p >= s(H_t); base certifies p = " + std::to_string(p) + " but s = " + std::to_string(target.s));
    const unsigned full = target.chi - 1;
    const unsigned order = full * block + target.s - 1;
    if (order == 0) throw HypothesisError("blow-up of this target has no vertices");
    if (base.color_count() == UINT16_MAX) throw CapacityError("too many colors");
    const Color cross = static_cast<Color>(base.color_count() + 1);
    const unsigned r = base.uniformity();
    std::vector<Vertex> inner(r);
    return build_coloring(order, r, cross, [&](std::span<const Vertex> e) -> Color {
        const unsigned first = std::min(e.front() / block, full);
        const unsigned last = std::min(e.back() / block, full);
        if (first != last) return cross;
        for (unsigned i = 0; i < r; ++i) inner[i] = e[i] - first * block;
        return base.color_of(inner);
    });
}

Hypergraph lex_product(const Hypergraph& h1, const Hypergraph& h2) {
    const unsigned r = h1.uniformity();
    if (h2.uniformity() != r) throw ConfigError("lexicographic product needs equal uniformities");
    if (r < 3) throw ConfigError("lexicographic product is defined here for uniformity >= 3");
    const unsigned b = h2.order();
    const unsigned n = h1.order() * b;
    std::vector<Rank> ranks;
    std::vector<Vertex> a(r), in(r);
    Rank rank = 0;
    for (const auto& e : enumerate_subsets(n, r)) {
        for (unsigned i = 0; i < r; ++i) {
            a[i] = e[i] / b;
            in[i] = e[i] % b;
        }
        const bool same = a.front() == a.back();
        const bool distinct = std::adjacent_find(a.begin(), a.end()) == a.end();
        if ((distinct && h1.contains(a)) || (same && h2.contains(in))) ranks.push_back(rank);
        ++rank;
    }
    return Hypergraph(n, r, std::move(ranks));
}

ColoredCompleteHypergraph lex_compose(const ColoredCompleteHypergraph& c1, const ColoredCompleteHypergraph& c2) {
    const unsigned r = c1.uniformity();
    if (c2.uniformity() != r || r < 3) throw ConfigError("lex_compose needs equal uniformities >= 3");
    if (c1.color_count() != c2.color_count()) throw ConfigError("lex_compose needs equal color counts");
    const Color t = c1.color_count();
    const unsigned b = c2.order();
    std::vector<Vertex> a(r), in(r);
    return build_coloring(c1.order() * b, r, t, [&](std::span<const Vertex> e) -> Color {
        for (unsigned i = 0; i < r; ++i) {
            a[i] = e[i] / b;
            in[i] = e[i] % b;
        }
        if (a.front() == a.back()) return c2.color_of(in);
        if (std::adjacent_find(a.begin(), a.end()) == a.end()) return c1.color_of(a);
        return t;
    });
}

namespace {

// Distinct block indices of a sorted hyperedge with their multiplicities.
struct BlockSplit {
    std::array<Vertex, 4> block{};
    std::array<unsigned, 4> count{};
    unsigned parts = 0;
};

BlockSplit split_blocks(std::span<const Vertex> e, unsigned block_order) {
    BlockSplit s;
    for (Vertex v : e) {
        const Vertex j = v / block_order;
        if (s.parts == 0 || s.block[s.parts - 1] != j) s.block[s.parts++] = j;
        ++s.count[s.parts - 1];
    }
    return s;
}

Color square_color_limit(const ColoredCompleteHypergraph& base) {
    if (base.color_count() > UINT16_MAX - 2) throw CapacityError("too many colors");
    return static_cast<Color>(base.color_count() + 2);
}

}  // namespace

SquareResult square3(const ColoredCompleteHypergraph& base) {
    if (base.uniformity() != 3) throw ConfigError("square3 expects a 3-uniform base");
    const unsigned m1 = base.order();
    const Color t = base.color_count();
    std::array<Vertex, 3> labels{};
    auto coloring = build_coloring(m1 * m1, 3, square_color_limit(base), [&](std::span<const Vertex> e) -> Color {
        const auto s = split_blocks(e, m1);
        if (s.parts == 3) return base.color_of(std::span<const Vertex>(s.block.data(), 3));
        if (s.parts == 1) {
            for (unsigned i = 0; i < 3; ++i) labels[i] = e[i] % m1;
            return base.color_of(labels);
        }
        // Blocks are ascending, so the pair block precedes the single one iff
        // the first block holds two vertices.
        return s.count[0] == 2 ? static_cast<Color>(t + 1) : static_cast<Color>(t + 2);
    });
    return SquareResult{std::move(coloring), m1 < 3};
}

SquareResult square4(const ColoredCompleteHypergraph& base) {
    if (base.uniformity() != 4) throw ConfigError("square4 expects a 4-uniform base");
    const unsigned m1 = base.order();
    const Color t = base.color_count();
    std::array<Vertex, 4> labels{};
    auto coloring = build_coloring(m1 * m1, 4, square_color_limit(base), [&](std::span<const Vertex> e) -> Color {
        const auto s = split_blocks(e, m1);
        switch (s.parts) {
            case 4:
                return base.color_of(std::span<const Vertex>(s.block.data(), 4));
            case 1:
                for (unsigned i = 0; i < 4; ++i) labels[i] = e[i] % m1;
                return base.color_of(labels);
            case 2:
                return (s.count[0] == 2) ? Color{1} : static_cast<Color>(t + 1);
            default:
                return static_cast<Color>(t + 2);
        }
    });
    return SquareResult{std::move(coloring), m1 < 4};
}

}  // namespace grhc
