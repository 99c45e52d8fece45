#include "grhc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "grhc/error.hpp"

namespace grhc {

namespace {

// Calls fn(color) for every r-subset {w} ∪ T with T an (r-1)-subset of the
// chosen vertices. `chosen` is in descending order and every entry exceeds w.
// Stops early and returns false as soon as fn returns false.
template <class Fn>
bool for_each_new_edge(const ColoredCompleteHypergraph& c, const VertexSet& chosen, Vertex w, Fn&& fn) {
    const unsigned r = c.uniformity();
    const std::size_t d = chosen.size();
    const unsigned m = r - 1;
    if (d < m) return true;
    auto asc = [&](std::size_t i) { return chosen[d - 1 - i]; };
    std::vector<std::size_t> idx(m);
    for (unsigned j = 0; j < m; ++j) idx[j] = j;
    while (true) {
        Rank rank = w;
        for (unsigned j = 0; j < m; ++j) rank += binomial(asc(idx[j]), j + 2);
        if (!fn(c.color_at(rank))) return false;
        // next combination of m indices out of d, in colex order
        unsigned j = 0;
        while (j < m && idx[j] + 1 == (j + 1 < m ? idx[j + 1] : d)) ++j;
        if (j == m) return true;
        ++idx[j];
        for (unsigned i = 0; i < j; ++i) idx[i] = i;
    }
}

// Colex-ordered DFS over q-subsets: the largest vertex is fixed first, then
// each further vertex is chosen ascending below the previous one, so leaves
// are reached in colex order. `extend` returns the successor state or nullopt
// to prune.
template <class State, class Extend>
bool colex_dfs(unsigned q, VertexSet& chosen, const State& state, const Extend& extend) {
    const std::size_t d = chosen.size();
    if (d == q) return true;
    const Vertex lo = static_cast<Vertex>(q - 1 - d);
    const Vertex hi = chosen.back();
    for (Vertex w = lo; w < hi; ++w) {
        if (auto next = extend(chosen, w, state)) {
            chosen.push_back(w);
            if (colex_dfs(q, chosen, *next, extend)) return true;
            chosen.pop_back();
        }
    }
    return false;
}

template <class State, class Extend>
std::optional<VertexSet> scan_from_top(unsigned q, Vertex top, const State& initial, const Extend& extend) {
    VertexSet chosen;
    auto start = extend(chosen, top, initial);
    if (!start) return std::nullopt;
    chosen.push_back(top);
    if (!colex_dfs(q, chosen, *start, extend)) return std::nullopt;
    std::reverse(chosen.begin(), chosen.end());
    return chosen;
}

// Splits the scan by largest vertex. Every top below the best hit is scanned
// to completion, so the result is the colex-least hit for any thread count.
template <class State, class Extend>
std::optional<VertexSet> colex_scan(unsigned n, unsigned q, const State& initial, const Extend& extend, unsigned threads) {
    if (q == 0 || q > n) return std::nullopt;
    const unsigned tops = n - (q - 1);
    if (threads <= 1 || tops < 2) {
        for (Vertex top = q - 1; top < n; ++top)
            if (auto hit = scan_from_top(q, top, initial, extend)) return hit;
        return std::nullopt;
    }
    std::vector<std::optional<VertexSet>> hits(tops);
    std::atomic<unsigned> next{0};
    std::atomic<unsigned> best{std::numeric_limits<unsigned>::max()};
    auto worker = [&] {
        for (unsigned i = next.fetch_add(1); i < tops; i = next.fetch_add(1)) {
            if (i > best.load()) continue;
            if (auto hit = scan_from_top(q, static_cast<Vertex>(q - 1 + i), initial, extend)) {
                hits[i] = std::move(hit);
                unsigned cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min(threads, tops); ++t) pool.emplace_back(worker);
    pool.clear();
    for (auto& hit : hits)
        if (hit) return hit;
    return std::nullopt;
}

struct ColorSet {
    std::vector<Color> colors;
};

}  // namespace

std::optional<VertexSet> find_rainbow_simplex(const ColoredCompleteHypergraph& coloring, ScanOptions options) {
    const unsigned r = coloring.uniformity();
    if (coloring.color_count() <= r) return std::nullopt;
    // Every hyperedge inside the partial set must already carry a distinct color.
    auto extend = [&](const VertexSet& chosen, Vertex w, const ColorSet& state) -> std::optional<ColorSet> {
        ColorSet next = state;
        bool ok = for_each_new_edge(coloring, chosen, w, [&](Color c) {
            if (std::find(next.colors.begin(), next.colors.end(), c) != next.colors.end()) return false;
            next.colors.push_back(c);
            return true;
        });
        if (!ok) return std::nullopt;
        return next;
    };
    return colex_scan(coloring.order(), r + 1, ColorSet{}, extend, options.threads);
}

std::optional<VertexSet> find_mono_target(const ColoredCompleteHypergraph& coloring, Color color, const TargetPattern& pattern,
                                          ScanOptions options) {
    const unsigned r = coloring.uniformity();
    pattern.validate(r);
    const std::uint64_t allowed = pattern.kind == PatternKind::MinusOne ? 1 : 0;
    auto extend = [&](const VertexSet& chosen, Vertex w, std::uint64_t misses) -> std::optional<std::uint64_t> {
        bool ok = for_each_new_edge(coloring, chosen, w, [&](Color c) {
            if (c != color) ++misses;
            return misses <= allowed;
        });
        if (!ok) return std::nullopt;
        return misses;
    };
    return colex_scan(coloring.order(), pattern.order, std::uint64_t{0}, extend, options.threads);
}

namespace {

std::vector<Color> induced_colors(const ColoredCompleteHypergraph& coloring, const VertexSet& subset) {
    std::vector<Color> out;
    for (const auto& local : enumerate_subsets(static_cast<unsigned>(subset.size()), coloring.uniformity())) {
        VertexSet edge(local.size());
        for (std::size_t i = 0; i < local.size(); ++i) edge[i] = subset[local[i]];
        out.push_back(coloring.color_of(edge));
    }
    return out;
}

bool valid_subset(const ColoredCompleteHypergraph& coloring, const VertexSet& subset) {
    if (!std::is_sorted(subset.begin(), subset.end()) || std::adjacent_find(subset.begin(), subset.end()) != subset.end()) return false;
    return subset.empty() || subset.back() < coloring.order();
}

}  // namespace

bool exhibits_rainbow_simplex(const ColoredCompleteHypergraph& coloring, const VertexSet& subset) {
    if (subset.size() != coloring.uniformity() + 1u || !valid_subset(coloring, subset)) return false;
    auto colors = induced_colors(coloring, subset);
    std::sort(colors.begin(), colors.end());
    return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

bool exhibits_mono_target(const ColoredCompleteHypergraph& coloring, Color color, const TargetPattern& pattern, const VertexSet& subset) {
    if (subset.size() != pattern.order || !valid_subset(coloring, subset)) return false;
    const auto colors = induced_colors(coloring, subset);
    const auto same = static_cast<std::uint64_t>(std::count(colors.begin(), colors.end(), color));
    return same >= pattern.required_edges(coloring.uniformity());
}

namespace {

class CliqueSearch {
public:
    explicit CliqueSearch(const Hypergraph& h) : h_(h), r_(h.uniformity()) {}

    unsigned run() {
        best_ = std::min(h_.order(), r_ - 1);
        std::vector<Vertex> candidates(h_.order());
        for (Vertex v = 0; v < h_.order(); ++v) candidates[v] = v;
        std::vector<Vertex> clique;
        expand(clique, candidates);
        return best_;
    }

private:
    // True when every r-subset of clique ∪ {v, u} containing both v and u is
    // a hyperedge.
    bool compatible(const std::vector<Vertex>& clique, Vertex v, Vertex u) const {
        if (clique.size() + 2 < r_) return true;
        const unsigned m = r_ - 2;
        std::vector<std::size_t> idx(m);
        for (unsigned j = 0; j < m; ++j) idx[j] = j;
        std::vector<Vertex> edge(r_);
        while (true) {
            for (unsigned j = 0; j < m; ++j) edge[j] = clique[idx[j]];
            edge[m] = v;
            edge[m + 1] = u;
            std::sort(edge.begin(), edge.end());
            if (!h_.contains(rank_subset(edge, r_))) return false;
            unsigned j = 0;
            while (j < m && idx[j] + 1 == (j + 1 < m ? idx[j + 1] : clique.size())) ++j;
            if (j == m) return true;
            ++idx[j];
            for (unsigned i = 0; i < j; ++i) idx[i] = i;
        }
    }

    void expand(std::vector<Vertex>& clique, const std::vector<Vertex>& candidates) {
        best_ = std::max<unsigned>(best_, static_cast<unsigned>(clique.size()));
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (clique.size() + (candidates.size() - i) <= best_) return;
            const Vertex v = candidates[i];
            std::vector<Vertex> next;
            next.reserve(candidates.size() - i - 1);
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (compatible(clique, v, candidates[j])) next.push_back(candidates[j]);
            clique.push_back(v);
            expand(clique, next);
            clique.pop_back();
        }
    }

    const Hypergraph& h_;
    unsigned r_;
    unsigned best_ = 0;
};

}  // namespace

unsigned clique_number(const Hypergraph& hypergraph) { return CliqueSearch(hypergraph).run(); }

std::string bound_statement(bool gallai, const AvoidList& avoid, unsigned uniformity, std::uint64_t value) {
    return std::string(gallai ? "gr(" : "R(") + format_avoid_list(avoid) + ";" + std::to_string(uniformity) + ") >= " + std::to_string(value);
}

WitnessReport verify_witness(const ColoredCompleteHypergraph& coloring, const AvoidList& avoid, bool gallai_mode, ScanOptions options) {
    if (avoid.size() != coloring.color_count())
        throw ConfigError("avoid list has " + std::to_string(avoid.size()) + " patterns but the coloring uses " +
                          std::to_string(coloring.color_count()) + " colors");
    for (const auto& p : avoid) p.validate(coloring.uniformity());

    WitnessReport report;
    report.order = coloring.order();
    report.uniformity = coloring.uniformity();
    report.avoid = avoid;
    report.gallai_mode = gallai_mode;
    if (gallai_mode) {
        report.rainbow_witness = find_rainbow_simplex(coloring, options);
        report.gallai_ok = !report.rainbow_witness.has_value();
    }
    bool clean = report.gallai_ok;
    for (std::size_t i = 0; i < avoid.size(); ++i) {
        report.per_color_findings.push_back(find_mono_target(coloring, static_cast<Color>(i + 1), avoid[i], options));
        clean = clean && !report.per_color_findings.back();
    }
    if (clean) report.certified = bound_statement(gallai_mode, avoid, coloring.uniformity(), coloring.order() + 1ull);
    return report;
}

}  // namespace grhc
