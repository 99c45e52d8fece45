#include "grhc/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <thread>

#include "grhc/error.hpp"

namespace grhc {

std::string to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::Found: return "found";
        case SearchStatus::ExhaustedNone: return "exhausted-none";
        case SearchStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "unknown";
}

namespace {

// Static incidence structure shared by every engine working on one problem.
struct Layout {
    struct Group {
        std::uint32_t subsets = 0;
        // edge rank -> indices of the group's subsets containing it
        std::vector<std::vector<std::uint32_t>> by_edge;
    };

    unsigned n = 0;
    unsigned r = 0;
    unsigned t = 0;
    unsigned edges = 0;
    std::vector<Group> groups;
    // indexed by color; -1 when the color's pattern cannot fit in n vertices
    std::vector<int> color_group;
    std::vector<std::uint8_t> limit;
    // previous color with the same avoid pattern, 0 if none
    std::vector<Color> prev_same;
    bool gallai = false;
    Group simplices;
};

Layout::Group build_group(unsigned n, unsigned r, unsigned q, unsigned edges) {
    Layout::Group g;
    g.by_edge.resize(edges);
    std::vector<Vertex> local(r), edge(r);
    std::uint32_t index = 0;
    for (const auto& subset : enumerate_subsets(n, q)) {
        for (const auto& sub : enumerate_subsets(q, r)) {
            for (unsigned i = 0; i < r; ++i) edge[i] = subset[sub[i]];
            g.by_edge[rank_subset(edge, r)].push_back(index);
        }
        ++index;
    }
    g.subsets = index;
    return g;
}

std::shared_ptr<const Layout> make_layout(const SearchProblem& p) {
    if (p.color_count < 1) throw ConfigError("search needs at least one color");
    if (p.avoid.size() != p.color_count)
        throw ConfigError("avoid list has " + std::to_string(p.avoid.size()) + " patterns for " + std::to_string(p.color_count) + " colors");
    if (p.uniformity < 2) throw ConfigError("uniformity must be at least 2");
    if (p.order < p.uniformity) throw ConfigError("search needs n >= r");
    for (const auto& a : p.avoid) a.validate(p.uniformity);
    const auto edges = binomial(p.order, p.uniformity);
    if (edges > kSearchMaxEdges)
        throw CapacityError("C(" + std::to_string(p.order) + "," + std::to_string(p.uniformity) + ") = " + std::to_string(edges) +
                            " hyperedges exceeds the exhaustive search cap of " + std::to_string(kSearchMaxEdges));

    auto layout = std::make_shared<Layout>();
    Layout& L = *layout;
    L.n = p.order;
    L.r = p.uniformity;
    L.t = p.color_count;
    L.edges = static_cast<unsigned>(edges);
    L.color_group.assign(L.t + 1, -1);
    L.limit.assign(L.t + 1, 0);
    L.prev_same.assign(L.t + 1, 0);
    std::map<unsigned, int> group_of_order;
    for (Color c = 1; c <= L.t; ++c) {
        const auto& pattern = p.avoid[c - 1];
        for (Color d = c - 1; d >= 1; --d)
            if (p.avoid[d - 1] == pattern) {
                L.prev_same[c] = d;
                break;
            }
        if (pattern.order > L.n) continue;
        auto [it, fresh] = group_of_order.try_emplace(pattern.order, static_cast<int>(L.groups.size()));
        if (fresh) L.groups.push_back(build_group(L.n, L.r, pattern.order, L.edges));
        L.color_group[c] = it->second;
        L.limit[c] = static_cast<std::uint8_t>(pattern.required_edges(L.r));
    }
    L.gallai = p.gallai_mode && L.t >= L.r + 1 && L.n >= L.r + 1;
    if (L.gallai) L.simplices = build_group(L.n, L.r, L.r + 1, L.edges);
    return layout;
}

struct SharedControl {
    std::uint64_t budget = 0;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};
    // Shards above this index may stop early.
    std::atomic<std::size_t> found_shard{SIZE_MAX};
};

class Engine {
public:
    explicit Engine(std::shared_ptr<const Layout> layout) : L_(std::move(layout)) {
        const auto stride = L_->t + 1;
        for (const auto& g : L_->groups) counts_.emplace_back(static_cast<std::size_t>(g.subsets) * stride, 0);
        if (L_->gallai) {
            simplex_counts_.assign(static_cast<std::size_t>(L_->simplices.subsets) * stride, 0);
            simplex_distinct_.assign(L_->simplices.subsets, 0);
        }
        colors_.assign(L_->edges, 0);
        used_.assign(L_->t + 1, 0);
    }

    // Assigns color c to edge e; on violation everything is rolled back.
    bool assign(unsigned e, Color c) {
        const auto stride = L_->t + 1;
        const int g = L_->color_group[c];
        std::size_t done = 0;
        bool ok = true;
        if (g >= 0) {
            auto& cnt = counts_[g];
            const auto& subs = L_->groups[g].by_edge[e];
            const auto limit = L_->limit[c];
            for (; done < subs.size(); ++done) {
                if (++cnt[subs[done] * stride + c] >= limit) {
                    ++done;
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                for (std::size_t i = 0; i < done; ++i) --cnt[subs[i] * stride + c];
                return false;
            }
        }
        if (L_->gallai) {
            const auto& subs = L_->simplices.by_edge[e];
            std::size_t sdone = 0;
            for (; sdone < subs.size(); ++sdone) {
                const auto s = subs[sdone];
                if (simplex_counts_[s * stride + c]++ == 0 && ++simplex_distinct_[s] == L_->r + 1) {
                    ++sdone;
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                for (std::size_t i = 0; i < sdone; ++i) unmark_simplex(subs[i], c);
                if (g >= 0) release_groups(e, c);
                return false;
            }
        }
        colors_[e] = c;
        ++used_[c];
        return true;
    }

    void unassign(unsigned e) {
        const Color c = colors_[e];
        if (L_->color_group[c] >= 0) release_groups(e, c);
        if (L_->gallai)
            for (auto s : L_->simplices.by_edge[e]) unmark_simplex(s, c);
        --used_[c];
        colors_[e] = 0;
    }

    bool color_allowed(Color c) const {
        const Color prev = L_->prev_same[c];
        return prev == 0 || used_[prev] > 0;
    }

    // Visits the subtree below `depth`. Returns Found, ExhaustedNone, or
    // BudgetExceeded (also used when another shard made this one moot).
    SearchStatus run(unsigned depth, SharedControl& control, std::size_t shard) {
        stop_ = false;
        control_ = &control;
        shard_ = shard;
        const bool found = dfs(depth);
        if (found) return SearchStatus::Found;
        return stop_ ? SearchStatus::BudgetExceeded : SearchStatus::ExhaustedNone;
    }

    // Valid prefixes of the given depth, in DFS order.
    void collect_prefixes(unsigned depth, std::vector<std::vector<Color>>& out) {
        const unsigned e = static_cast<unsigned>(prefix_.size());
        if (e == depth || e == L_->edges) {
            out.push_back(prefix_);
            return;
        }
        for (Color c = 1; c <= L_->t; ++c) {
            if (!color_allowed(c) || !assign(e, c)) continue;
            prefix_.push_back(c);
            collect_prefixes(depth, out);
            prefix_.pop_back();
            unassign(e);
        }
    }

    std::vector<Color> colors() const { return colors_; }
    std::uint64_t local_nodes() const { return local_nodes_; }

private:
    void release_groups(unsigned e, Color c) {
        const auto stride = L_->t + 1;
        const int g = L_->color_group[c];
        auto& cnt = counts_[g];
        for (auto s : L_->groups[g].by_edge[e]) --cnt[s * stride + c];
    }

    void unmark_simplex(std::uint32_t s, Color c) {
        const auto stride = L_->t + 1;
        if (--simplex_counts_[s * stride + c] == 0) --simplex_distinct_[s];
    }

    bool dfs(unsigned e) {
        ++local_nodes_;
        if (control_->nodes.fetch_add(1, std::memory_order_relaxed) + 1 > control_->budget) {
            control_->out_of_budget = true;
            stop_ = true;
            return false;
        }
        if (shard_ > control_->found_shard.load(std::memory_order_relaxed)) {
            stop_ = true;
            return false;
        }
        if (e == L_->edges) return true;
        for (Color c = 1; c <= L_->t; ++c) {
            if (!color_allowed(c) || !assign(e, c)) continue;
            if (dfs(e + 1)) return true;
            unassign(e);
            if (stop_) return false;
        }
        return false;
    }

    std::shared_ptr<const Layout> L_;
    std::vector<std::vector<std::uint8_t>> counts_;
    std::vector<std::uint8_t> simplex_counts_;
    std::vector<std::uint8_t> simplex_distinct_;
    std::vector<Color> colors_;
    std::vector<unsigned> used_;
    std::vector<Color> prefix_;
    SharedControl* control_ = nullptr;
    std::size_t shard_ = 0;
    std::uint64_t local_nodes_ = 0;
    bool stop_ = false;
};

SearchOutcome finish(const Layout& L, SearchStatus status, const std::vector<Color>& colors, std::uint64_t nodes) {
    SearchOutcome out;
    out.status = status;
    out.nodes_visited = nodes;
    if (status == SearchStatus::Found) out.coloring = ColoredCompleteHypergraph(L.n, L.r, static_cast<Color>(L.t), colors);
    return out;
}

SearchOutcome run_sharded(const std::shared_ptr<const Layout>& layout, const SearchProblem& problem) {
    std::vector<std::vector<Color>> prefixes;
    Engine seed(layout);
    const unsigned depth = std::min(problem.prefix_depth, layout->edges);
    seed.collect_prefixes(depth, prefixes);

    SharedControl control;
    control.budget = problem.node_budget;
    std::vector<SearchStatus> status(prefixes.size(), SearchStatus::ExhaustedNone);
    std::vector<std::vector<Color>> found(prefixes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < prefixes.size(); i = next.fetch_add(1)) {
            if (i > control.found_shard.load()) {
                status[i] = SearchStatus::BudgetExceeded;
                continue;
            }
            Engine engine(layout);
            for (unsigned e = 0; e < prefixes[i].size(); ++e) engine.assign(e, prefixes[i][e]);
            status[i] = engine.run(static_cast<unsigned>(prefixes[i].size()), control, i);
            if (status[i] == SearchStatus::Found) {
                found[i] = engine.colors();
                std::size_t cur = control.found_shard.load();
                while (i < cur && !control.found_shard.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const auto workers = std::max<std::size_t>(1, std::min<std::size_t>(problem.threads, prefixes.size()));
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    const auto nodes = control.nodes.load();
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        if (status[i] == SearchStatus::Found) return finish(*layout, SearchStatus::Found, found[i], nodes);
        if (status[i] == SearchStatus::BudgetExceeded) return finish(*layout, SearchStatus::BudgetExceeded, {}, nodes);
    }
    return finish(*layout, SearchStatus::ExhaustedNone, {}, nodes);
}

}  // namespace

SearchOutcome search_witness(const SearchProblem& problem) {
    auto layout = make_layout(problem);
    if (problem.threads > 1) return run_sharded(layout, problem);
    SharedControl control;
    control.budget = problem.node_budget;
    Engine engine(layout);
    const auto status = engine.run(0, control, 0);
    return finish(*layout, status, engine.colors(), engine.local_nodes());
}

ExactResult exact_number(unsigned uniformity, const AvoidList& avoid, unsigned n_cap, bool gallai_mode, std::uint64_t node_budget,
                         unsigned threads) {
    ExactResult result;
    if (avoid.empty()) throw ConfigError("exact_number needs a non-empty avoid list");
    // Stays empty if exhaustion already happens at n = r.
    std::optional<ColoredCompleteHypergraph> previous;
    for (unsigned n = uniformity; n <= n_cap; ++n) {
        SearchProblem problem;
        problem.order = n;
        problem.uniformity = uniformity;
        problem.color_count = static_cast<Color>(avoid.size());
        problem.avoid = avoid;
        problem.gallai_mode = gallai_mode;
        problem.node_budget = node_budget;
        problem.threads = threads;
        SearchOutcome outcome;
        try {
            outcome = search_witness(problem);
        } catch (const CapacityError& e) {
            result.reason = std::string("capacity: ") + e.what();
            return result;
        }
        result.steps.push_back({n, outcome.status, outcome.nodes_visited});
        switch (outcome.status) {
            case SearchStatus::Found:
                previous = std::move(outcome.coloring);
                break;
            case SearchStatus::BudgetExceeded:
                result.reason = "node budget exceeded at n = " + std::to_string(n);
                return result;
            case SearchStatus::ExhaustedNone:
                result.value = n;
                result.witness = std::move(previous);
                return result;
        }
    }
    result.reason = "no exhaustion up to the cap n = " + std::to_string(n_cap);
    return result;
}

}  // namespace grhc
