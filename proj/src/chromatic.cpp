#include "grhc/chromatic.hpp"

#include <algorithm>

#include "grhc/error.hpp"

namespace grhc {

namespace {

// Vertices are colored in order 0..n-1. A hyperedge is checked once its
// largest vertex is colored. Colors follow first-use order: vertex v may only
// open color m+1 when colors 1..m are in use, which removes the k! relabelings.
class VertexColoring {
public:
    explicit VertexColoring(const Hypergraph& h) : n_(h.order()), closing_(h.order()) {
        if (n_ > kChromaticMaxOrder)
            throw CapacityError("chromatic computations are exhaustive and limited to " + std::to_string(kChromaticMaxOrder) + " vertices");
        for (Rank e : h.edges()) {
            auto vs = unrank_subset(e, h.uniformity());
            closing_[vs.back()].push_back(std::move(vs));
        }
        color_.assign(n_, 0);
        class_size_.assign(n_ + 1, 0);
    }

    bool colorable(unsigned k) {
        reset(k);
        mode_ = Mode::Exists;
        return descend(0, 0);
    }

    // Requires k to be the chromatic number.
    unsigned min_class(unsigned k) {
        reset(k);
        mode_ = Mode::MinClass;
        best_ = n_;
        descend(0, 0);
        return best_;
    }

private:
    enum class Mode { Exists, MinClass };

    void reset(unsigned k) {
        k_ = k;
        std::fill(color_.begin(), color_.end(), 0);
        std::fill(class_size_.begin(), class_size_.end(), 0);
    }

    bool proper_at(Vertex v) const {
        for (const auto& edge : closing_[v]) {
            const unsigned c = color_[edge[0]];
            if (std::all_of(edge.begin() + 1, edge.end(), [&](Vertex u) { return color_[u] == c; })) return false;
        }
        return true;
    }

    bool descend(Vertex v, unsigned used) {
        if (v == n_) {
            if (mode_ == Mode::Exists) return true;
            if (used == k_) best_ = std::min(best_, *std::min_element(class_size_.begin() + 1, class_size_.begin() + 1 + k_));
            return false;
        }
        // Too few vertices left to open the remaining classes.
        if (mode_ == Mode::MinClass && k_ - used > n_ - v) return false;
        const unsigned limit = std::min(k_, used + 1);
        for (unsigned c = 1; c <= limit; ++c) {
            color_[v] = c;
            ++class_size_[c];
            if (proper_at(v) && descend(v + 1, std::max(used, c))) return true;
            --class_size_[c];
        }
        color_[v] = 0;
        return false;
    }

    unsigned n_;
    std::vector<std::vector<std::vector<Vertex>>> closing_;
    std::vector<unsigned> color_;
    std::vector<unsigned> class_size_;
    unsigned k_ = 0;
    unsigned best_ = 0;
    Mode mode_ = Mode::Exists;
};

}  // namespace

unsigned weak_chromatic_number(const Hypergraph& h) {
    VertexColoring search(h);
    if (h.edge_count() == 0) return 1;
    for (unsigned k = 2;; ++k)
        if (search.colorable(k)) return k;
}

unsigned min_color_class_size(const Hypergraph& h) { return chromatic_data(h).s; }

ChromaticData chromatic_data(const Hypergraph& h) {
    ChromaticData data;
    data.chi = weak_chromatic_number(h);
    VertexColoring search(h);
    data.s = search.min_class(data.chi);
    return data;
}

}  // namespace grhc
