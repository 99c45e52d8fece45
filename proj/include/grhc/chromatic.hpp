#pragma once

#include "grhc/core.hpp"

namespace grhc {

// Exhaustive regime only: larger hypergraphs raise CapacityError.
inline constexpr unsigned kChromaticMaxOrder = 12;

struct ChromaticData {
    unsigned chi = 1;  // weak chromatic number
    unsigned s = 1;    // minimum color-class size over proper chi-colorings
};

/// Fewest vertex colors leaving no hyperedge monochromatic.
unsigned weak_chromatic_number(const Hypergraph& h);

/// Smallest color-class cardinality among all proper colorings with
/// weak_chromatic_number(h) colors. Some authors call this the chromatic
/// index; it has nothing to do with edge colorings.
unsigned min_color_class_size(const Hypergraph& h);

ChromaticData chromatic_data(const Hypergraph& h);

}  // namespace grhc
