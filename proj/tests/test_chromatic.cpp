#include <doctest.h>

#include <random>

#include "grhc/chromatic.hpp"
#include "grhc/error.hpp"
#include "oracles.hpp"

using namespace grhc;

TEST_CASE("chromatic examples") {
    CHECK(chromatic_data(Hypergraph::complete(4, 3)).chi == 2);
    CHECK(chromatic_data(Hypergraph::complete(4, 3)).s == 2);
    CHECK(chromatic_data(Hypergraph::complete(5, 3)).chi == 3);
    CHECK(min_color_class_size(Hypergraph::complete(5, 3)) == 1);
    CHECK(weak_chromatic_number(Hypergraph::empty(6, 3)) == 1);
    CHECK(min_color_class_size(Hypergraph::empty(6, 3)) == 6);
    CHECK(weak_chromatic_number(Hypergraph::complete(6, 2)) == 6);
    CHECK(min_color_class_size(Hypergraph::complete(6, 2)) == 1);
    CHECK_THROWS_AS(weak_chromatic_number(Hypergraph::complete(13, 3)), CapacityError);
}

TEST_CASE("closed form for complete hypergraphs") {
    for (unsigned r = 3; r <= 4; ++r)
        for (unsigned n = 3; n <= 10; ++n) {
            const auto d = chromatic_data(Hypergraph::complete(n, r));
            CHECK(d.chi == (n + r - 2) / (r - 1));
            CHECK(d.s * d.chi <= n);
        }
}

TEST_CASE("agrees with exhaustive colorings") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 120; ++trial) {
        const unsigned r = 2 + trial % 3;
        const unsigned n = r + static_cast<unsigned>(rng() % (8 - r));
        const auto h = oracle::random_hypergraph(rng, n, r, 0.6);
        const auto [chi, s] = oracle::chromatic(h);
        const auto d = chromatic_data(h);
        REQUIRE(d.chi == chi);
        REQUIRE(d.s == s);
    }
}

TEST_CASE("pattern targets") {
    const auto k4e = chromatic_data(Hypergraph::from_pattern({4, PatternKind::MinusOne}, 3));
    CHECK(k4e.chi == 2);
    CHECK(k4e.s == 1);
}
