#include <doctest.h>

#include <random>

#include "grhc/error.hpp"
#include "grhc/verify.hpp"
#include "oracles.hpp"

using namespace grhc;

namespace {

const TargetPattern K4{4, PatternKind::Complete};
const TargetPattern K4e{4, PatternKind::MinusOne};
const TargetPattern K5e{5, PatternKind::MinusOne};

ColoredCompleteHypergraph mono(unsigned n, unsigned r) { return ColoredCompleteHypergraph(n, r, 1, std::vector<Color>(binomial(n, r), 1)); }

}  // namespace

TEST_CASE("rainbow simplex examples") {
    CHECK_FALSE(find_rainbow_simplex(mono(5, 3)));
    const ColoredCompleteHypergraph c(4, 3, 4, {1, 2, 3, 4});
    CHECK(find_rainbow_simplex(c) == VertexSet{0, 1, 2, 3});
}

TEST_CASE("mono target examples") {
    CHECK(find_mono_target(mono(6, 3), 1, K4) == VertexSet{0, 1, 2, 3});
    CHECK_FALSE(find_mono_target(mono(3, 3), 1, K4));
}

TEST_CASE("scans agree with brute force on random colorings") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const unsigned r = 2 + trial % 3;
        const unsigned n = r + 1 + static_cast<unsigned>(rng() % 5);
        const auto t = static_cast<Color>(1 + rng() % (r + 2));
        const auto c = oracle::random_coloring(rng, n, r, t);
        const oracle::Table tab(c);
        REQUIRE(find_rainbow_simplex(c) == tab.first_rainbow());
        REQUIRE(find_rainbow_simplex(c, ScanOptions{3}) == tab.first_rainbow());
        for (unsigned q = r; q <= std::min(n, r + 2); ++q)
            for (auto kind : {PatternKind::Complete, PatternKind::MinusOne}) {
                const TargetPattern p{q, kind};
                if (kind == PatternKind::MinusOne && q == r) continue;
                for (Color col = 1; col <= t; ++col) {
                    const auto want = tab.first_mono(col, p);
                    REQUIRE(find_mono_target(c, col, p) == want);
                    REQUIRE(find_mono_target(c, col, p, ScanOptions{4}) == want);
                    if (want) REQUIRE(exhibits_mono_target(c, col, p, *want));
                }
            }
    }
}

TEST_CASE("recount helpers") {
    const ColoredCompleteHypergraph c(4, 3, 4, {1, 2, 3, 4});
    CHECK(exhibits_rainbow_simplex(c, {0, 1, 2, 3}));
    CHECK_FALSE(exhibits_rainbow_simplex(mono(4, 3), {0, 1, 2, 3}));
    CHECK(exhibits_mono_target(mono(5, 3), 1, K5e, {0, 1, 2, 3, 4}));
}

TEST_CASE("clique number examples") {
    CHECK(clique_number(Hypergraph::complete(5, 3)) == 5);
    CHECK(clique_number(Hypergraph::empty(7, 3)) == 2);
    CHECK(clique_number(Hypergraph::from_pattern({5, PatternKind::MinusOne}, 3)) == 4);
}

TEST_CASE("clique number matches brute force") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned r = 2 + trial % 3;
        const unsigned n = r + static_cast<unsigned>(rng() % 8);
        const double density = 0.3 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
        const auto h = oracle::random_hypergraph(rng, n, r, density);
        REQUIRE(clique_number(h) == std::max(oracle::clique(h), std::min(n, r - 1)));
    }
}

TEST_CASE("verify_witness report") {
    const auto c = mono(13, 3);
    const auto report = verify_witness(c, {K4}, true);
    CHECK_FALSE(report.is_certified());
    CHECK(report.gallai_ok);
    REQUIRE(report.per_color_findings.size() == 1);
    CHECK(report.per_color_findings[0] == VertexSet{0, 1, 2, 3});
    CHECK_THROWS_AS(verify_witness(c, {K4, K4}, true), ConfigError);

    const auto ok = verify_witness(mono(3, 3), {K4}, true);
    REQUIRE(ok.is_certified());
    CHECK(*ok.certified == "gr(K4;3) >= 4");
    CHECK(*verify_witness(mono(3, 3), {K4}, false).certified == "R(K4;3) >= 4");

    const ColoredCompleteHypergraph rainbow(4, 3, 4, {1, 2, 3, 4});
    const auto r1 = verify_witness(rainbow, {K4e, K4e, K4e, K4e}, true);
    CHECK_FALSE(r1.is_certified());
    CHECK(r1.rainbow_witness == VertexSet{0, 1, 2, 3});
    CHECK(verify_witness(rainbow, {K4e, K4e, K4e, K4e}, false).is_certified());
}

TEST_CASE("bound statement") {
    CHECK(bound_statement(true, {K4e, K4e, K4, K4}, 3, 37) == "gr(K4-e,K4-e,K4,K4;3) >= 37");
}
