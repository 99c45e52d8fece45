#include <doctest.h>

#include "grhc/core.hpp"
#include "grhc/error.hpp"
#include "oracles.hpp"

using namespace grhc;

TEST_CASE("rank and unrank small examples") {
    const std::vector<Vertex> a{0, 1, 2}, b{0, 1, 3}, c{2, 3, 4};
    CHECK(rank_subset(a, 3) == 0);
    CHECK(rank_subset(b, 3) == 1);
    CHECK(rank_subset(c, 3) == 9);
    CHECK(unrank_subset(0, 3) == a);
    CHECK(unrank_subset(1, 3) == b);
    CHECK(unrank_subset(9, 3) == c);
}

TEST_CASE("rank matches position in bitmask order") {
    for (unsigned n = 1; n <= 12; ++n)
        for (unsigned r = 1; r <= 5 && r <= n; ++r) {
            const auto all = oracle::subsets_by_mask(n, r);
            for (std::size_t i = 0; i < all.size(); ++i) {
                const auto s = oracle::members(all[i]);
                REQUIRE(rank_subset(s, r) == i);
                REQUIRE(unrank_subset(i, r) == s);
            }
        }
}

TEST_CASE("round trip up to n = 12") {
    for (unsigned n = 2; n <= 12; ++n)
        for (unsigned r = 2; r <= 4 && r <= n; ++r)
            for (Rank i = 0; i < binomial(n, r); ++i) REQUIRE(rank_subset(unrank_subset(i, r), r) == i);
}

TEST_CASE("enumeration agrees with unrank") {
    std::size_t j = 0;
    for (const auto& s : enumerate_subsets(5, 3)) {
        CHECK(s == unrank_subset(j, 3));
        ++j;
    }
    CHECK(j == 10);
    auto as_vector = [](unsigned n, unsigned k) {
        std::vector<std::vector<Vertex>> out;
        for (const auto& s : enumerate_subsets(n, k)) out.emplace_back(s.begin(), s.end());
        return out;
    };
    CHECK(as_vector(5, 3).front() == std::vector<Vertex>{0, 1, 2});
    CHECK(as_vector(5, 3).back() == std::vector<Vertex>{2, 3, 4});
    CHECK(as_vector(3, 5).empty());
    CHECK(as_vector(4, 0).size() == 1);
}

TEST_CASE("rank rejects malformed subsets") {
    const std::vector<Vertex> unsorted{2, 1, 3}, dup{1, 1, 3}, short_{1, 2};
    CHECK_THROWS_AS(rank_subset(unsorted, 3), InvalidSubsetError);
    CHECK_THROWS_AS(rank_subset(dup, 3), InvalidSubsetError);
    CHECK_THROWS_AS(rank_subset(short_, 3), InvalidSubsetError);
}

TEST_CASE("binomial") {
    CHECK(binomial(36, 4) == 58905);
    CHECK(binomial(16, 5) == 4368);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(200, 3) == oracle::choose(200, 3));
    CHECK_THROWS_AS(binomial(400, 200), CapacityError);
}

TEST_CASE("target patterns") {
    CHECK_NOTHROW(TargetPattern{3, PatternKind::Complete}.validate(3));
    const TargetPattern k3e{3, PatternKind::MinusOne}, k2{2, PatternKind::Complete};
    CHECK_THROWS_AS(k3e.validate(3), InvalidPatternError);
    CHECK_THROWS_AS(k2.validate(3), InvalidPatternError);
    CHECK(TargetPattern{5, PatternKind::MinusOne}.edge_count(3) == 9);
    CHECK(TargetPattern{5, PatternKind::MinusOne}.to_string() == "K5-e");
    CHECK(pattern_contains({5, PatternKind::MinusOne}, {4, PatternKind::Complete}, 3));
    CHECK_FALSE(pattern_contains({4, PatternKind::MinusOne}, {4, PatternKind::Complete}, 3));
    CHECK(pattern_contains({4, PatternKind::Complete}, {4, PatternKind::MinusOne}, 3));
}

TEST_CASE("colored hypergraph validation") {
    auto make = [](unsigned r, std::vector<Color> colors) { return ColoredCompleteHypergraph(4, r, 2, std::move(colors)); };
    CHECK_THROWS_AS(make(3, {1, 2, 1}), InvalidColoringError);
    CHECK_THROWS_AS(make(3, {1, 2, 3, 1}), InvalidColoringError);
    CHECK_THROWS_AS(make(3, {0, 2, 1, 1}), InvalidColoringError);
    CHECK_THROWS(make(1, {1, 1, 1, 1}));
    const ColoredCompleteHypergraph c(4, 3, 2, {1, 2, 2, 1});
    const std::vector<Vertex> e{0, 2, 3};
    CHECK(c.color_of(e) == 2);
    CHECK(c.color_histogram()[1] == 2);
}

TEST_CASE("hypergraph set semantics") {
    Hypergraph h(5, 3, {4, 1, 4, 0});
    CHECK(h.edges() == std::vector<Rank>{0, 1, 4});
    const std::vector<Rank> too_big{10};
    CHECK_THROWS(Hypergraph(5, 3, too_big));
    CHECK(h.complement().edges().size() == 7);
    CHECK(Hypergraph::from_pattern({5, PatternKind::MinusOne}, 3).edges().size() == 9);
    const ColoredCompleteHypergraph c(4, 3, 2, {1, 2, 2, 1});
    CHECK(Hypergraph::color_class(c, 2).edges() == std::vector<Rank>{1, 2});
}
