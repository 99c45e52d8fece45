// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "grhc/bounds.hpp"
#include "grhc/certio.hpp"
#include "grhc/chromatic.hpp"
#include "grhc/construct.hpp"
#include "grhc/search.hpp"
#include "grhc/verify.hpp"
#include "oracles.hpp"

using namespace grhc;

namespace {

const TargetPattern K3{3, PatternKind::Complete};
const TargetPattern K4{4, PatternKind::Complete};
const TargetPattern K5{5, PatternKind::Complete};
const TargetPattern K4e{4, PatternKind::MinusOne};
const TargetPattern K5e{5, PatternKind::MinusOne};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

// Each check returns an empty string on success, else the failure reason,
// and appends details for the report line.
struct Criterion {
    int number;
    std::string title;
    std::function<std::string(std::ostringstream&)> check;
};

#define EXPECT(cond, msg) \
    do {                  \
        if (!(cond)) return std::string(msg); \
    } while (0)

SearchProblem k4e_pair(unsigned n) {
    SearchProblem p;
    p.order = n;
    p.uniformity = 3;
    p.color_count = 2;
    p.avoid = {K4e, K4e};
    return p;
}

ColoredCompleteHypergraph mono(unsigned n, unsigned r) { return ColoredCompleteHypergraph(n, r, 1, std::vector<Color>(binomial(n, r), 1)); }

ColoredCompleteHypergraph random_gallai(std::mt19937_64& rng, unsigned n, unsigned r, Color t) {
    for (int attempt = 0; attempt < 2000; ++attempt) {
        auto c = oracle::random_coloring(rng, n, r, t);
        if (!find_rainbow_simplex(c)) return c;
    }
    return oracle::random_coloring(rng, n, r, static_cast<Color>(std::min<unsigned>(t, r)));
}

std::string criterion1(std::ostringstream& info) {
    const auto start = Clock::now();
    const auto found = search_witness(k4e_pair(6));
    EXPECT(found.status == SearchStatus::Found, "no 6-vertex witness found");
    const auto sq = square3(*found.coloring);
    EXPECT(sq.coloring.order() == 36 && sq.coloring.color_count() == 4, "square3 output has the wrong shape");
    const auto report = verify_witness(sq.coloring, {K4e, K4e, K4, K4}, true);
    const double secs = seconds_since(start);
    EXPECT(report.is_certified(), "36-vertex coloring did not certify");
    EXPECT(*report.certified == "gr(K4-e,K4-e,K4,K4;3) >= 37", "unexpected statement " + *report.certified);
    EXPECT(secs < 10.0, "took " + std::to_string(secs) + " s");
    info << "search nodes=" << found.nodes_visited << ", " << binomial(36, 4) << " quadruples scanned, " << *report.certified << ", "
         << secs << " s";
    return {};
}

std::string criterion2(std::ostringstream& info) {
    const auto start = Clock::now();
    const auto out = search_witness(k4e_pair(7));
    EXPECT(out.status == SearchStatus::ExhaustedNone, "search did not exhaust: " + to_string(out.status));
    info << "n=7 exhausted-none, nodes=" << out.nodes_visited << ", " << seconds_since(start) << " s";
    return {};
}

std::string criterion3(std::ostringstream& info) {
    const auto start = Clock::now();
    const auto sq = square4(mono(4, 4));
    EXPECT(sq.coloring.order() == 16 && sq.coloring.color_count() == 3, "square4 output has the wrong shape");
    const auto report = verify_witness(sq.coloring, {K5, K5, K5}, true);
    const double secs = seconds_since(start);
    EXPECT(report.gallai_ok, "rainbow K5 found");
    EXPECT(report.is_certified(), "monochromatic K5 found");
    EXPECT(*report.certified == "gr(K5,K5,K5;4) >= 17", "unexpected statement " + *report.certified);
    EXPECT(secs < 1.0, "took " + std::to_string(secs) + " s");
    info << binomial(16, 5) << " 5-subsets, " << *report.certified << ", " << secs << " s";
    return {};
}

std::string criterion4(std::ostringstream& info) {
    const auto lifted = lift_graph(pentagon_coloring());
    const auto hist = lifted.color_histogram();
    EXPECT(hist.size() == 3 && hist[1] == 5 && hist[2] == 5, "lifted pentagon is not 5 + 5");
    const auto report = verify_witness(lifted, {K5e, K5e}, true);
    EXPECT(report.is_certified() && *report.certified == "gr(K5-e,K5-e;3) >= 6", "lifted pentagon did not certify");
    const auto c5 = pentagon_coloring();
    const auto big = lift_graph(gallai_substitute(c5, c5));
    EXPECT(big.order() == 25 && big.color_count() == 4, "lifted substitution has the wrong shape");
    EXPECT(!find_rainbow_simplex(big), "lifted substitution has a rainbow K4");
    EXPECT(!oracle::Table(big).first_rainbow(), "brute force found a rainbow K4");
    info << *report.certified << "; 25-vertex lift rainbow-free over " << binomial(25, 4) << " quadruples";
    return {};
}

std::string criterion5(std::ostringstream& info) {
    const auto rows = figure1_table();
    const std::vector<std::uint64_t> three{37, 50, 145, 145, 1157, 1157, 2755, 2755, 3026, 3250, 3250, 4618, 4618, 4618};
    std::size_t i = 0, mismatches = 0;
    for (; i < three.size(); ++i) {
        EXPECT(rows[i].record && rows[i].record->value == three[i] && rows[i].match, "row " + std::to_string(i + 1) + " differs");
    }
    EXPECT(rows[i].record && rows[i].record->value == 6562 && rows[i].published == 6565 && !rows[i].match, "6562/6565 row not flagged");
    const std::vector<std::uint64_t> rest{26245, 1090, 67, 4357, 170, 170, 17179869185ull};
    for (std::size_t j = 0; j < rest.size(); ++j) {
        const auto& r = rows[i + 1 + j];
        EXPECT(r.record && r.record->value == rest[j] && r.match, "row " + std::to_string(i + 2 + j) + " differs");
    }
    for (const auto& r : rows) mismatches += !r.match;
    EXPECT(mismatches == 1, std::to_string(mismatches) + " mismatches");
    info << rows.size() << " rows, 1 mismatch (computed 6562, published 6565)";
    return {};
}

std::string criterion6(std::ostringstream& info) {
    const std::vector<std::uint64_t> want{3, 6, 11, 26, 51, 126, 251, 626};
    for (unsigned t = 1; t <= 8; ++t) EXPECT(chung_graham_value(t) == want[t - 1], "t=" + std::to_string(t));
    const auto c5 = pentagon_coloring();
    const ColoredCompleteHypergraph k2(2, 2, 1, {1});
    for (const auto& g : {gallai_substitute(k2, c5), gallai_substitute(c5, c5)}) {
        EXPECT(g.order() + 1 == chung_graham_value(g.color_count()), "witness order does not meet the formula");
        const oracle::Table tab(g);
        EXPECT(!find_rainbow_simplex(g) && !tab.first_rainbow(), "rainbow triangle");
        for (Color c = 1; c <= g.color_count(); ++c) EXPECT(!find_mono_target(g, c, K3) && !tab.first_mono(c, K3), "monochromatic triangle");
    }
    info << "t=1..8 formula, 10- and 25-vertex witnesses clean";
    return {};
}

std::string criterion7(std::ostringstream& info, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> order(3, 6);
    std::uniform_real_distribution<double> density(0.2, 0.9);
    for (int trial = 0; trial < 100; ++trial) {
        const auto h1 = oracle::random_hypergraph(rng, order(rng), 3, density(rng));
        const auto h2 = oracle::random_hypergraph(rng, order(rng), 3, density(rng));
        const unsigned w1 = std::max(oracle::clique(h1), 2u), w2 = std::max(oracle::clique(h2), 2u);
        const unsigned c1 = std::max(oracle::clique(h1.complement()), 2u), c2 = std::max(oracle::clique(h2.complement()), 2u);
        EXPECT(clique_number(h1) == w1 && clique_number(h2) == w2, "factor clique number disagrees with brute force");
        const auto p = lex_product(h1, h2);
        EXPECT(clique_number(p) == std::max(w1, w2), "identity (max) fails at trial " + std::to_string(trial));
        EXPECT(clique_number(p.complement()) == c1 * c2, "identity (product) fails at trial " + std::to_string(trial));
    }
    info << "100 trials, seed " << seed;
    return {};
}

std::string criterion8(std::ostringstream& info, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g1 = oracle::random_coloring(rng, 2 + rng() % 3, 2, 2);
        const auto g2 = oracle::random_coloring(rng, 1 + rng() % 3, 2, 2);
        const auto sub = gallai_substitute(g1, g2);
        EXPECT(!oracle::Table(sub).first_rainbow(), "substitution made a rainbow triangle");
        EXPECT(!oracle::Table(lift_graph(sub)).first_rainbow(), "lift made a rainbow simplex");
        const auto base = random_gallai(rng, 4, 3, 3);
        EXPECT(!oracle::Table(burr_blowup(base, Hypergraph::complete(4 + rng() % 2, 3))).first_rainbow(), "blow-up made a rainbow simplex");
        const auto other = random_gallai(rng, 2 + rng() % 2, 3, 3);
        EXPECT(!oracle::Table(lex_compose(base, other)).first_rainbow(), "composition made a rainbow simplex");
        EXPECT(!oracle::Table(square3(random_gallai(rng, 3 + rng() % 2, 3, 3)).coloring).first_rainbow(), "square3 made a rainbow simplex");
        if (trial < 4) EXPECT(!find_rainbow_simplex(square4(random_gallai(rng, 4, 4, 3)).coloring), "square4 made a rainbow simplex");
    }
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned r = 2 + trial % 3;
        const auto c = oracle::random_coloring(rng, r + rng() % (11 - r), r, static_cast<Color>(1 + rng() % 4));
        EXPECT(read_certificate(write_certificate(c, "p")).payload == c, "certificate round trip failed");
    }
    for (unsigned n = 1; n <= 12; ++n)
        for (unsigned r = 1; r <= n && r <= 6; ++r) {
            const auto all = oracle::subsets_by_mask(n, r);
            for (std::size_t i = 0; i < all.size(); ++i) {
                const auto s = oracle::members(all[i]);
                EXPECT(rank_subset(s, r) == i && unrank_subset(i, r) == s, "colex bijection fails");
            }
        }
    for (unsigned r = 3; r <= 4; ++r)
        for (unsigned n = 1; n <= 10; ++n)
            EXPECT(weak_chromatic_number(Hypergraph::complete(n, r)) == (n + r - 2) / (r - 1), "chromatic closed form fails");
    info << "Gallai preservation x5 constructions, 100 round trips, colex n<=12, chromatic n<=10";
    return {};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance checks"};
    std::uint64_t seed = 20261016;
    app.add_option("--seed", seed, "seed for randomized criteria");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria{
        {1, "square3 witness pipeline certifies gr(K4-e,K4-e,K4,K4;3) >= 37", criterion1},
        {2, "no 7-vertex 2-coloring avoids K4-e in both colors", criterion2},
        {3, "square4 of the one-color K4 certifies gr(K5,K5,K5;4) >= 17", criterion3},
        {4, "lifting the pentagon and the 25-vertex substitution", criterion4},
        {5, "reference bound table", criterion5},
        {6, "Chung-Graham values and substitution witnesses", criterion6},
        {7, "clique identities on lexicographic products", [&](std::ostringstream& o) { return criterion7(o, seed); }},
        {8, "property suites", [&](std::ostringstream& o) { return criterion8(o, seed); }},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream info;
        std::string failure;
        try {
            failure = c.check(info);
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        if (failure.empty())
            std::cout << "PASS criterion " << c.number << ": " << c.title << " [" << info.str() << "]\n";
        else {
            std::cout << "FAIL criterion " << c.number << ": " << c.title << " [" << failure << "]\n";
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
