#include "grhc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "grhc/bounds.hpp"
#include "grhc/certio.hpp"
#include "grhc/construct.hpp"
#include "grhc/error.hpp"
#include "grhc/search.hpp"
#include "grhc/verify.hpp"

namespace grhc {

namespace {

std::string format_set(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ColoredCompleteHypergraph load(const std::string& path, const char* flag) {
    if (path.empty()) throw ConfigError(std::string("this operation needs ") + flag);
    return load_certificate(path).payload;
}

struct ConstructArgs {
    std::string op, in, in2, target, out;
    unsigned r = 3, n = 0;
};

struct VerifyArgs {
    std::string in, avoid;
    bool gallai = false;
    unsigned threads = 1;
};

struct SearchArgs {
    unsigned r = 0, n = 0, t = 0, threads = 1;
    std::string avoid, out;
    bool gallai = false;
    std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
};

struct ExactArgs {
    unsigned r = 0, t = 0, cap = 0, threads = 1;
    std::string avoid;
    bool gallai = false;
    std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
};

struct BoundsArgs {
    bool figure1 = false, derive = false, iterate = false;
    std::string registry;
};

int run_construct(const ConstructArgs& a, std::ostream& out) {
    std::optional<ColoredCompleteHypergraph> result;
    bool degenerate = false;
    if (a.op == "lift") {
        result = lift_graph(load(a.in, "--in"));
    } else if (a.op == "substitute") {
        result = gallai_substitute(load(a.in, "--in"), load(a.in2, "--in2"));
    } else if (a.op == "burr") {
        auto base = load(a.in, "--in");
        if (a.target.empty()) throw ConfigError("burr needs --target");
        const auto pattern = parse_pattern(a.target, base.uniformity());
        result = burr_blowup(base, Hypergraph::from_pattern(pattern, base.uniformity()));
    } else if (a.op == "lexcompose") {
        result = lex_compose(load(a.in, "--in"), load(a.in2, "--in2"));
    } else if (a.op == "square3" || a.op == "square4") {
        auto base = load(a.in, "--in");
        auto sq = a.op == "square3" ? square3(base) : square4(base);
        degenerate = sq.degenerate;
        result = std::move(sq.coloring);
    } else if (a.op == "mono") {
        if (a.n == 0) throw ConfigError("mono needs --n");
        result = build_coloring(a.n, a.r, 1, [](std::span<const Vertex>) -> Color { return 1; });
    } else if (a.op == "c5") {
        result = pentagon_coloring();
    }
    save_certificate(a.out, *result, "construct " + a.op);
    out << "wrote " << a.out << ": order " << result->order() << ", uniformity " << result->uniformity() << ", colors "
        << result->color_count() << "\n";
    if (degenerate) out << "note: base too small, square is degenerate\n";
    return kExitOk;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
    const auto coloring = load(a.in, "--in");
    const auto avoid = parse_avoid_list(a.avoid, coloring.uniformity());
    const auto report = verify_witness(coloring, avoid, a.gallai, ScanOptions{a.threads});
    out << "order " << report.order << ", uniformity " << report.uniformity << ", colors " << coloring.color_count() << "\n";
    if (a.gallai) {
        if (report.rainbow_witness)
            out << "rainbow simplex: " << format_set(*report.rainbow_witness) << "\n";
        else
            out << "rainbow simplex: none\n";
    }
    for (std::size_t i = 0; i < report.per_color_findings.size(); ++i) {
        out << "color " << i + 1 << " " << avoid[i].to_string() << ": ";
        const auto& hit = report.per_color_findings[i];
        out << (hit ? "witness " + format_set(*hit) : std::string("none")) << "\n";
    }
    if (report.is_certified()) {
        out << "certified: " << *report.certified << "\n";
        return kExitOk;
    }
    out << "not certified\n";
    return kExitFailed;
}

int run_search(const SearchArgs& a, std::ostream& out) {
    SearchProblem p;
    p.order = a.n;
    p.uniformity = a.r;
    if (a.t > UINT16_MAX) throw ConfigError("too many colors");
    p.color_count = static_cast<Color>(a.t);
    p.avoid = parse_avoid_list(a.avoid, a.r);
    p.gallai_mode = a.gallai;
    p.node_budget = a.budget;
    p.threads = a.threads;
    const auto outcome = search_witness(p);
    out << "status: " << to_string(outcome.status) << "\n";
    out << "nodes: " << outcome.nodes_visited << "\n";
    switch (outcome.status) {
        case SearchStatus::Found:
            if (!a.out.empty()) {
                save_certificate(a.out, *outcome.coloring, "search");
                out << "wrote " << a.out << "\n";
            } else {
                out << write_certificate(*outcome.coloring, "search");
            }
            return kExitOk;
        case SearchStatus::ExhaustedNone:
            out << "no witness on " << a.n << " vertices\n";
            return kExitFailed;
        case SearchStatus::BudgetExceeded:
            return kExitCapacity;
    }
    return kExitFailed;
}

int run_exact(const ExactArgs& a, std::ostream& out) {
    const auto avoid = parse_avoid_list(a.avoid, a.r);
    if (avoid.size() != a.t) throw ConfigError("--avoid lists " + std::to_string(avoid.size()) + " patterns but --t is " + std::to_string(a.t));
    const auto result = exact_number(a.r, avoid, a.cap, a.gallai, a.budget, a.threads);
    for (const auto& s : result.steps) out << "n=" << s.order << " " << to_string(s.status) << " nodes=" << s.nodes_visited << "\n";
    if (result.determined()) {
        out << (a.gallai ? "gr(" : "R(") << format_avoid_list(avoid) << ";" << a.r << ") = " << *result.value << "\n";
        if (result.witness) out << write_certificate(*result.witness, "search");
        return kExitOk;
    }
    out << "indeterminate: " << result.reason << "\n";
    const bool resource = result.reason.starts_with("capacity") || result.reason.starts_with("node budget");
    return resource ? kExitCapacity : kExitFailed;
}

int run_bounds(const BoundsArgs& a, std::ostream& out) {
    if (a.figure1 == !a.registry.empty()) throw ConfigError("bounds needs exactly one of --figure1 or --registry");
    if (a.figure1) {
        out << render_table(figure1_table());
        return kExitOk;
    }
    auto registry = BoundRegistry::from_manifest(read_file(a.registry));
    if (a.derive) {
        DeriveOptions options;
        options.iterate = a.iterate;
        auto result = derive_bounds(registry, options);
        for (const auto& line : result.log) out << "# " << line << "\n";
        registry = std::move(result.registry);
    }
    out << registry.to_manifest();
    return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ramsey and Gallai-Ramsey hypergraph witnesses", "grhc"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a coloring from certificates");
    construct->add_option("--op", ca.op, "construction")
        ->required()
        ->check(CLI::IsMember({"lift", "substitute", "burr", "lexcompose", "square3", "square4", "mono", "c5"}));
    construct->add_option("--in", ca.in, "first input certificate");
    construct->add_option("--in2", ca.in2, "second input certificate");
    construct->add_option("--target", ca.target, "blow-up target pattern");
    construct->add_option("--r", ca.r, "uniformity (mono)")->check(CLI::Range(2u, 64u));
    construct->add_option("--n", ca.n, "order (mono)");
    construct->add_option("--out", ca.out, "output certificate")->required();

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "certify a witness coloring");
    verify->add_option("--in", va.in, "certificate")->required();
    verify->add_option("--avoid", va.avoid, "comma-separated patterns, one per color")->required();
    verify->add_flag("--gallai", va.gallai, "also require no rainbow simplex");
    verify->add_option("--threads", va.threads, "scan threads")->check(CLI::Range(1u, 256u));

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "search for a witness coloring");
    search->add_option("--r", sa.r, "uniformity")->required()->check(CLI::Range(2u, 64u));
    search->add_option("--n", sa.n, "order")->required();
    search->add_option("--t", sa.t, "colors")->required()->check(CLI::Range(1u, 64u));
    search->add_option("--avoid", sa.avoid, "patterns")->required();
    search->add_flag("--gallai", sa.gallai, "forbid rainbow simplices");
    search->add_option("--budget", sa.budget, "node budget");
    search->add_option("--out", sa.out, "write the witness here");
    search->add_option("--threads", sa.threads, "search shards in parallel")->check(CLI::Range(1u, 256u));

    ExactArgs ea;
    auto* exact = app.add_subcommand("exact", "find a small Ramsey number exactly");
    exact->add_option("--r", ea.r, "uniformity")->required()->check(CLI::Range(2u, 64u));
    exact->add_option("--t", ea.t, "colors")->required()->check(CLI::Range(1u, 64u));
    exact->add_option("--avoid", ea.avoid, "patterns")->required();
    exact->add_option("--cap", ea.cap, "largest order tried")->required();
    exact->add_flag("--gallai", ea.gallai, "Gallai-Ramsey instead of Ramsey");
    exact->add_option("--budget", ea.budget, "node budget per order");
    exact->add_option("--threads", ea.threads, "search shards in parallel")->check(CLI::Range(1u, 256u));

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "bound registry and derivations");
    bounds->add_flag("--figure1", ba.figure1, "reproduce the reference table");
    bounds->add_option("--registry", ba.registry, "manifest file");
    bounds->add_flag("--derive", ba.derive, "apply every rule once");
    bounds->add_flag("--iterate", ba.iterate, "repeat derivation rounds");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (construct->parsed()) return run_construct(ca, out);
        if (verify->parsed()) return run_verify(va, out);
        if (search->parsed()) return run_search(sa, out);
        if (exact->parsed()) return run_exact(ea, out);
        if (bounds->parsed()) return run_bounds(ba, out);
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const LiftUndefinedError& e) {
        err << "failed: " << e.what() << "\n";
        return kExitFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace grhc
