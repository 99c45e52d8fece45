#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "grhc/bounds.hpp"
#include "grhc/certio.hpp"
#include "grhc/chromatic.hpp"
#include "grhc/cli.hpp"
#include "grhc/construct.hpp"
#include "grhc/error.hpp"
#include "grhc/search.hpp"
#include "grhc/verify.hpp"

namespace py = pybind11;
using namespace grhc;

namespace {

AvoidList to_avoid(const py::object& avoid, unsigned r) {
    if (py::isinstance<py::str>(avoid)) return parse_avoid_list(avoid.cast<std::string>(), r);
    return avoid.cast<AvoidList>();
}

std::vector<Color> colors_of(const ColoredCompleteHypergraph& c) { return {c.colors().begin(), c.colors().end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Ramsey and Gallai-Ramsey witnesses for complete hypergraphs";

    auto base = py::register_exception<Error>(m, "GrhcError");
    py::register_exception<FormatError>(m, "FormatError", base);
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<InvalidPatternError>(m, "InvalidPatternError", base);
    py::register_exception<ConfigError>(m, "ConfigError", base);
    py::register_exception<CapacityError>(m, "CapacityError", base);
    py::register_exception<LiftUndefinedError>(m, "LiftUndefinedError", base);
    py::register_exception<HypothesisError>(m, "HypothesisError", base);
    py::register_exception<InvalidColoringError>(m, "InvalidColoringError", base);
    py::register_exception<InvalidSubsetError>(m, "InvalidSubsetError", base);

    m.def("binomial", &binomial, py::arg("n"), py::arg("k"));
    m.def("rank_subset", [](const std::vector<Vertex>& s) { return rank_subset(std::span<const Vertex>(s), static_cast<unsigned>(s.size())); }, py::arg("subset"));
    m.def("unrank_subset", py::overload_cast<Rank, unsigned>(&unrank_subset), py::arg("rank"), py::arg("r"));

    py::enum_<PatternKind>(m, "PatternKind").value("Complete", PatternKind::Complete).value("MinusOne", PatternKind::MinusOne);
    py::class_<TargetPattern>(m, "TargetPattern")
        .def(py::init([](unsigned order, PatternKind kind) { return TargetPattern{order, kind}; }), py::arg("order"),
             py::arg("kind") = PatternKind::Complete)
        .def_readonly("order", &TargetPattern::order)
        .def_readonly("kind", &TargetPattern::kind)
        .def("edge_count", &TargetPattern::edge_count)
        .def("__str__", &TargetPattern::to_string)
        .def("__repr__", [](const TargetPattern& p) { return "TargetPattern('" + p.to_string() + "')"; })
        .def(py::self == py::self);
    m.def("parse_pattern", &parse_pattern, py::arg("text"), py::arg("r"));
    m.def("parse_avoid_list", &parse_avoid_list, py::arg("text"), py::arg("r"));

    py::class_<ColoredCompleteHypergraph>(m, "Coloring")
        .def(py::init<unsigned, unsigned, Color, std::vector<Color>>(), py::arg("order"), py::arg("uniformity"), py::arg("color_count"),
             py::arg("colors"))
        .def_property_readonly("order", &ColoredCompleteHypergraph::order)
        .def_property_readonly("uniformity", &ColoredCompleteHypergraph::uniformity)
        .def_property_readonly("color_count", &ColoredCompleteHypergraph::color_count)
        .def_property_readonly("colors", &colors_of)
        .def("color_of", [](const ColoredCompleteHypergraph& c, const std::vector<Vertex>& s) { return c.color_of(std::span<const Vertex>(s)); })
        .def("color_histogram", &ColoredCompleteHypergraph::color_histogram)
        .def(py::self == py::self);

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init<unsigned, unsigned, std::vector<Rank>>(), py::arg("order"), py::arg("uniformity"), py::arg("edge_ranks"))
        .def_static("complete", &Hypergraph::complete)
        .def_static("empty", &Hypergraph::empty)
        .def_static("from_pattern", &Hypergraph::from_pattern)
        .def_property_readonly("order", &Hypergraph::order)
        .def_property_readonly("uniformity", &Hypergraph::uniformity)
        .def_property_readonly("edges", &Hypergraph::edges)
        .def("complement", &Hypergraph::complement);

    m.def("write_certificate", &write_certificate, py::arg("coloring"), py::arg("provenance") = "");
    m.def("read_certificate", [](const std::string& text) { return read_certificate(text).payload; }, py::arg("text"));
    m.def("load_certificate", [](const std::filesystem::path& p) { return load_certificate(p).payload; }, py::arg("path"));
    m.def("save_certificate", &save_certificate, py::arg("path"), py::arg("coloring"), py::arg("provenance") = "");

    py::class_<WitnessReport>(m, "WitnessReport")
        .def_readonly("gallai_ok", &WitnessReport::gallai_ok)
        .def_readonly("rainbow_witness", &WitnessReport::rainbow_witness)
        .def_readonly("per_color_findings", &WitnessReport::per_color_findings)
        .def_readonly("certified", &WitnessReport::certified)
        .def_property_readonly("is_certified", &WitnessReport::is_certified);
    m.def(
        "verify_witness",
        [](const ColoredCompleteHypergraph& c, const py::object& avoid, bool gallai, unsigned threads) {
            return verify_witness(c, to_avoid(avoid, c.uniformity()), gallai, ScanOptions{threads});
        },
        py::arg("coloring"), py::arg("avoid"), py::arg("gallai") = true, py::arg("threads") = 1);
    m.def("find_rainbow_simplex", [](const ColoredCompleteHypergraph& c) { return find_rainbow_simplex(c); });
    m.def("find_mono_target", [](const ColoredCompleteHypergraph& c, Color color, const TargetPattern& p) { return find_mono_target(c, color, p); });
    m.def("clique_number", &clique_number);

    m.def("chromatic_data", [](const Hypergraph& h) {
        const auto d = chromatic_data(h);
        return py::make_tuple(d.chi, d.s);
    });

    m.def("pentagon_coloring", &pentagon_coloring);
    m.def("lift_graph", &lift_graph);
    m.def("gallai_substitute", &gallai_substitute, py::arg("outer"), py::arg("inner"), py::arg("inner_color_map") = std::nullopt);
    m.def("burr_blowup", py::overload_cast<const ColoredCompleteHypergraph&, const Hypergraph&>(&burr_blowup));
    m.def("lex_product", &lex_product);
    m.def("lex_compose", &lex_compose);
    m.def("square3", [](const ColoredCompleteHypergraph& c) { return square3(c).coloring; });
    m.def("square4", [](const ColoredCompleteHypergraph& c) { return square4(c).coloring; });

    m.def(
        "search_witness",
        [](unsigned order, unsigned r, const py::object& avoid, bool gallai, std::uint64_t budget, unsigned threads) {
            SearchProblem p;
            p.order = order;
            p.uniformity = r;
            p.avoid = to_avoid(avoid, r);
            p.color_count = static_cast<Color>(p.avoid.size());
            p.gallai_mode = gallai;
            p.node_budget = budget;
            p.threads = threads;
            SearchOutcome out;
            {
                py::gil_scoped_release release;
                out = search_witness(p);
            }
            return py::make_tuple(to_string(out.status), out.coloring, out.nodes_visited);
        },
        py::arg("order"), py::arg("r"), py::arg("avoid"), py::arg("gallai") = false,
        py::arg("budget") = std::numeric_limits<std::uint64_t>::max(), py::arg("threads") = 1);
    m.def(
        "exact_number",
        [](unsigned r, const py::object& avoid, unsigned cap, bool gallai) {
            const auto res = exact_number(r, to_avoid(avoid, r), cap, gallai);
            return py::make_tuple(res.value, res.witness, res.reason);
        },
        py::arg("r"), py::arg("avoid"), py::arg("cap"), py::arg("gallai") = false);

    m.def("chung_graham_value", &chung_graham_value);
    m.def("figure1_table", [] {
        py::list rows;
        for (const auto& row : figure1_table()) {
            py::dict d;
            d["label"] = row.label;
            d["value"] = row.record ? py::cast(row.record->value) : py::none();
            d["key"] = row.record ? py::cast(row.record->key().to_string()) : py::none();
            d["published"] = row.published;
            d["match"] = row.match;
            rows.append(d);
        }
        return rows;
    });
    m.def("render_figure1", [] { return render_table(figure1_table()); });
    m.def(
        "derive_manifest",
        [](const std::string& manifest, bool iterate) {
            DeriveOptions o;
            o.iterate = iterate;
            return derive_bounds(BoundRegistry::from_manifest(manifest), o).registry.to_manifest();
        },
        py::arg("manifest"), py::arg("iterate") = false);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = dispatch(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
