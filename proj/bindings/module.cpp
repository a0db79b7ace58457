// Python bindings for the main operations: parsing and printing the map
// notation, lifting queries, class membership, word normalization, the
// orbit graph, enumeration, and the bounded verification harness.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qn/notation.hpp"
#include "qn/orbit.hpp"

namespace py = pybind11;
using namespace qn;

namespace {

py::dict report_dict(const VerifyReport& r) {
    py::dict d;
    d["subject"] = r.subject;
    d["bound"] = r.bound;
    d["checked"] = r.checked;
    d["passed"] = r.passed;
    d["failed"] = r.failed;
    d["unknown_skipped"] = r.unknown_skipped;
    py::list ws;
    for (const auto& w : r.witnesses) {
        py::dict jw;
        jw["kind"] = w.kind;
        jw["f"] = w.f;
        if (!w.g.empty()) jw["g"] = w.g;
        if (!w.top.empty()) jw["top"] = w.top;
        if (!w.bottom.empty()) jw["bottom"] = w.bottom;
        ws.append(jw);
    }
    d["witnesses"] = ws;
    d["millis"] = r.millis;
    return d;
}

} // namespace

PYBIND11_MODULE(_qntop, m) {
    m.doc() = "lifting properties and orthogonality classes of maps of finite topological spaces";

    // base first: handlers are consulted in reverse registration order
    py::register_exception<Error>(m, "EngineError");
    py::register_exception<CapExceeded>(m, "CapExceeded");
    py::register_exception<NotationError>(m, "NotationError");

    py::class_<Space>(m, "Space")
        .def_property_readonly("n", &Space::n)
        .def("leq", &Space::leq, py::arg("x"), py::arg("y"))
        .def("is_poset", &Space::is_poset)
        .def("is_discrete", &Space::is_discrete)
        .def("is_connected", &Space::is_connected)
        .def("__str__", [](const Space& s) { return print_space(s); })
        .def("__repr__", [](const Space& s) { return "Space(" + print_space(s) + ")"; });

    py::class_<MapF>(m, "Map")
        .def_property_readonly("dom", [](const MapF& f) { return *f.dom; })
        .def_property_readonly("cod", [](const MapF& f) { return *f.cod; })
        .def_property_readonly("values", [](const MapF& f) { return f.values; })
        .def("is_surjective", &MapF::is_surjective)
        .def("is_injective", &MapF::is_injective)
        .def("is_iso", &MapF::is_iso)
        .def("__str__", [](const MapF& f) { return print_map(f); })
        .def("__repr__", [](const MapF& f) { return "Map(" + print_map(f) + ")"; });

    m.def("parse_space", &parse_space, py::arg("text"));
    m.def("parse_map", &parse_map, py::arg("text"));
    m.def("print_space", &print_space, py::arg("space"));
    m.def("print_map", &print_map, py::arg("map"));

    m.def(
        "lifts", [](const MapF& f, const MapF& g) { return lifts(f, g); }, py::arg("f"),
        py::arg("g"), "does f lift on the left of g");
    m.def(
        "lift_witness",
        [](const MapF& f, const MapF& g) -> py::object {
            auto sq = lift_witness(f, g);
            if (!sq) return py::none();
            py::dict d;
            d["top"] = print_map(sq->top);
            d["bottom"] = print_map(sq->bottom);
            return d;
        },
        py::arg("f"), py::arg("g"), "first failing square, or None when every square lifts");

    m.def("class_names", [] {
        std::vector<std::string> names;
        for (const ClassSpec& s : class_catalogue()) names.push_back(s.name);
        return names;
    });
    m.def(
        "is_in_class",
        [](const std::string& cls, const MapF& f) {
            auto id = class_from_name(cls);
            if (!id) throw Error("unknown class name: " + cls);
            return std::string(tri_name(is_in_class(*id, f)));
        },
        py::arg("class_name"), py::arg("f"));
    m.def(
        "classify",
        [](const MapF& f) {
            py::dict d;
            for (const ClassSpec& s : class_catalogue())
                d[s.name] = std::string(tri_name(is_in_class(s.id, f)));
            return d;
        },
        py::arg("f"));

    m.def("normalize", &normalize, py::arg("word"));
    m.def("orbit_nodes", [] { return orbit_graph().nodes; });
    m.def("orbit_step", [](const std::string& node, const std::string& letter) {
        if (letter != "l" && letter != "r") throw Error("letter must be 'l' or 'r'");
        return orbit_graph().step(node, letter[0]);
    });
    m.def("graph_json", &graph_to_json);
    m.def("graph_dot", &graph_to_dot);

    m.def(
        "canonical_space", [](const Space& s) { return canonical_form(s); }, py::arg("space"));
    m.def(
        "count_spaces",
        [](int n, bool labelled) {
            return enumerate_spaces(n, labelled ? SpaceMode::Labelled : SpaceMode::UpToIso).size();
        },
        py::arg("n"), py::arg("labelled") = false);
    m.def(
        "count_maps",
        [](const Space& a, const Space& b) { return count_maps(a, b); }, py::arg("dom"),
        py::arg("cod"));

    m.def(
        "is_complete_lattice", [](const Space& s) { return is_complete_lattice(s); },
        py::arg("space"));

    m.def(
        "verify_edge",
        [](const std::string& node, const std::string& letter, int bound, int threads) {
            if (letter != "l" && letter != "r") throw Error("letter must be 'l' or 'r'");
            VerifyOptions opts;
            opts.threads = threads;
            return report_dict(verify_edge(node, letter[0], bound, opts));
        },
        py::arg("node"), py::arg("letter"), py::arg("bound") = 2, py::arg("threads") = 1);
    m.def(
        "verify_all",
        [](int bound, int threads) {
            VerifyOptions opts;
            opts.threads = threads;
            py::list out;
            for (const VerifyReport& r : verify_all(bound, opts)) out.append(report_dict(r));
            return out;
        },
        py::arg("bound") = 2, py::arg("threads") = 1);
    m.def(
        "sets_mode_verify", [](int bound) { return report_dict(sets_mode_verify(bound)); },
        py::arg("bound") = 3);

    m.def(
        "find_counterexample",
        [](const MapF& f, const std::string& node, int bound) -> py::object {
            auto ce = find_counterexample(f, node, bound);
            if (!ce) return py::none();
            py::dict d;
            d["witness"] = print_map(ce->g);
            d["top"] = print_map(ce->square.top);
            d["bottom"] = print_map(ce->square.bottom);
            return d;
        },
        py::arg("f"), py::arg("node"), py::arg("bound") = 3);
}
