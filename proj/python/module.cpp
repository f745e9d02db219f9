#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gfree/bounds.hpp"
#include "gfree/campaign.hpp"
#include "gfree/errors.hpp"
#include "gfree/generators.hpp"
#include "gfree/graph_io.hpp"
#include "gfree/pattern.hpp"
#include "gfree/solvers.hpp"

#include <sstream>

namespace py = pybind11;
using namespace gfree;

namespace {

py::object to_python(const nlohmann::json& j)
{
    switch (j.type()) {
    case nlohmann::json::value_t::null:
        return py::none();
    case nlohmann::json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
        return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
        return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float:
        return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
        return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
        py::list out;
        for (const auto& x : j) out.append(to_python(x));
        return out;
    }
    default: {
        py::dict out;
        for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
        return out;
    }
    }
}

Graph as_graph(const py::object& obj)
{
    if (py::isinstance<Graph>(obj)) return obj.cast<Graph>();
    const auto text = obj.cast<std::string>();
    if (auto g = named_graph(text)) return *g;
    if (text.find(';') != std::string::npos) return parse_edge_list(text);
    return parse_graph6(text);
}

PatternSpec as_pattern(const std::string& text, bool induced)
{
    return parse_pattern(text, induced ? CopyMode::Induced : CopyMode::Subgraph);
}

SolveMode as_mode(const std::string& mode)
{
    if (mode == "bnb" || mode == "branch-and-bound") return SolveMode::BranchAndBound;
    if (mode == "bruteforce") return SolveMode::BruteForce;
    throw ParseError("mode must be 'bnb' or 'bruteforce'");
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Maximum G-free vertex subsets: exact solvers and bounds";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("add_edge", &Graph::add_edge)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("edges", &Graph::edges)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
        .def("graph6", [](const Graph& g) { return to_graph6(g); })
        .def("__eq__", &Graph::operator==)
        .def("__repr__", [](const Graph& g) { return "Graph('" + to_graph6(g) + "')"; });

    m.def("graph", &as_graph, py::arg("spec"),
          "Named graph (K6, C5, petersen, K1_4), graph6 string, or edge list '3; 0 1, 1 2'.");
    m.def("from_graph6", [](const std::string& s) { return parse_graph6(s); });
    m.def("gnp", &gnp_graph, py::arg("n"), py::arg("p"), py::arg("seed"));

    m.def(
        "solve",
        [](const py::object& g, const std::string& pattern, const std::string& mode, bool induced) {
            return to_python(to_json(max_free_subset(as_graph(g), as_pattern(pattern, induced), as_mode(mode),
                                                     SolverCaps::from_env())));
        },
        py::arg("graph"), py::arg("pattern") = "K2", py::arg("mode") = "bnb", py::arg("induced") = false,
        "Exact maximum free subset as a dict with size, best, nodes_explored, mode, certified_optimal.");

    m.def("independence_number", [](const py::object& g) { return independence_number(as_graph(g)).size; });
    m.def("forest_number", [](const py::object& g) { return forest_number(as_graph(g)).forest_number; });
    m.def(
        "free_chromatic_number",
        [](const py::object& g, const std::string& pattern, bool induced) {
            return gfree_chromatic_number(as_graph(g), as_pattern(pattern, induced), SolverCaps::from_env()).classes;
        },
        py::arg("graph"), py::arg("pattern") = "K2", py::arg("induced") = false);

    m.def(
        "quick_exact",
        [](const py::object& g, const std::string& pattern, bool induced) -> py::object {
            const auto q = quick_exact(as_graph(g), as_pattern(pattern, induced));
            if (!q.value) return py::none();
            return py::make_tuple(*q.value, q.rule);
        },
        py::arg("graph"), py::arg("pattern"), py::arg("induced") = false,
        "(value, rule) when a closed form applies, otherwise None.");

    m.def(
        "bounds",
        [](const py::object& obj, const std::string& pattern, const std::vector<std::string>& selection,
           bool induced) {
            const Graph g = as_graph(obj);
            const PatternSpec p = as_pattern(pattern, induced);
            const SolverCaps caps = SolverCaps::from_env();
            const SolveResult optimum = max_free_subset(g, p, SolveMode::BranchAndBound, caps);
            auto arr = nlohmann::json::array();
            for (const auto& r : evaluate_bounds(g, p, optimum, selection, caps)) arr.push_back(to_json(r));
            return to_python({{"optimum", to_json(optimum)}, {"bounds", arr}});
        },
        py::arg("graph"), py::arg("pattern") = "K2", py::arg("selection") = std::vector<std::string>{},
        py::arg("induced") = false);

    m.def(
        "verify",
        [](const std::string& config_text) {
            CampaignConfig base;
            base.caps = SolverCaps::from_env();
            const CampaignConfig config = parse_config(config_text, base);
            std::ostringstream records;
            CampaignSummary summary;
            {
                py::gil_scoped_release release;
                summary = run_campaign(config, &records);
            }
            py::list lines;
            std::istringstream in(records.str());
            for (std::string line; std::getline(in, line);)
                if (!line.empty()) lines.append(to_python(nlohmann::json::parse(line)));
            py::dict out;
            out["instances"] = summary.instances;
            out["violations"] = summary.violations;
            out["csv"] = summary.csv();
            out["records"] = lines;
            return out;
        },
        py::arg("config"), "Run a campaign from 'key = value' text; returns the summary and the records.");

    m.attr("bound_names") = known_bound_names();
}
