#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lap/io.hpp"
#include "lap/suite.hpp"

namespace py = pybind11;
using namespace lap;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

std::string dump(const json& j) { return j.dump(); }

std::string check(const std::string& param) {
    ArthurParameter p = parameter_from_json(parse(param));
    return dump(json{{"valid", true}, {"summary", p.summary()}, {"dimension", p.dimension()}, {"good_parity", is_good_parity(p)}});
}

std::string verdict(const std::string& datum, bool explain) {
    XuOptions opt;
    opt.record = explain;
    return dump(to_json(nonvanishing(datum_from_json(parse(datum)), opt), explain));
}

std::string report(const std::string& datum, int eps, std::optional<int> alpha_max) {
    return dump(to_json(adams_chain(datum_from_json(parse(datum)), eps, alpha_max)));
}

std::string graph(const std::vector<std::string>& params, bool filter) {
    std::vector<ArthurParameter> seeds;
    for (const auto& s : params) seeds.push_back(parameter_from_json(parse(s)));
    PsiGraph g = filter ? closure_graph(seeds, seeds) : closure_graph(seeds);
    json j = to_json(g);
    auto ext = psi_extrema(g);
    j["max"] = ext.max;
    j["min"] = ext.min;
    j["dot"] = emit_dot(g);
    return dump(j);
}

std::string acceptance(const std::string& dir, int corpus_dim) {
    json arr = json::array();
    for (const auto& r : run_acceptance(SuiteOptions{dir, corpus_dim}))
        arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    return dump(arr);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    m.attr("fixture_dir") = LAP_FIXTURE_DIR;
    m.def("validate", &check, py::arg("param"));
    m.def("decompose", [](const std::string& p) { return dump(to_json(decompose(parameter_from_json(parse(p))))); });
    m.def("packet_data", [](const std::string& p, bool nonzero_only) { return dump(packet_data_json(parameter_from_json(parse(p)), nonzero_only)); },
          py::arg("param"), py::arg("nonzero_only") = false);
    m.def("raising_neighbors", [](const std::string& p) { return dump(raising_json(parameter_from_json(parse(p)))); });
    m.def("psi_graph", &graph, py::arg("params"), py::arg("filter") = false);
    m.def("nonvanishing", &verdict, py::arg("datum"), py::arg("explain") = false);
    m.def("adams_report", &report, py::arg("datum"), py::arg("epsilon"), py::arg("alpha_max") = py::none());
    m.def("compute_d", [](const std::string& d, int eps) { return compute_d(datum_from_json(parse(d)), eps); });
    m.def("obstructions", [](const std::string& p) { return dump(obstructions_json(parameter_from_json(parse(p)))); });
    m.def("verify_monotonicity", [](const std::string& pairs, int eps) {
        return dump(to_json(verify_monotonicity(pairs_from_json(parse(pairs)), eps)));
    });
    m.def("conservation", &conservation, py::arg("known"), py::arg("n"));
    m.def("m_alpha", &m_alpha, py::arg("m"), py::arg("n"));
    m.def("run_acceptance", &acceptance, py::arg("fixture_dir"), py::arg("corpus_dim") = 13);
}
