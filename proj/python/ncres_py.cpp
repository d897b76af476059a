#include "ncres/expr_parse.hpp"
#include "ncres/runner.hpp"
#include "ncres/wick.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ncres;

PYBIND11_MODULE(_ncres, m) {
    m.doc() = "exact residue engine for perturbed de Rham Hodge operators";

    m.def("theorem_tags", &theorem_tags);
    m.def(
        "theorem_json",
        [](const std::string& tag, const std::string& perturbation, bool show_cases, bool numeric) {
            const TheoremInfo& info = theorem_info(tag);
            py::gil_scoped_release release;
            return theorem_json(assemble_theorem(info.n, tag, parse_perturbation(perturbation)), show_cases,
                                numeric);
        },
        py::arg("tag"), py::arg("perturbation") = "A", py::arg("show_cases") = true, py::arg("numeric") = false);
    m.def(
        "manifest_json",
        [](const std::string& path, bool numeric) {
            py::gil_scoped_release release;
            return report_json(run_manifest(path, numeric));
        },
        py::arg("path"), py::arg("numeric") = false);
    m.def("fiber_trace",
          [](const std::string& word) { return trace(perturbation_elem(parse_perturbation(word), false)).str(); });
    m.def("interior_prefactor", [](int n) { return interior_prefactor(n).str(); });
    m.def("normalize", [](const std::string& e) { return parse_result_expr(e).str(); });
    m.def("expr_equal",
          [](const std::string& a, const std::string& b) { return parse_result_expr(a) == parse_result_expr(b); });

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
}
