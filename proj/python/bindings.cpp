#include "tsc/braid.hpp"
#include "tsc/hecke.hpp"
#include "tsc/suites.hpp"
#include "tsc/weyl.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tsc;

PYBIND11_MODULE(_tsc, m) {
    m.doc() = "twisted standard complexes over the affine Hecke category";

    py::register_exception<std::invalid_argument>(m, "InvalidArgument", PyExc_ValueError);

    py::class_<Certificate>(m, "Certificate")
        .def_readonly("theorem", &Certificate::theorem)
        .def_readonly("n", &Certificate::n)
        .def_readonly("parameters", &Certificate::parameters)
        .def_readonly("steps", &Certificate::steps)
        .def_readonly("verdict", &Certificate::verdict)
        .def("failure", &Certificate::failure)
        .def("to_json", [](const Certificate &c) { return certificate_to_json(c).dump(); })
        .def("__bool__", [](const Certificate &c) { return c.verdict; })
        .def("__repr__", [](const Certificate &c) {
            return "<Certificate " + c.theorem + " n=" + std::to_string(c.n) + (c.verdict ? " pass>" : " fail>");
        });

    m.def("build_f_json", [](int n, const std::string &backend) { return build_f_json(n, backend).dump(); },
          py::arg("n"), py::arg("backend") = "sign");
    m.def("verify_complex_json", [](const std::string &text) { return verify_complex_json(json::parse(text)); });
    m.def("run_suite", &run_suite, py::arg("suite"), py::arg("n") = 2, py::arg("seed") = 0, py::arg("cases") = 500,
          py::call_guard<py::gil_scoped_release>());

    m.def("hecke", [](int n, const std::string &expr) { return parse_hecke(n, expr).str_kl(); }, py::arg("n"),
          py::arg("expr"));
    m.def("hecke_standard", [](int n, const std::string &expr) { return parse_hecke(n, expr).serialize(); },
          py::arg("n"), py::arg("expr"));
    m.def("flatten", [](int n, const std::string &word) { return flatten(BraidWord::parse(n, word)).str(); },
          py::arg("n"), py::arg("word"));
    m.def("kl", [](int n, const std::string &word) { return kl_basis(Weyl::parse_word(n, word)).serialize(); },
          py::arg("n"), py::arg("word"));
    m.def("is_smooth", [](int n, const std::string &word) { return is_smooth(Weyl::parse_word(n, word)); },
          py::arg("n"), py::arg("word"));
    m.def("preferred_word", [](int n, const std::vector<int> &members) { return preferred_word(Subset::of(n, members)); },
          py::arg("n"), py::arg("subset"));
}
