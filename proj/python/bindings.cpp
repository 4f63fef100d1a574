#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "psl2z/cli.hpp"
#include "psl2z/error.hpp"
#include "psl2z/free_point.hpp"
#include "psl2z/induced.hpp"
#include "psl2z/kernel.hpp"
#include "psl2z/twisted_algebra.hpp"

namespace py = pybind11;
using namespace psl2z;

namespace {

KElem k_from(std::pair<int, int> k) { return {k.first, k.second}; }

}  // namespace

PYBIND11_MODULE(_psl2z, m) {
  m.doc() = "Induced representations of the twisted crossed product for Z2 * Z3";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("parse_gword", [](const std::string& s) { return to_string(parse_gword(s)); },
        "Normal form of a word in a, b, b2.");
  m.def("rewrite_to_free", [](const std::string& s) { return to_string(rewrite_to_free(parse_gword(s))); },
        "Rewrites an element of the kernel in x1, x2.");
  m.def("alpha", [](std::pair<int, int> k, int r) { return to_string(twisted_table().alpha(k_from(k), r)); },
        py::arg("k"), py::arg("r"));
  m.def("cocycle", [](std::pair<int, int> k, std::pair<int, int> l) {
    return to_string(twisted_table().cocycle(k_from(k), k_from(l)));
  });
  m.def("verify_axioms", [] {
    const AxiomReport r = verify_twisted_axioms(twisted_table());
    py::dict out;
    for (const AxiomKind kind : {AxiomKind::AdTwist, AxiomKind::Cocycle, AxiomKind::Normalization}) {
      out[py::str(to_string(kind))] = py::make_tuple(r.passed(kind), r.checked(kind));
    }
    return out;
  });

  py::class_<RepModel>(m, "RepModel")
      .def_property_readonly("dim", &RepModel::dim)
      .def_property_readonly("v1", &RepModel::v1)
      .def_property_readonly("mu", &RepModel::mu)
      .def_property_readonly("angle_turns", &RepModel::angle_turns)
      .def_property_readonly("lambda_", &RepModel::lambda)
      .def("generator", &RepModel::generator);

  m.def("make_rep", &make_rep, py::arg("dim"), py::arg("seed"), py::arg("angle_turns") = std::nullopt);
  m.def("with_lambda", &with_lambda);
  m.def("unitarily_equivalent", &unitarily_equivalent, py::arg("u"), py::arg("w"), py::arg("tol") = 1e-8);

  m.def(
      "intertwiner_dimension",
      [](const RepModel& a, const RepModel& b, double threshold) {
        SolverOptions opt;
        opt.relative_threshold = threshold;
        const IntertwinerSpace s = intertwiners(a, b, twisted_table(), opt);
        return py::make_tuple(s.dimension, s.second_smallest_ratio());
      },
      py::arg("a"), py::arg("b"), py::arg("threshold") = 1e-8);

  m.def(
      "build_family",
      [](const RepModel& model, int count, double margin) {
        SelectOptions opt;
        opt.margin = margin;
        std::vector<std::pair<std::string, Complex>> out;
        for (const auto& c : psl2z::build_family(model, count, opt)) out.emplace_back(c.turns_text(), c.value);
        return out;
      },
      py::arg("model"), py::arg("count"), py::arg("margin") = 1e-3);

  m.def(
      "is_free_point",
      [](const RepModel& model, Complex lambda, double tol) {
        return verify_free_point(model, lambda, twisted_table(), tol).free;
      },
      py::arg("model"), py::arg("lambda_"), py::arg("tol") = 1e-8);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
