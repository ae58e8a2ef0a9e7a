// Python bindings for the main toolkit operations.  Verdict structs cross
// into Python as plain dicts; errors map onto ValueError/RuntimeError.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "mcl/curve.hpp"
#include "mcl/errors.hpp"
#include "mcl/gamma.hpp"
#include "mcl/ideal.hpp"
#include "mcl/io.hpp"
#include "mcl/newton.hpp"
#include "mcl/rr.hpp"

namespace py = pybind11;

namespace {

py::dict rr_dict(const mcl::RRVerdict& v) {
  py::dict d;
  d["horizon"] = v.horizon;
  d["status"] = v.confirmed() ? "confirmed" : "falsified";
  if (!v.confirmed()) {
    d["witness"] = v.witness->monomial;
    d["level"] = v.witness->level;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_mcl, m) {
  m.doc() = "exact monomial and binomial ideal toolkit";

  py::register_exception<mcl::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<mcl::DimensionMismatch>(m, "DimensionMismatch",
                                                 PyExc_ValueError);
  py::register_exception<mcl::InternalCheckError>(m, "InternalCheckError",
                                                  PyExc_RuntimeError);

  py::class_<mcl::MonomialIdeal>(m, "MonomialIdeal")
      .def(py::init<int, std::vector<mcl::ExponentVector>>(),
           py::arg("num_vars"), py::arg("generators"))
      .def_property_readonly("num_vars", &mcl::MonomialIdeal::num_vars)
      .def_property_readonly(
          "generators",
          [](const mcl::MonomialIdeal& I) { return I.generators(); })
      .def("is_zero", &mcl::MonomialIdeal::is_zero)
      .def("is_unit", &mcl::MonomialIdeal::is_unit)
      .def(
          "__eq__",
          [](const mcl::MonomialIdeal& a, const mcl::MonomialIdeal& b) {
            return a == b;
          },
          py::is_operator())
      .def("__repr__", [](const mcl::MonomialIdeal& I) {
        std::string s = "MonomialIdeal(" + std::to_string(I.num_vars()) + ", [";
        bool first = true;
        for (const auto& g : I.generators()) {
          if (!first) s += ", ";
          s += mcl::format_monomial(g, 1);
          first = false;
        }
        return s + "])";
      });

  m.def("zero", &mcl::MonomialIdeal::zero, py::arg("num_vars"));
  m.def("unit", &mcl::MonomialIdeal::unit, py::arg("num_vars"));

  m.def("parse_ideal", &mcl::parse_ideal_text, py::arg("text"),
        py::arg("index_base") = 1, py::arg("num_vars") = py::none());
  m.def("format_ideal", &mcl::format_ideal_text, py::arg("ideal"),
        py::arg("index_base") = 1);
  m.def("format_monomial", &mcl::format_monomial, py::arg("monomial"),
        py::arg("index_base") = 1);
  m.def("ideal_to_json", &mcl::ideal_to_json, py::arg("ideal"));
  m.def("ideal_from_json", &mcl::ideal_from_json, py::arg("text"));

  m.def("contains", &mcl::contains, py::arg("ideal"), py::arg("monomial"));
  m.def("is_subset", &mcl::is_subset, py::arg("inner"), py::arg("outer"));
  m.def("multiply", &mcl::multiply, py::arg("left"), py::arg("right"));
  m.def("power", &mcl::power, py::arg("ideal"), py::arg("exponent"));
  m.def("intersect", &mcl::intersect, py::arg("left"), py::arg("right"));
  m.def("colon", &mcl::colon, py::arg("ideal"), py::arg("by"));

  m.def("integral_closure", &mcl::integral_closure, py::arg("ideal"));
  m.def(
      "is_integrally_closed",
      [](const mcl::MonomialIdeal& I) {
        const auto v = mcl::is_integrally_closed(I);
        py::dict d;
        d["closed"] = v.closed;
        d["missing"] = v.missing;
        return d;
      },
      py::arg("ideal"));
  m.def(
      "is_normal_up_to",
      [](const mcl::MonomialIdeal& I, int max_power) {
        const auto v = mcl::is_normal_up_to(I, max_power);
        py::dict d;
        d["checked_up_to"] = v.checked_up_to;
        d["fails_at"] = v.fails_at ? py::cast(*v.fails_at) : py::none();
        d["witnesses"] = v.witnesses;
        return d;
      },
      py::arg("ideal"), py::arg("max_power") = 2);
  m.def("block_ideal", &mcl::block_ideal, py::arg("exponents"));

  m.def(
      "colon_chain",
      [](const mcl::MonomialIdeal& I, int horizon) {
        return mcl::colon_chain(I, horizon);
      },
      py::arg("ideal"), py::arg("horizon"));
  m.def(
      "is_ratliff_rush_up_to",
      [](const mcl::MonomialIdeal& I, int horizon) {
        return rr_dict(mcl::is_ratliff_rush_up_to(I, horizon));
      },
      py::arg("ideal"), py::arg("horizon") = 4);

  m.def(
      "gamma_ideal",
      [](const std::string& spec_json) {
        return mcl::gamma_ideal(mcl::gamma_spec_from_json(spec_json));
      },
      py::arg("spec_json"));
  m.def(
      "excluded_by_lemma",
      [](const mcl::ExponentVector& delta, const std::string& spec_json) {
        return mcl::excluded_by_lemma(delta, mcl::gamma_spec_from_json(spec_json));
      },
      py::arg("monomial"), py::arg("spec_json"));

  m.def(
      "analyze_curve",
      [](int n, std::int64_t m0, std::int64_t d, int power, int rr_horizon) {
        return mcl::report_to_json(
            mcl::analyze(mcl::CurveSpec(n, m0, d), power, rr_horizon));
      },
      py::arg("n"), py::arg("m0"), py::arg("d") = 1, py::arg("power") = 1,
      py::arg("rr_horizon") = 4);
}
