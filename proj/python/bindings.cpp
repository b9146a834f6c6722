#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vknot/appendix.hpp"
#include "vknot/catalog.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"
#include "vknot/report.hpp"

namespace py = pybind11;
using namespace vknot;

namespace {

AppendixStyle style_from(const std::string& s) {
  if (s == "braced") return AppendixStyle::Braced;
  if (s == "symmetric") return AppendixStyle::Symmetric;
  throw py::value_error("style must be 'braced' or 'symmetric'");
}

GaussDiagram as_diagram(const py::object& o) {
  if (py::isinstance<GaussDiagram>(o)) return o.cast<GaussDiagram>();
  return GaussDiagram::parse(o.cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Intersection polynomials of virtual knots";

  py::class_<LaurentPoly>(m, "LaurentPoly")
      .def(py::init<>())
      .def_static("parse", &LaurentPoly::parse)
      .def_static("monomial", &LaurentPoly::monomial, py::arg("coefficient"), py::arg("exponent"))
      .def("terms", [](const LaurentPoly& p) { return std::map<std::int64_t, std::int64_t>(p.terms()); })
      .def("coefficient", &LaurentPoly::coefficient)
      .def("max_degree", &LaurentPoly::max_degree)
      .def("min_degree", &LaurentPoly::min_degree)
      .def("is_zero", &LaurentPoly::is_zero)
      .def("is_reciprocal", &LaurentPoly::is_reciprocal)
      .def("substitute_inverse", &LaurentPoly::substitute_inverse)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__rmul__", [](const LaurentPoly& p, std::int64_t m) { return m * p; })
      .def("__mul__", [](const LaurentPoly& p, std::int64_t m) { return m * p; })
      .def("__str__", &LaurentPoly::str)
      .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly('" + p.str() + "')"; });

  py::class_<GaussDiagram>(m, "GaussDiagram")
      .def(py::init<>())
      .def_static("parse", &GaussDiagram::parse)
      .def("canonical", &GaussDiagram::canonical)
      .def("equivalent", &GaussDiagram::equivalent)
      .def_property_readonly("chord_count", &GaussDiagram::chord_count)
      .def_property_readonly("signs", [](const GaussDiagram& d) {
        std::vector<int> out;
        for (auto s : d.signs()) out.push_back(value(s));
        return out;
      })
      .def(py::self == py::self)
      .def("__str__", &GaussDiagram::str)
      .def("__repr__", [](const GaussDiagram& d) { return "GaussDiagram('" + d.str() + "')"; });

  m.def("reverse", &reverse);
  m.def("vertical_mirror", &vertical_mirror);
  m.def("horizontal_mirror", &horizontal_mirror);
  m.def("random_diagram", &random_diagram, py::arg("chords"), py::arg("seed"));

  py::class_<InvariantSet>(m, "InvariantSet")
      .def_readonly("writhe", &InvariantSet::writhe)
      .def_readonly("W", &InvariantSet::W)
      .def_readonly("Wbar", &InvariantSet::Wbar)
      .def_readonly("f01", &InvariantSet::f01)
      .def_readonly("f10", &InvariantSet::f10)
      .def_readonly("f00", &InvariantSet::f00)
      .def_readonly("f11", &InvariantSet::f11)
      .def_readonly("I", &InvariantSet::I)
      .def_readonly("II", &InvariantSet::II)
      .def_property_readonly("III_representative",
                             [](const InvariantSet& s) { return canonical_representative(s.III); })
      .def_property_readonly("III_modulus", [](const InvariantSet& s) { return s.III.modulus; });

  m.def("invariants", [](const py::object& code) { return all_invariants(as_diagram(code)); }, py::arg("code"),
        "Invariants of a Gauss code string or GaussDiagram.");
  m.def(
      "record",
      [](const py::object& code, const std::string& name) {
        const auto d = as_diagram(code);
        return record_json(name, d, all_invariants(d)).dump();
      },
      py::arg("code"), py::arg("name") = "", "JSON record text, as printed by `vknot table`.");
  m.def(
      "third_classes_equal",
      [](const py::object& a, const py::object& b) {
        return classes_coincide(all_invariants(as_diagram(a)).III, all_invariants(as_diagram(b)).III);
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "distinguish",
      [](const py::object& a, const py::object& b) {
        return describe(compare(all_invariants(as_diagram(a)), all_invariants(as_diagram(b))));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "bounds",
      [](const py::object& code) {
        const auto s = all_invariants(as_diagram(code));
        auto c = crossing_lower_bound(s), vc = virtual_crossing_lower_bound(s);
        return py::make_tuple(py::make_tuple(c.value, c.source), py::make_tuple(vc.value, vc.source));
      },
      py::arg("code"), "((c bound, source), (vc bound, source))");
  m.def(
      "symmetry_identities_hold", [](const py::object& code) { return symmetry_identity_check(as_diagram(code)).all_hold(); },
      py::arg("code"));

  m.def(
      "format_appendix", [](const LaurentPoly& p, const std::string& style) { return format_appendix(p, style_from(style)); },
      py::arg("poly"), py::arg("style"));
  m.def(
      "parse_appendix",
      [](const std::string& text, const std::string& style) { return parse_appendix(text, style_from(style)); },
      py::arg("text"), py::arg("style"));

  m.def(
      "apply_move", [](const py::object& code, const std::string& move) { return vknot::apply_move(as_diagram(code), parse_move(move)); },
      py::arg("code"), py::arg("move"));
  m.def(
      "random_walk",
      [](const py::object& code, std::size_t steps, std::uint64_t seed, std::size_t max_chords) {
        auto walk = random_walk(as_diagram(code), steps, seed, max_chords);
        std::vector<std::string> log;
        for (const auto& mv : walk.log) log.push_back(format_move(mv));
        return py::make_tuple(walk.diagram, log);
      },
      py::arg("code"), py::arg("steps"), py::arg("seed"), py::arg("max_chords") = kDefaultMaxChords);

  m.def("selftest", [] {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (auto& r : run_selftest()) out.emplace_back(r.name, r.passed, r.detail);
    return out;
  });
}
