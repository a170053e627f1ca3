#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cohomcheck/atlas.hpp"
#include "cohomcheck/chern.hpp"
#include "cohomcheck/cohomology.hpp"
#include "cohomcheck/cyclic.hpp"
#include "cohomcheck/resolution.hpp"
#include "cohomcheck/symbolic.hpp"
#include "cohomcheck/verify.hpp"

namespace py = pybind11;
using namespace cohomcheck;

namespace {

// JSON crosses the boundary as text; the Python side parses it.
std::string verify_json(int p, const std::vector<std::string>& only, bool long_mode, bool runtimes) {
  VerifyOptions o;
  o.p = p;
  o.only = only;
  o.long_mode = long_mode;
  VerificationReport rep;
  {
    py::gil_scoped_release nogil;
    rep = verify_all(o);
  }
  return rep.to_json(runtimes).dump();
}

std::vector<int> betti(int p, const std::string& group, int degree) {
  bool big = group == "H" || group == "A3" || group == "A3'" || group == "piH";
  py::gil_scoped_release nogil;
  Atlas at(p, Atlas::Options{.big_groups = big});
  const auto* g = at.group(group);
  if (!g) throw std::invalid_argument("unknown group " + group);
  return MinimalResolution(*g, degree).betti_numbers();
}

std::vector<int> bar_betti_of(int p, const std::string& group, int degree) {
  py::gil_scoped_release nogil;
  Atlas at(p, Atlas::Options{.big_groups = false});
  const auto* g = at.group(group);
  if (!g) throw std::invalid_argument("unknown group " + group);
  return bar_betti(*g, degree);
}

std::map<std::string, int> group_orders(int p, bool big) {
  Atlas at(p, Atlas::Options{.big_groups = big});
  std::map<std::string, int> out;
  for (const auto& [name, g] : at.groups()) out[name] = g->order();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact mod-p cohomology checks for monomial subgroups of PU(p) x PU(p)";
  m.attr("__version__") = kVersion;

  py::register_exception<VerifyError>(m, "VerifyError", PyExc_ValueError);
  py::register_exception<GroupError>(m, "GroupError", PyExc_ValueError);
  py::register_exception<SymbolicError>(m, "SymbolicError", PyExc_ValueError);
  py::register_exception<ChernError>(m, "ChernError", PyExc_ValueError);

  m.def("verify_json", &verify_json, py::arg("p") = 3, py::arg("only") = std::vector<std::string>{},
        py::arg("long_mode") = false, py::arg("runtimes") = true);
  m.def("check_groups", &check_groups);
  m.def("betti", &betti, py::arg("p"), py::arg("group"), py::arg("degree"),
        "Betti numbers h^0..h^degree of a named atlas group");
  m.def("bar_betti", &bar_betti_of, py::arg("p"), py::arg("group"), py::arg("degree"),
        "Betti numbers from the normalized bar complex (small groups only)");
  m.def("group_orders", &group_orders, py::arg("p") = 3, py::arg("big_groups") = true);
  m.def("cyclic_json", [](int p) {
    auto a = kernel_image_analysis(p);
    auto e = e2_terms(p);
    return nlohmann::ordered_json{{"kernel_image", a.to_json()}, {"e2", e.to_json()}}.dump();
  });
  m.def("characters_json", [](int p) {
    py::gil_scoped_release nogil;
    Atlas at(p);
    return character_report(at).to_json().dump();
  });

  py::class_<SymbolicClass>(m, "SymbolicClass")
      .def_property_readonly("p", &SymbolicClass::p)
      .def("is_zero", &SymbolicClass::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__rmul__", [](const SymbolicClass& u, int c) { return c * u; })
      .def("__pow__", [](const SymbolicClass& u, int e) { return pow(u, e); });

  py::class_<SymbolicRing>(m, "SymbolicRing")
      .def(py::init<int, std::vector<std::string>>(), py::arg("p"), py::arg("letters"))
      .def_property_readonly("p", &SymbolicRing::p)
      .def_property_readonly("rank", &SymbolicRing::rank)
      .def("gen", &SymbolicRing::gen)
      .def("one", &SymbolicRing::one)
      .def("zero", &SymbolicRing::zero)
      .def("dim", &SymbolicRing::dim)
      .def("format", &SymbolicRing::to_string);

  m.def("q0", &q0);
  m.def("q1", &q1);
  m.def("reduce_mod_M", &reduce_mod_M, py::arg("u"), py::arg("z_index"));
}
