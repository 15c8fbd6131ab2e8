#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trumping/catalysis.hpp"
#include "trumping/families.hpp"
#include "trumping/geometry.hpp"
#include "trumping/relations.hpp"

namespace py = pybind11;
using namespace trumping;

namespace {

DVector make_vector(const std::vector<double>& comps) { return DVector(comps); }

DVector make_exact(const std::vector<long long>& comps) {
  return DVector::from_integers(comps);
}

}  // namespace

PYBIND11_MODULE(_trumping, m) {
  m.doc() = "Majorization, trumping and power-majorization toolkit";

  py::class_<DVector>(m, "DVector")
      .def(py::init(&make_vector), py::arg("components"))
      .def_static("from_integers", &make_exact)
      .def_property_readonly("dim", &DVector::dim)
      .def_property_readonly("values", &DVector::values)
      .def_property_readonly("exact", &DVector::exact)
      .def("sum", &DVector::sum)
      .def("__len__", &DVector::dim)
      .def("__getitem__",
           [](const DVector& v, std::size_t i) {
             if (i >= v.dim()) throw py::index_error();
             return v[i];
           });

  py::enum_<Outcome>(m, "Outcome")
      .value("Holds", Outcome::Holds)
      .value("Fails", Outcome::Fails)
      .value("Inconclusive", Outcome::Inconclusive);

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("outcome", &Verdict::outcome)
      .def_readonly("reason", &Verdict::reason)
      .def_readonly("witness_r", &Verdict::witness_r)
      .def_readonly("min_gap", &Verdict::min_gap)
      .def("holds", &Verdict::holds)
      .def("fails", &Verdict::fails);

  py::class_<MajorizationVerdict>(m, "MajorizationVerdict")
      .def_readonly("holds", &MajorizationVerdict::holds)
      .def_readonly("first_violation_k", &MajorizationVerdict::first_violation_k)
      .def_readonly("margins", &MajorizationVerdict::margins)
      .def_readonly("ascending_margins", &MajorizationVerdict::ascending_margins)
      .def_readonly("exact", &MajorizationVerdict::exact);

  py::class_<PowerVerdict>(m, "PowerVerdict")
      .def_readonly("verdict", &PowerVerdict::verdict)
      .def_readonly("strict", &PowerVerdict::strict)
      .def_readonly("witness_p", &PowerVerdict::witness_p)
      .def_readonly("min_gap", &PowerVerdict::min_gap);

  py::class_<ScanConfig>(m, "ScanConfig")
      .def(py::init<>())
      .def_readwrite("r_lo", &ScanConfig::r_lo)
      .def_readwrite("r_hi", &ScanConfig::r_hi)
      .def_readwrite("grid_points", &ScanConfig::grid_points)
      .def_readwrite("margin_tol", &ScanConfig::margin_tol);

  py::class_<Catalyst>(m, "Catalyst").def(py::init<DVector>()).def_readonly("z", &Catalyst::z);

  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init<>())
      .def_readwrite("max_dim", &SearchConfig::max_dim)
      .def_readwrite("restarts_per_dim", &SearchConfig::restarts_per_dim)
      .def_readwrite("seed", &SearchConfig::seed);

  py::class_<CatalystSearchReport>(m, "CatalystSearchReport")
      .def_readonly("found", &CatalystSearchReport::found)
      .def_readonly("catalyst", &CatalystSearchReport::catalyst)
      .def_readonly("prefilter", &CatalystSearchReport::prefilter);

  m.def("sort_desc", &sort_desc);
  m.def("sort_asc", &sort_asc);
  m.def("tensor", &tensor);
  m.def("entropy", &entropy);
  m.def("klimesh_f",
        [](double r, const DVector& x) { return klimesh_f(r, x).as_double(); });
  m.def("power_mean", &power_mean);
  m.def("gap",
        [](double r, const DVector& x, const DVector& y) {
          return gap(r, x, y).as_double();
        });

  m.def("majorize", &majorize);
  m.def("submajorize", &submajorize);
  m.def("supermajorize", &supermajorize);
  m.def("power_majorize", &power_majorize, py::arg("x"), py::arg("y"),
        py::arg("cfg") = ScanConfig{});
  m.def("trumped", &trumped, py::arg("x"), py::arg("y"),
        py::arg("cfg") = ScanConfig{});
  m.def("turgut_conditions", &turgut_conditions, py::arg("x"), py::arg("y"),
        py::arg("cfg") = ScanConfig{});

  m.def("check_catalyst", &check_catalyst);
  m.def("search_catalyst", &search_catalyst, py::arg("x"), py::arg("y"),
        py::arg("cfg") = SearchConfig{});

  m.def("bennett_pair", [](std::size_t n) {
    BennettPair p = bennett_pair(n);
    return std::make_pair(p.x, p.y);
  });
  m.def("bennett05_pair", &bennett05_pair);
  m.def("midpoint_sum", &midpoint_sum);
  m.def("midpoint_monotone_check", &midpoint_monotone_check);

  m.def("in_S", &in_S);
  m.def("rado_decompose", [](const DVector& x, const DVector& y) {
    ConvexDecomposition d = rado_decompose(x, y);
    py::list terms;
    for (const auto& t : d.terms) terms.append(py::make_tuple(t.weight, t.perm));
    return py::make_tuple(terms, d.reconstruction_error);
  });
}
