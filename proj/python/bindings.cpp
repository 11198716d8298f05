#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relcalc/debranges.hpp"
#include "relcalc/errors.hpp"
#include "relcalc/extensions.hpp"
#include "relcalc/io.hpp"
#include "relcalc/jacobi.hpp"
#include "relcalc/spectra.hpp"
#include "relcalc/transforms.hpp"

namespace py = pybind11;
using namespace relcalc;

PYBIND11_MODULE(_relcalc, m) {
  m.doc() = "Finite-dimensional calculus of linear relations";

  // Translators run newest-first: register the base class before the
  // subclass so SchemaError is not swallowed by the generic handler.
  py::register_exception<Error>(m, "RelcalcError");
  py::register_exception<SchemaError>(m, "SchemaError");

  py::class_<ToleranceProfile>(m, "ToleranceProfile")
      .def(py::init<>())
      .def_readwrite("rank_rel", &ToleranceProfile::rank_rel)
      .def_readwrite("psd_abs", &ToleranceProfile::psd_abs)
      .def_readwrite("eq_tol", &ToleranceProfile::eq_tol);

  py::class_<Subspace>(m, "Subspace")
      .def_static("span",
                  py::overload_cast<const Matrix&, ToleranceProfile>(
                      &Subspace::span),
                  py::arg("columns"), py::arg("tol") = ToleranceProfile{})
      .def_property_readonly("dim", &Subspace::dim)
      .def("basis", &Subspace::basis)
      .def("member", &Subspace::member)
      .def("equals", &Subspace::equals)
      .def("contains", &Subspace::contains);

  py::class_<LinearRelation>(m, "LinearRelation")
      .def(py::init<Eigen::Index, ToleranceProfile>(), py::arg("n"),
           py::arg("tol") = ToleranceProfile{})
      .def_static("graph", &LinearRelation::graph, py::arg("matrix"),
                  py::arg("tol") = ToleranceProfile{})
      .def_static("from_pairs", &LinearRelation::from_pairs, py::arg("pairs"),
                  py::arg("tol") = ToleranceProfile{})
      .def_static("from_stacked", &LinearRelation::from_stacked, py::arg("n"),
                  py::arg("stacked"), py::arg("tol") = ToleranceProfile{})
      .def_property_readonly("ambient_dim", &LinearRelation::ambient_dim)
      .def_property_readonly("dim", &LinearRelation::dim)
      .def("f_block", &LinearRelation::f_block)
      .def("g_block", &LinearRelation::g_block)
      .def("equals", &LinearRelation::equals)
      .def("contains", &LinearRelation::contains);

  py::class_<RelationParts>(m, "RelationParts")
      .def_readonly("dom", &RelationParts::dom)
      .def_readonly("ran", &RelationParts::ran)
      .def_readonly("ker", &RelationParts::ker)
      .def_readonly("mul", &RelationParts::mul);

  py::class_<ClassificationReport>(m, "ClassificationReport")
      .def_readonly("is_operator", &ClassificationReport::is_operator)
      .def_readonly("is_bounded", &ClassificationReport::is_bounded)
      .def_readonly("is_symmetric", &ClassificationReport::is_symmetric)
      .def_readonly("is_selfadjoint", &ClassificationReport::is_selfadjoint)
      .def_readonly("is_dissipative", &ClassificationReport::is_dissipative)
      .def_readonly("is_positive", &ClassificationReport::is_positive)
      .def_readonly("is_contraction", &ClassificationReport::is_contraction)
      .def_readonly("is_isometry", &ClassificationReport::is_isometry)
      .def_readonly("is_unitary", &ClassificationReport::is_unitary)
      .def_readonly("is_maximal_dissipative",
                    &ClassificationReport::is_maximal_dissipative);

  m.def("parts", &parts);
  m.def("inverse", &inverse);
  m.def("adjoint", &adjoint);
  m.def("add", &add);
  m.def("compose", &compose);
  m.def("scale", &scale);
  m.def("shift", &shift);
  m.def("direct_sum", &direct_sum);
  m.def("multivalued_part", &multivalued_part);
  m.def("operator_part", &operator_part);
  m.def("reduce", &reduce);
  m.def("classify", &classify);
  m.def("deficiency_space", &deficiency_space);
  m.def("deficiency_index", &deficiency_index);
  m.def("operator_norm", &operator_norm);
  m.def("operator_matrix", &operator_matrix);

  m.def("cayley", &cayley);
  m.def("z_transform", &z_transform);

  py::class_<PencilEigenvalue>(m, "PencilEigenvalue")
      .def_readonly("value", &PencilEigenvalue::value)
      .def_readonly("geometric", &PencilEigenvalue::geometric)
      .def_readonly("algebraic", &PencilEigenvalue::algebraic);

  py::class_<SpectrumReport>(m, "SpectrumReport")
      .def_readonly("finite_eigenvalues", &SpectrumReport::finite_eigenvalues)
      .def_readonly("infinite_multiplicity",
                    &SpectrumReport::infinite_multiplicity)
      .def_readonly("infinite_algebraic", &SpectrumReport::infinite_algebraic);

  m.def("eigenvalues", &eigenvalues);
  m.def("in_quasi_regular", &in_quasi_regular);
  m.def("in_regular", &in_regular);

  py::class_<ExtensionParameter>(m, "ExtensionParameter")
      .def(py::init<>())
      .def_readwrite("zeta", &ExtensionParameter::zeta)
      .def_readwrite("K", &ExtensionParameter::K)
      .def_readwrite("D_basis", &ExtensionParameter::D_basis)
      .def_readwrite("range_basis", &ExtensionParameter::range_basis);

  m.def("extend_by_contraction", &extend_by_contraction);
  m.def("extension_parameter", &extension_parameter);
  m.def("maximal_dissipative_extension", &maximal_dissipative_extension);
  m.def("selfadjoint_extension_at", &selfadjoint_extension_at);
  m.def("index_budget", &index_budget);

  py::class_<JacobiModel>(m, "JacobiModel")
      .def(py::init<>())
      .def_readwrite("b", &JacobiModel::b)
      .def_readwrite("q", &JacobiModel::q)
      .def_readwrite("N", &JacobiModel::N)
      .def_readwrite("tol", &JacobiModel::tol);

  py::class_<Tau>(m, "Tau")
      .def(py::init<Complex>())
      .def_static("inf", &Tau::inf);

  m.def("jacobi_relation", &jacobi_relation);
  m.def("restricted_B", &restricted_B);
  m.def("j_tau", &j_tau);
  m.def("j_infinity", &j_infinity);
  m.def("m_finite", &m_finite);
  m.def("cross_validate_extension", &cross_validate_extension);

  py::class_<DeBrangesModel>(m, "DeBrangesModel")
      .def_readonly("K", &DeBrangesModel::K)
      .def_readonly("M", &DeBrangesModel::M)
      .def_readonly("R", &DeBrangesModel::R)
      .def("kernel_eval", &DeBrangesModel::kernel_eval);

  m.def("build_model",
        py::overload_cast<const std::vector<Complex>&, Complex,
                          ToleranceProfile>(&build_model),
        py::arg("roots"), py::arg("leading") = Complex{1.0},
        py::arg("tol") = ToleranceProfile{});
  m.def("mult_relation", &mult_relation);
  m.def("s_tau", &s_tau);
  m.def("spectrum_via_phi", &spectrum_via_phi);

  m.def("parse_relation", &parse_relation, py::arg("text"),
        py::arg("tol") = ToleranceProfile{});
  m.def("relation_document",
        [](const LinearRelation& T) { return relation_document(T).dump(2); });
}
