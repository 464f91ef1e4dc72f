#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symspace/cfunction.hpp"
#include "symspace/crown.hpp"
#include "symspace/error.hpp"
#include "symspace/experiments.hpp"
#include "symspace/spherical.hpp"
#include "symspace/transform.hpp"

namespace py = pybind11;
using namespace symspace;

namespace {

// Spherical transform of a Python callable sampled on the context grid.
std::pair<std::vector<double>, std::vector<cplx>> transform_callable(const TransformContext& ctx,
                                                                    const std::function<cplx(double)>& f) {
  const SpectralFunction F = spherical_transform(ctx, sample(ctx, f));
  return {F.grid->rule.x, F.values};
}

py::dict run(const std::string& name, const std::map<std::string, std::string>& settings) {
  ExperimentConfig cfg;
  for (const auto& [k, v] : settings) set_config_value(cfg, k, v);
  validate(cfg);
  const Report r = run_experiment(cfg, name);
  py::dict d = py::module_::import("json").attr("loads")(summary_json(r));
  d["header"] = r.table.header;
  d["rows"] = r.table.rows;
  return d;
}

}  // namespace

PYBIND11_MODULE(_symspace, m) {
  m.doc() = "Harmonic analysis on rank-one symmetric spaces";
  m.attr("__version__") = "0.1.0";

  auto base = py::register_exception<Error>(m, "SymspaceError");
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<SingularValueError>(m, "SingularValueError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<PathError>(m, "PathError", base.ptr());

  py::class_<SpaceModel>(m, "SpaceModel")
      .def_readonly("name", &SpaceModel::name)
      .def_readonly("n", &SpaceModel::n)
      .def_readonly("m1", &SpaceModel::m1)
      .def_readonly("m2", &SpaceModel::m2)
      .def_readonly("rho", &SpaceModel::rho)
      .def_readonly("c_delta", &SpaceModel::c_delta)
      .def_readonly("k_space", &SpaceModel::k_space)
      .def_readonly("omega_bound", &SpaceModel::omega_bound)
      .def("density", &SpaceModel::density)
      .def("drift", &SpaceModel::drift)
      .def("__repr__", [](const SpaceModel& X) { return "SpaceModel('" + X.name + "')"; });

  m.def("hyperbolic", &hyperbolic, py::arg("n"));
  m.def("jacobi", &jacobi, py::arg("m1"), py::arg("m2"));
  m.def("complex_a1", &complex_a1);
  m.def("build_space", &build_space, py::arg("spec"));

  m.def("c_function", &c_rank_one, py::arg("space"), py::arg("lam"));
  m.def("c_gk", &c_gk, py::arg("space"), py::arg("lam"));
  m.def("plancherel_density", &plancherel_density, py::arg("space"), py::arg("nu"));
  m.def("phi", &phi_rank_one, py::arg("space"), py::arg("lam"), py::arg("t"));
  m.def("phi_crown", &phi_crown, py::arg("space"), py::arg("lam"), py::arg("z"));

  m.def("heat_multiplier", &heat_multiplier, py::arg("space"), py::arg("nu"), py::arg("t"));
  m.def("heat_kernel", py::overload_cast<const SpaceModel&, double, double>(&heat_kernel), py::arg("space"),
        py::arg("t"), py::arg("r"));

  py::class_<GridOptions>(m, "GridOptions")
      .def(py::init<>())
      .def_readwrite("t_max", &GridOptions::t_max)
      .def_readwrite("radial_width", &GridOptions::radial_width)
      .def_readwrite("radial_nodes", &GridOptions::radial_nodes)
      .def_readwrite("nu_max", &GridOptions::nu_max)
      .def_readwrite("spectral_width", &GridOptions::spectral_width)
      .def_readwrite("spectral_nodes", &GridOptions::spectral_nodes);

  py::class_<TransformContext>(m, "TransformContext")
      .def(py::init<const SpaceModel&, const GridOptions&>(), py::arg("space"), py::arg("options") = GridOptions{})
      .def_property_readonly("space", &TransformContext::space);
  m.def("spherical_transform", &transform_callable, py::arg("ctx"), py::arg("f"),
        "Returns (nu nodes, transform values) for a radial callable f(t).");

  py::class_<ComplexIwasawaResult>(m, "ComplexIwasawa")
      .def_readonly("a_exponent", &ComplexIwasawaResult::a_exponent)
      .def_readonly("k1", &ComplexIwasawaResult::k1)
      .def_readonly("k2", &ComplexIwasawaResult::k2)
      .def_readonly("n1", &ComplexIwasawaResult::n1)
      .def_readonly("n2", &ComplexIwasawaResult::n2);
  m.def("iwasawa_complex", &iwasawa_complex, py::arg("space"), py::arg("g"), py::arg("y"));

  py::class_<ConvexitySampleStats>(m, "ConvexityStats")
      .def_readonly("samples", &ConvexitySampleStats::samples)
      .def_readonly("violations", &ConvexitySampleStats::violations)
      .def_readonly("max_ratio", &ConvexitySampleStats::max_ratio)
      .def_readonly("max_excess", &ConvexitySampleStats::max_excess);
  m.def("convexity_sample", &convexity_sample, py::arg("space"), py::arg("seed"), py::arg("n"),
        py::arg("enriched") = false);

  m.def("list_experiments", [] {
    std::vector<std::string> names;
    for (const auto& e : list_experiments()) names.push_back(e.name);
    return names;
  });
  m.def("run_experiment", &run, py::arg("name"), py::arg("settings") = std::map<std::string, std::string>{},
        "Runs one experiment; settings are config key=value strings. Returns the summary plus table.");
}
