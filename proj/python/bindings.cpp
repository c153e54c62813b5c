#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "arexit/action.hpp"
#include "arexit/cli.hpp"
#include "arexit/closed_forms.hpp"
#include "arexit/errors.hpp"
#include "arexit/minimizer.hpp"
#include "arexit/montecarlo.hpp"
#include "arexit/stationary.hpp"

namespace py = pybind11;
using namespace arexit;
namespace cf = arexit::closed_forms;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Large-deviation exit-time bounds for nonlinear autoregressions";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  (void)base;
  (void)domain;

  py::class_<MapSpec>(m, "MapSpec")
      .def_static("linear", &MapSpec::linear, py::arg("a"))
      .def_static("dead_zone", &MapSpec::dead_zone, py::arg("a"), py::arg("b"))
      .def_static("saturated", &MapSpec::saturated, py::arg("a"), py::arg("c"))
      .def_static("half_line", &MapSpec::half_line, py::arg("a"))
      .def_static("two_slope", &MapSpec::two_slope, py::arg("a"), py::arg("b"))
      .def_static("abs_value", &MapSpec::abs_value, py::arg("a"))
      .def_static("quadratic", &MapSpec::quadratic, py::arg("a"))
      .def_static("ricker", &MapSpec::ricker, py::arg("r"))
      .def_static("tabulated", &MapSpec::tabulated, py::arg("x"), py::arg("y"))
      .def_property_readonly("name", [](const MapSpec& s) { return std::string(s.name()); })
      .def("kinks", &MapSpec::kinks)
      .def("__call__", [](const MapSpec& s, double x) { return s(x); })
      .def("__repr__", [](const MapSpec& s) { return "<MapSpec " + std::string(s.name()) + ">"; });

  py::class_<NoiseSpec>(m, "NoiseSpec")
      .def_static("gaussian", &NoiseSpec::gaussian)
      .def_static("laplace", &NoiseSpec::laplace, py::arg("b") = 1.0)
      .def_static("cauchy", &NoiseSpec::cauchy)
      .def_static("poisson_diff", &NoiseSpec::poisson_diff, py::arg("lam") = 1.0)
      .def_property_readonly("name", [](const NoiseSpec& s) { return std::string(s.name()); })
      .def("speed", &NoiseSpec::speed);

  py::class_<ProcessConfig>(m, "ProcessConfig")
      .def(py::init([](MapSpec map, NoiseSpec noise, double eps, double h, double start) {
             ProcessConfig c{std::move(map), noise, eps, h, start};
             c.validate();
             return c;
           }),
           py::arg("map"), py::arg("noise"), py::arg("epsilon"), py::arg("half_width") = 1.0,
           py::arg("start") = 0.0)
      .def_readonly("map", &ProcessConfig::map)
      .def_readonly("noise", &ProcessConfig::noise)
      .def_readonly("epsilon", &ProcessConfig::epsilon)
      .def_readonly("half_width", &ProcessConfig::half_width)
      .def_readonly("start", &ProcessConfig::start);

  m.def(
      "quad_cost", [](const std::vector<double>& y, const MapSpec& map, double h) { return quad_cost(Path{y, h}, map).value; },
      py::arg("path"), py::arg("map"), py::arg("half_width") = 1.0);
  m.def(
      "l1_cost",
      [](const std::vector<double>& y, const MapSpec& map, double lam, double h) {
        return l1_cost(Path{y, h}, map, lam).value;
      },
      py::arg("path"), py::arg("map"), py::arg("lam"), py::arg("half_width") = 1.0);

  py::enum_<CostKind>(m, "CostKind").value("quadratic", CostKind::quadratic).value("l1", CostKind::l1);
  py::enum_<ExitSide>(m, "ExitSide")
      .value("both", ExitSide::both)
      .value("positive", ExitSide::positive)
      .value("negative", ExitSide::negative);

  py::class_<MinimizerConfig>(m, "MinimizerConfig")
      .def(py::init<>())
      .def_readwrite("max_length", &MinimizerConfig::max_length)
      .def_readwrite("grid_points", &MinimizerConfig::grid_points)
      .def_readwrite("refine_tol", &MinimizerConfig::refine_tol)
      .def_readwrite("max_sweeps", &MinimizerConfig::max_sweeps)
      .def_readwrite("cost", &MinimizerConfig::cost)
      .def_readwrite("l1_weight", &MinimizerConfig::l1_weight)
      .def_readwrite("start", &MinimizerConfig::start)
      .def_readwrite("exit_side", &MinimizerConfig::exit_side);

  py::class_<ActionResult>(m, "ActionResult")
      .def_readonly("value", &ActionResult::value)
      .def_readonly("n_star", &ActionResult::n_star)
      .def_readonly("converged", &ActionResult::converged)
      .def_readonly("horizon_values", &ActionResult::horizon_values)
      .def_property_readonly("path", [](const ActionResult& r) { return r.path.points; })
      .def("__repr__", [](const ActionResult& r) {
        std::ostringstream os;
        os << "<ActionResult value=" << r.value << " n_star=" << r.n_star << ">";
        return os.str();
      });

  m.def("grid_dp", &grid_dp, py::arg("map"), py::arg("half_width") = 1.0, py::arg("config") = MinimizerConfig{});
  m.def("min_action", &min_action, py::arg("map"), py::arg("half_width") = 1.0,
        py::arg("config") = MinimizerConfig{}, py::call_guard<py::gil_scoped_release>());

  m.def("linear_bound", &cf::linear_bound, py::arg("a"), py::arg("half_width") = 1.0);
  m.def("deadzone_quotient", &cf::deadzone_quotient, py::arg("a"), py::arg("b"), py::arg("n"));
  m.def(
      "deadzone_bound",
      [](double a, double b, int max_length) {
        auto r = cf::deadzone_bound(a, b, max_length);
        return py::make_tuple(r.value, r.n_star);
      },
      py::arg("a"), py::arg("b"), py::arg("max_length") = 50);
  m.def("saturated_bound", &cf::saturated_bound, py::arg("a"), py::arg("c"));
  m.def("halfline_bound", &cf::halfline_bound, py::arg("a"));
  m.def("twoslope_bound", &cf::twoslope_bound, py::arg("a"), py::arg("b"));
  m.def("absval_bound", &cf::absval_bound, py::arg("a"));
  m.def("quadratic_bound", &cf::quadratic_bound, py::arg("a"));
  m.def(
      "bound_for", [](const MapSpec& map, double h, int max_length) { return cf::bound_for(map, h, max_length).value; },
      py::arg("map"), py::arg("half_width") = 1.0, py::arg("max_length") = 50);
  m.def(
      "noise_constant", [](const NoiseSpec& n) { return cf::noise_constants(n).value; }, py::arg("noise"));

  py::class_<McConfig>(m, "McConfig")
      .def(py::init([](std::int64_t trials, std::int64_t max_steps, std::uint64_t seed, int workers) {
             McConfig c{trials, max_steps, seed, workers};
             c.validate();
             return c;
           }),
           py::arg("trials") = 10000, py::arg("max_steps") = 10'000'000, py::arg("seed") = 0, py::arg("workers") = 1)
      .def_readwrite("trials", &McConfig::trials)
      .def_readwrite("max_steps", &McConfig::max_steps)
      .def_readwrite("seed", &McConfig::seed)
      .def_readwrite("workers", &McConfig::workers);

  py::class_<McEstimate>(m, "McEstimate")
      .def_readonly("epsilon", &McEstimate::epsilon)
      .def_readonly("trials", &McEstimate::trials)
      .def_readonly("censored", &McEstimate::censored)
      .def_readonly("mean_tau", &McEstimate::mean_tau)
      .def_readonly("std_error", &McEstimate::std_error)
      .def_readonly("scaled", &McEstimate::scaled)
      .def_readonly("scaled_std_error", &McEstimate::scaled_std_error)
      .def_property_readonly("lower_bound", &McEstimate::lower_bound);

  m.def("estimate", &estimate, py::arg("process"), py::arg("mc") = McConfig{},
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "scaling_curve",
      [](const ProcessConfig& p, const std::vector<double>& eps, const McConfig& mc) {
        return scaling_curve(p, eps, mc);
      },
      py::arg("process"), py::arg("epsilons"), py::arg("mc") = McConfig{}, py::call_guard<py::gil_scoped_release>());

  m.def(
      "stationary_density", [](double a, double eps, double x) { return density(StationaryDensity{a, eps}, x); },
      py::arg("a"), py::arg("epsilon"), py::arg("x"));
  m.def(
      "stationary_log_density", [](double a, double eps, double x) { return log_density(StationaryDensity{a, eps}, x); },
      py::arg("a"), py::arg("epsilon"), py::arg("x"));
  m.def(
      "stationary_log_limit",
      [](double a, double x, const std::vector<double>& eps) { return log_limit(a, x, eps); }, py::arg("a"),
      py::arg("x"), py::arg("epsilons"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
