// Python bindings for the core operations: states, expectation engines,
// closed-form bounds, the numerical maximizer, and the self-check suites.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "svet/maximizer.hpp"
#include "svet/qcore.hpp"
#include "svet/states.hpp"
#include "svet/svetlichny.hpp"
#include "svet/verify.hpp"

namespace py = pybind11;
using namespace svet;

namespace {

checks::Level parse_level(const std::string& name) {
  if (name == "quick") return checks::Level::quick;
  if (name == "full") return checks::Level::full;
  throw std::invalid_argument("level must be 'quick' or 'full'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Svetlichny-inequality bounds for generalized-GHZ and maximal-slice "
      "states: expectation engines, closed-form maxima, numerical "
      "certification.";

  py::enum_<Variant>(m, "Variant")
      .value("plus", Variant::plus)
      .value("minus", Variant::minus);

  py::enum_<Family>(m, "Family")
      .value("gghz", Family::gghz)
      .value("ms", Family::ms);

  py::class_<BlochDirection>(m, "BlochDirection")
      .def(py::init<double, double>(), py::arg("theta"), py::arg("phi"))
      .def_readonly("theta", &BlochDirection::theta)
      .def_readonly("phi", &BlochDirection::phi)
      .def_static("canonical", &BlochDirection::canonical, py::arg("theta"),
                  py::arg("phi"),
                  "Wrap arbitrary finite angles onto theta in [0, pi], phi in "
                  "[0, 2*pi) without moving the direction.")
      .def("unit_vector", &BlochDirection::unit_vector)
      .def("__repr__", [](const BlochDirection& d) {
        return "BlochDirection(theta=" + std::to_string(d.theta) +
               ", phi=" + std::to_string(d.phi) + ")";
      });

  py::class_<QubitSettings>(m, "QubitSettings")
      .def(py::init([](const BlochDirection& s0, const BlochDirection& s1) {
             return QubitSettings{s0, s1};
           }),
           py::arg("setting0"), py::arg("setting1"))
      .def_readwrite("setting0", &QubitSettings::setting0)
      .def_readwrite("setting1", &QubitSettings::setting1);

  py::class_<MeasurementSettings>(m, "MeasurementSettings")
      .def(py::init<std::vector<QubitSettings>>(), py::arg("qubits"))
      .def_property_readonly("num_qubits", &MeasurementSettings::num_qubits)
      .def("qubit",
           static_cast<const QubitSettings& (MeasurementSettings::*)(int)
                           const>(&MeasurementSettings::qubit),
           py::arg("index"), py::return_value_policy::copy,
           "Settings of the 1-based qubit index.")
      .def("angles", [](const MeasurementSettings& s) {
        std::vector<std::tuple<double, double, double, double>> out;
        out.reserve(s.num_qubits());
        for (const QubitSettings& q : s.qubits()) {
          out.emplace_back(q.setting0.theta, q.setting0.phi, q.setting1.theta,
                           q.setting1.phi);
        }
        return out;
      });

  py::class_<StateVector>(m, "StateVector")
      .def(py::init<int, std::vector<Complex>>(), py::arg("num_qubits"),
           py::arg("amplitudes"))
      .def_static("basis", &StateVector::basis, py::arg("num_qubits"),
                  py::arg("index"))
      .def_property_readonly("num_qubits", &StateVector::num_qubits)
      .def_property_readonly("dim", &StateVector::dim)
      .def_property_readonly("amplitudes", &StateVector::amplitudes)
      .def("norm", &StateVector::norm)
      .def("is_normalized", &StateVector::is_normalized,
           py::arg("tol") = kNormTolerance);

  py::class_<FamilyParameter>(m, "FamilyParameter")
      .def(py::init<Family, int, double>(), py::arg("family"),
           py::arg("num_qubits"), py::arg("alpha"))
      .def_readonly("family", &FamilyParameter::family)
      .def_readonly("num_qubits", &FamilyParameter::num_qubits)
      .def_readonly("alpha", &FamilyParameter::alpha);

  m.def("gghz", &gghz, py::arg("num_qubits"), py::arg("alpha"),
        "cos(a)|0...0> + sin(a)|1...1>");
  m.def("ms", &ms, py::arg("num_qubits"), py::arg("alpha"),
        "Maximal-slice state of the given parameter.");
  m.def("make_state", &make_state, py::arg("parameter"));
  m.def("n_tangle_even", &n_tangle_even, py::arg("state"),
        "n-tangle for even N, residual three-tangle for N = 3.");
  m.def("gghz_tangle", &gghz_tangle, py::arg("alpha"));
  m.def("ms_tangle", &ms_tangle, py::arg("num_qubits"), py::arg("alpha"));
  m.def("family_tangle", &family_tangle, py::arg("parameter"));

  m.def("nu", &nu, py::arg("weight"), py::arg("variant"),
        "Sign (-1)^{w(w +- 1)/2} of the weight-w correlators.");
  m.def("lhv_bound", &lhv_bound, py::arg("num_qubits"));
  m.def("algebraic_cap", &algebraic_cap, py::arg("num_qubits"));
  m.def("expectation_fast", &expectation_fast, py::arg("state"),
        py::arg("settings"), py::arg("variant"));
  m.def("expectation_bruteforce", &expectation_bruteforce, py::arg("state"),
        py::arg("settings"), py::arg("variant"));
  m.def("svetlichny_f", &svetlichny_f, py::arg("settings"), py::arg("variant"));
  m.def("svetlichny_g", &svetlichny_g, py::arg("settings"), py::arg("variant"),
        py::arg("phase_offset") = 0.0);
  m.def("gghz_expectation_closed", &gghz_expectation_closed,
        py::arg("num_qubits"), py::arg("alpha"), py::arg("settings"),
        py::arg("variant"));
  m.def("gghz_gradient_theta", &gghz_gradient_theta, py::arg("num_qubits"),
        py::arg("alpha"), py::arg("settings"), py::arg("variant"),
        py::arg("qubit_index"), py::arg("setting"));
  m.def("fmax", &svet::fmax, py::arg("num_qubits"));
  m.def("gmax", &svet::gmax, py::arg("num_qubits"));
  m.def("gghz_bound_alpha", &gghz_bound_alpha, py::arg("num_qubits"),
        py::arg("alpha"));
  m.def("gghz_bound_tangle", &gghz_bound_tangle, py::arg("num_qubits"),
        py::arg("tau"));
  m.def("ms_bound", &ms_bound, py::arg("num_qubits"), py::arg("alpha"));
  m.def("optimal_settings_gghz", &optimal_settings_gghz, py::arg("num_qubits"),
        py::arg("alpha"), py::arg("variant"));

  py::class_<IsolationCoefficients>(m, "IsolationCoefficients")
      .def_readonly("f1", &IsolationCoefficients::f1)
      .def_readonly("f2", &IsolationCoefficients::f2)
      .def_readonly("f3", &IsolationCoefficients::f3)
      .def_readonly("f4", &IsolationCoefficients::f4)
      .def_readonly("g1", &IsolationCoefficients::g1)
      .def_readonly("g2", &IsolationCoefficients::g2)
      .def_readonly("g3", &IsolationCoefficients::g3)
      .def_readonly("g4", &IsolationCoefficients::g4);

  m.def("isolation_coefficients", &isolation_coefficients, py::arg("num_qubits"),
        py::arg("alpha"), py::arg("sub_settings"), py::arg("phi_second_last"),
        py::arg("phi_last"), py::arg("variant"));
  m.def("isolation_reconstruct", &isolation_reconstruct, py::arg("coeffs"),
        py::arg("theta_second_last"), py::arg("theta_last"));

  py::class_<HkBounds>(m, "HkBounds")
      .def_readonly("max_h", &HkBounds::max_h)
      .def_readonly("max_k", &HkBounds::max_k);
  m.def("hk_bounds", &hk_bounds, py::arg("num_qubits"), py::arg("alpha"));
  m.def("consistency_check", &consistency_check, py::arg("settings"),
        py::arg("coeffs"), py::arg("tol"));

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("family", &BoundReport::family)
      .def_readonly("variant_best", &BoundReport::variant_best)
      .def_readonly("lhv_bound", &BoundReport::lhv_bound)
      .def_readonly("algebraic_cap", &BoundReport::algebraic_cap)
      .def_readonly("analytic_max", &BoundReport::analytic_max)
      .def_readonly("numeric_max", &BoundReport::numeric_max)
      .def_readonly("tangle", &BoundReport::tangle)
      .def_readonly("violates", &BoundReport::violates);
  m.def("violation_report", &violation_report, py::arg("parameter"));

  py::class_<OptimizerConfig>(m, "OptimizerConfig")
      .def(py::init<>())
      .def_readwrite("restarts", &OptimizerConfig::restarts)
      .def_readwrite("max_iterations", &OptimizerConfig::max_iterations)
      .def_readwrite("convergence_tol", &OptimizerConfig::convergence_tol)
      .def_readwrite("fd_step", &OptimizerConfig::fd_step)
      .def_readwrite("seed", &OptimizerConfig::seed);

  py::class_<MaximizationResult>(m, "MaximizationResult")
      .def_readonly("best_value", &MaximizationResult::best_value)
      .def_readonly("best_settings", &MaximizationResult::best_settings)
      .def_readonly("best_variant", &MaximizationResult::best_variant)
      .def_readonly("restarts_converged",
                    &MaximizationResult::restarts_converged)
      .def_readonly("stationarity_residual",
                    &MaximizationResult::stationarity_residual);

  m.def("maximize", &maximize, py::arg("state"), py::arg("variant"),
        py::arg("config") = OptimizerConfig{},
        py::call_guard<py::gil_scoped_release>());
  m.def("maximize_both", &maximize_both, py::arg("state"),
        py::arg("config") = OptimizerConfig{},
        py::call_guard<py::gil_scoped_release>());
  m.def("stationarity_residual", &stationarity_residual, py::arg("state"),
        py::arg("settings"), py::arg("variant"), py::arg("fd_step") = 1e-6);
  m.def("certify_stationarity", &certify_stationarity, py::arg("state"),
        py::arg("settings"), py::arg("variant"), py::arg("tol"));
  m.def(
      "random_settings",
      [](int num_qubits, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        return random_settings(num_qubits, rng);
      },
      py::arg("num_qubits"), py::arg("seed"),
      "Area-uniform random settings from a seeded generator.");

  py::class_<checks::CheckResult>(m, "CheckResult")
      .def_readonly("name", &checks::CheckResult::name)
      .def_readonly("passed", &checks::CheckResult::passed)
      .def_readonly("detail", &checks::CheckResult::detail)
      .def_readonly("seconds", &checks::CheckResult::seconds);

  m.def(
      "run_acceptance",
      [](const std::string& level) {
        return checks::run_acceptance(parse_level(level));
      },
      py::arg("level") = "quick",
      py::call_guard<py::gil_scoped_release>(),
      "Run the ten certification checks; level is 'quick' or 'full'.");
  m.def(
      "run_all_checks",
      [](const std::string& level) {
        return checks::run_all(parse_level(level));
      },
      py::arg("level") = "quick",
      py::call_guard<py::gil_scoped_release>(),
      "Certification checks plus auxiliary invariants.");
}
