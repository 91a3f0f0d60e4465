#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "noonsim/elements.hpp"
#include "noonsim/errors.hpp"
#include "noonsim/estimation.hpp"
#include "noonsim/experiment.hpp"
#include "noonsim/lithography.hpp"
#include "noonsim/rosetta.hpp"
#include "noonsim/states.hpp"

namespace py = pybind11;
using namespace noonsim;

namespace {

using RealArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

std::vector<double> to_vector(const RealArray& a) {
  const auto r = a.unchecked<1>();
  std::vector<double> out(r.shape(0));
  for (py::ssize_t i = 0; i < r.shape(0); ++i) out[i] = r(i);
  return out;
}

py::array_t<double> to_array(const std::vector<double>& v) {
  return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
}

py::object cell_to_py(const Cell& c) {
  return std::visit([](const auto& v) -> py::object { return py::cast(v); }, c);
}

ExperimentConfig make_config(const py::kwargs& kw) {
  ExperimentConfig c;
  for (const auto& [key, value] : kw) {
    const auto k = py::cast<std::string>(key);
    if (k == "scheme") c.scheme = parse_scheme(py::cast<std::string>(value));
    else if (k == "n") c.n = py::cast<int>(value);
    else if (k == "n_range") c.n_range = RangeSpec::parse(py::cast<std::string>(value));
    else if (k == "phi_grid") c.phi_grid = GridSpec::parse(py::cast<std::string>(value));
    else if (k == "phi") c.phi = py::cast<double>(value);
    else if (k == "shots") c.shots = py::cast<long>(value);
    else if (k == "seed") c.seed = py::cast<std::uint64_t>(value);
    else if (k == "convention") c.convention = parse_phase_convention(py::cast<std::string>(value));
    else if (k == "invert_second_bs") c.invert_second_bs = py::cast<bool>(value);
    else if (k == "noon_framing") c.framing = parse_noon_framing(py::cast<std::string>(value));
    else if (k == "observable") c.observable = py::cast<std::string>(value);
    else if (k == "metric") c.metric = py::cast<std::string>(value);
    else if (k == "estimator") c.estimator = py::cast<std::string>(value);
    else if (k == "grid_points") c.grid_points = py::cast<int>(value);
    else if (k == "lambda_") c.lambda = py::cast<double>(value);
    else if (k == "points") c.points = py::cast<int>(value);
    else if (k == "tail_tol") c.tail_tol = py::cast<double>(value);
    else if (k == "cutoff") c.cutoff = py::cast<int>(value);
    else if (k == "threads") c.threads = py::cast<int>(value);
    else throw DomainError("unknown option '" + k + "'");
  }
  return c;
}

template <Table (*Runner)(const ExperimentConfig&)>
Table run_with(const py::kwargs& kw) {
  const auto config = make_config(kw);
  py::gil_scoped_release release;
  return Runner(config);
}

}  // namespace

PYBIND11_MODULE(_noonsim, m) {
  m.doc() = "Two-mode Fock-space simulator of interferometric phase estimation";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParityError>(m, "ParityError", domain.ptr());
  auto truncation = py::register_exception<TruncationError>(m, "TruncationError", PyExc_RuntimeError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_RuntimeError);
  py::register_exception<NoInformationError>(m, "NoInformationError", PyExc_RuntimeError);
  py::register_exception<ModelMismatchError>(m, "ModelMismatchError", PyExc_RuntimeError);
  py::register_exception<InsufficientGridError>(m, "InsufficientGridError", PyExc_RuntimeError);
  (void)truncation;

  py::class_<TwoModeState>(m, "TwoModeState")
      .def_property_readonly("cutoff", &TwoModeState::cutoff)
      .def_property_readonly("truncation_tail", &TwoModeState::truncation_tail)
      .def("amplitude", py::overload_cast<int, int>(&TwoModeState::amplitude, py::const_),
           py::arg("n_a"), py::arg("n_b"))
      .def("norm_squared", &TwoModeState::norm_squared)
      .def("probabilities",
           [](const TwoModeState& s) {
             py::dict out;
             const auto p = probabilities(s);
             const auto labels = fock_labels(s.cutoff());
             for (std::size_t i = 0; i < p.size(); ++i) {
               out[py::make_tuple(labels[i].n_a, labels[i].n_b)] = p[i];
             }
             return out;
           })
      .def("amplitudes", [](const TwoModeState& s) {
        const auto a = s.amplitudes();
        return py::array_t<std::complex<double>>(static_cast<py::ssize_t>(a.size()), a.data());
      });

  m.def("single_port_fock", &single_port_fock, py::arg("n"), py::arg("cutoff"));
  m.def("dual_fock", &dual_fock, py::arg("n"), py::arg("cutoff"));
  m.def("noon", &noon, py::arg("n"), py::arg("phi"), py::arg("cutoff"));
  m.def("yurke_fermionic_analog", &yurke_fermionic_analog, py::arg("n"), py::arg("cutoff"));
  m.def("yurke_bosonic", &yurke_bosonic, py::arg("n"), py::arg("cutoff"));
  m.def("coherent_vacuum", &coherent_vacuum, py::arg("alpha"), py::arg("cutoff"),
        py::arg("tail_tol") = 1e-12);
  m.def("coherent_cutoff", &coherent_cutoff, py::arg("mean_photons"), py::arg("tail_tol") = 1e-12);
  m.def("basis_state", &make_basis_state, py::arg("n_a"), py::arg("n_b"), py::arg("cutoff"));

  m.def(
      "beam_splitter",
      [](const TwoModeState& s, double theta) {
        return apply(beam_splitter(theta, s.cutoff()), s);
      },
      py::arg("state"), py::arg("theta"), "Apply exp(i theta J_x).");
  m.def(
      "phase_shift",
      [](const TwoModeState& s, double phi, const std::string& convention) {
        return apply(phase_shifter(phi, parse_phase_convention(convention), s.cutoff()), s);
      },
      py::arg("state"), py::arg("phi"), py::arg("convention") = "one-arm");
  m.def(
      "mach_zehnder",
      [](const TwoModeState& s, double phi, const std::string& convention, bool invert) {
        return apply(mach_zehnder(phi, parse_phase_convention(convention), invert, s.cutoff()), s);
      },
      py::arg("state"), py::arg("phi"), py::arg("convention") = "one-arm",
      py::arg("invert_second_bs") = false);

  m.def(
      "sensitivity_curve",
      [](const std::string& scheme, int n, const RealArray& phi, py::kwargs kw) {
        const auto config = make_config(kw);
        const auto setup = make_scheme_setup(SchemeTag(parse_scheme(scheme), n), config);
        const auto grid = to_vector(phi);
        SensitivityCurve curve;
        {
          py::gil_scoped_release release;
          curve = sensitivity_curve(setup.pipeline, setup.input, setup.observable, grid,
                                    config.threads);
        }
        py::dict out;
        out["phi"] = to_array(curve.phi);
        out["expectation"] = to_array(curve.expectation);
        out["variance"] = to_array(curve.variance);
        out["sensitivity"] = to_array(curve.delta_phi);
        out["observable"] = setup.observable_name;
        return out;
      },
      py::arg("scheme"), py::arg("n"), py::arg("phi"),
      "Sensitivity, expectation and variance of the scheme's observable over a phase grid.");

  m.def("ensemble_sensitivity", &ensemble_sensitivity, py::arg("n"), py::arg("phi"));
  m.def(
      "classical_fisher",
      [](const std::string& scheme, int n, double phi, double dphi, py::kwargs kw) {
        const auto setup = make_scheme_setup(SchemeTag(parse_scheme(scheme), n), make_config(kw));
        return classical_fisher(setup.pipeline, setup.input, phi, dphi);
      },
      py::arg("scheme"), py::arg("n"), py::arg("phi"), py::arg("dphi") = 1e-5);
  m.def(
      "scaling_fit",
      [](const RealArray& n, const RealArray& value) {
        const auto xs = to_vector(n);
        const auto ys = to_vector(value);
        if (xs.size() != ys.size()) throw DomainError("n and value lengths differ");
        std::vector<std::pair<double, double>> pts;
        for (std::size_t i = 0; i < xs.size(); ++i) pts.emplace_back(xs[i], ys[i]);
        const auto fit = scaling_fit(pts);
        return py::make_tuple(fit.slope, fit.intercept);
      },
      py::arg("n"), py::arg("value"), "Log-log least-squares (slope, intercept).");

  m.def(
      "deposition_rate",
      [](const std::string& kind, int n, const RealArray& x, double lambda) {
        return to_array(deposition_rate(parse_deposition_kind(kind), n, to_vector(x), lambda).rate);
      },
      py::arg("kind"), py::arg("n"), py::arg("x"), py::arg("lambda_") = 1.0);
  m.def(
      "fringe_period",
      [](const std::string& kind, int n, const RealArray& x, double lambda) {
        return fringe_period(deposition_rate(parse_deposition_kind(kind), n, to_vector(x), lambda));
      },
      py::arg("kind"), py::arg("n"), py::arg("x"), py::arg("lambda_") = 1.0);
  m.def(
      "noon_fidelity_sweep",
      [](int n_a, int n_b, const RealArray& theta) {
        const auto best = noon_fidelity_sweep(n_a, n_b, to_vector(theta));
        return py::make_tuple(best.theta, best.fidelity);
      },
      py::arg("n_a"), py::arg("n_b"), py::arg("theta"), "Best (theta, fidelity) over the grid.");

  m.def("rosetta_equivalence", &rosetta_equivalence, py::arg("n"), py::arg("phi"));
  m.def("single_photon_circuit_equivalence", &single_photon_circuit_equivalence, py::arg("phi"));
  m.def(
      "ghz_flip_expectation",
      [](int n, double phi) { return expect_tensor_A(collective_phase(ghz_prepare(n), phi)); },
      py::arg("n"), py::arg("phi"));

  py::class_<Table>(m, "Table")
      .def_readonly("header", &Table::header)
      .def_property_readonly("rows",
                             [](const Table& t) {
                               py::list rows;
                               for (const auto& r : t.rows) {
                                 py::list row;
                                 for (const auto& c : r) row.append(cell_to_py(c));
                                 rows.append(py::tuple(row));
                               }
                               return rows;
                             })
      .def_property_readonly("footer",
                             [](const Table& t) {
                               py::dict out;
                               for (const auto& [k, v] : t.footer) out[py::str(k)] = cell_to_py(v);
                               return out;
                             })
      .def("to_csv", &Table::to_csv)
      .def("__len__", [](const Table& t) { return t.rows.size(); });

  m.def("run_sensitivity", &run_with<run_sensitivity>);
  m.def("run_scaling", &run_with<run_scaling>);
  m.def("run_hom", &run_with<run_hom>);
  m.def("run_litho", &run_with<run_litho>);
  m.def("run_rosetta", &run_with<run_rosetta>);
  m.def("run_sample", &run_with<run_sample>);
}
