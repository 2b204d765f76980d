// Copyright 2026 The ncprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "ncprobe/cli.hpp"
#include "ncprobe/config.hpp"
#include "ncprobe/errors.hpp"
#include "ncprobe/feasibility.hpp"
#include "ncprobe/fock.hpp"
#include "ncprobe/loop.hpp"
#include "ncprobe/phase.hpp"
#include "ncprobe/report_json.hpp"

namespace py = pybind11;
using namespace ncprobe;

namespace {

py::object to_py(const nlohmann::json &j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json from_py(const py::object &o) {
    return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

Configuration config_from(const py::object &o) {
    if (py::isinstance<py::str>(o)) return load_config_file(o.cast<std::string>());
    return load_config(from_py(o));
}

Scenario scenario_from(const py::object &o) {
    if (py::isinstance<py::str>(o)) return Scenario::preset(o.cast<std::string>());
    return Scenario::from_config(load_config(from_py(o)));
}

}  // namespace

PYBIND11_MODULE(_ncprobe, m) {
    m.doc() = "Noncommutative phase-space opto-mechanical probe";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<OverflowError>(m, "OverflowError", base.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
    py::register_exception<TruncationError>(m, "TruncationError", base.ptr());
    py::register_exception<LoopNotClosedError>(m, "LoopNotClosedError", base.ptr());
    py::register_exception<OracleInfeasibleError>(m, "OracleInfeasibleError", base.ptr());
    py::register_exception<SensitivityUnreachableError>(m, "SensitivityUnreachableError", base.ptr());

    py::class_<DeformationParams>(m, "Deformation")
        .def(py::init([](double theta, double omega) { return DeformationParams{theta, omega}; }), py::arg("theta"),
             py::arg("omega"))
        .def_readwrite("theta", &DeformationParams::theta)
        .def_readwrite("omega", &DeformationParams::omega)
        .def_property_readonly("product", &DeformationParams::product)
        .def("__repr__", [](const DeformationParams &d) {
            std::ostringstream s;
            s << "Deformation(theta=" << d.theta << ", omega=" << d.omega << ")";
            return s.str();
        });

    m.def("minimal_length_in_planck_units", py::overload_cast<double>(&minimal_length_in_planck_units),
          py::arg("theta_omega"));
    m.def("theta_tilde_area_from_natural",
          [](double v) { return theta_tilde_area_from_natural(v); }, py::arg("theta_tilde_gev2"));

    m.def(
        "commutator_residuals",
        [](double theta, double omega, std::size_t dim, std::size_t margin) {
            return to_py(to_json(commutator_residuals(FockSpec(dim, 2, margin), DeformationParams{theta, omega})));
        },
        py::arg("theta"), py::arg("omega"), py::arg("dim") = 16, py::arg("margin") = 2);

    m.def(
        "loop_phases",
        [](double lambda1, double lambda2, double theta, double omega, std::size_t n_max, std::size_t dim) {
            const LoopEvaluator loop(loop_fock_spec(dim), DeformationParams{theta, omega}, lambda1, lambda2);
            py::list out;
            for (std::size_t n = 0; n <= n_max; ++n) out.append(to_py(to_json(loop.evaluate(n))));
            return out;
        },
        py::arg("lambda1"), py::arg("lambda2"), py::arg("theta"), py::arg("omega"), py::arg("n_max") = 3,
        py::arg("dim") = 24);

    m.def(
        "predicted_loop_phase",
        [](std::size_t n, double lambda1, double lambda2, double theta, double omega, std::int64_t cycles) {
            PulseSequence p;
            p.lambda1 = lambda1;
            p.lambda2 = lambda2;
            p.cycles = cycles;
            return predicted_loop_phase(n, p, DeformationParams{theta, omega});
        },
        py::arg("n"), py::arg("lambda1"), py::arg("lambda2"), py::arg("theta"), py::arg("omega"),
        py::arg("cycles") = 1);

    m.def("mean_field_qm", &mean_field_qm, py::arg("alpha"), py::arg("lambda1"), py::arg("lambda2"), py::arg("n_p"),
          py::arg("cycles") = 1);
    m.def("mean_field_deformed", &mean_field_deformed, py::arg("alpha"), py::arg("lambda_"), py::arg("deformation"),
          py::arg("cycles"), py::arg("n_p"));
    m.def("theta_phase", &theta_phase, py::arg("cycles"), py::arg("lambda_"), py::arg("deformation"),
          py::arg("n_p"));

    m.def(
        "mean_field_photon_sum",
        [](std::complex<double> alpha, double lambda, const DeformationParams &def, std::int64_t cycles,
           std::size_t cutoff) {
            PulseSequence p;
            p.lambda1 = p.lambda2 = lambda;
            p.alpha = alpha;
            p.n_photon = std::norm(alpha);
            p.cycles = cycles;
            return to_py(to_json(mean_field_photon_sum(p, def, cutoff)));
        },
        py::arg("alpha"), py::arg("lambda_"), py::arg("deformation"), py::arg("cycles") = 1,
        py::arg("photon_cutoff") = 0);

    m.def(
        "load_config", [](const py::object &o) { return to_py(nlohmann::json{{"name", config_from(o).name}}); },
        py::arg("config"), "Validate a configuration given as a dict or a file path.");

    m.def(
        "phase_signal", [](const py::object &o) { return to_py(to_json(phase_signal(config_from(o)))); },
        py::arg("config"));

    m.def("phase_uncertainty", &phase_uncertainty, py::arg("n_p"), py::arg("runs"));

    m.def(
        "feasibility",
        [](const py::object &o) {
            const Scenario s = scenario_from(o);
            auto doc = to_json(snr(s));
            doc["scenario"] = to_json(s);
            return to_py(doc);
        },
        py::arg("scenario"), "Report for a preset name ('paper-a', 'paper-b') or a configuration dict.");

    m.def(
        "detectable_theta_omega",
        [](const py::object &o, double target) { return detectable_theta_omega(scenario_from(o), target); },
        py::arg("scenario"), py::arg("target_snr") = 1.0);

    m.def(
        "sweep_csv",
        [](const py::object &scenario, const py::object &grid) {
            std::ostringstream out;
            write_sweep_csv(out, sweep(parse_grid(from_py(grid), scenario_from(scenario))));
            return out.str();
        },
        py::arg("scenario"), py::arg("grid"));

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::vector<const char *> argv{"ncprobe"};
            for (const auto &a : args) argv.push_back(a.c_str());
            std::ostringstream out, err;
            const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a command line in-process; returns (exit_code, stdout, stderr).");
}
