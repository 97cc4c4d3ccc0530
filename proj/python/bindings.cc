// Copyright 2026 The hardysim Authors
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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hardysim/cli.h"
#include "hardysim/gates.h"
#include "hardysim/hardy.h"
#include "hardysim/metrics.h"
#include "hardysim/noise.h"
#include "hardysim/sweep.h"
#include "hardysim/validate.h"

namespace py = pybind11;
using namespace hardysim;

namespace {

py::dict eps_dict(const EpsilonEstimates& e) {
  py::dict d;
  d["eps1"] = e.eps1;
  d["eps2"] = e.eps2;
  d["eps3"] = e.eps3;
  d["eps5"] = e.eps5;
  d["stat_err1"] = e.stat_err1;
  d["stat_err2"] = e.stat_err2;
  d["stat_err3"] = e.stat_err3;
  d["stat_err5"] = e.stat_err5;
  d["run_std5"] = e.run_std5;
  d["q_theory"] = e.q_theory;
  d["eps4_estimated"] = e.eps4_estimated;
  return d;
}

std::optional<ShotConfig> to_sampling(const py::object& cfg) {
  if (cfg.is_none()) return std::nullopt;
  return cfg.cast<ShotConfig>();
}

ReducedVariant parse_variant(const std::string& v) {
  if (v == "ps_00") return ReducedVariant::kPs00;
  if (v == "ps_01") return ReducedVariant::kPs01;
  throw py::value_error("variant must be 'ps_00' or 'ps_01'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hardy two-qubit nonlocality test simulator";

  m.attr("OPTIMUM_DEG") = kHardyOptimumDeg;
  m.attr("SWEEP_CSV_HEADER") = std::string(kSweepCsvHeader);

  // gates
  auto g = m.def_submodule("gates", "Named unitaries as complex numpy arrays");
  g.def("u1", [](double l) { return gates::u1(l).matrix(); }, py::arg("lam"));
  g.def("u3", [](double t, double p, double l) { return gates::u3(t, p, l).matrix(); },
        py::arg("theta"), py::arg("phi"), py::arg("lam"));
  g.def("beam_splitter", [](double t) { return gates::beam_splitter(t).matrix(); }, py::arg("theta"));
  g.def("phase_shifter", [](double p) { return gates::phase_shifter(p).matrix(); }, py::arg("phi"));
  g.def("coupling", [](double p) { return gates::coupling(p).matrix(); }, py::arg("phi"));
  g.def("coupling_decomposed",
        [](double p) { return circuit_matrix(gates::coupling_decomposed(p)); }, py::arg("phi"),
        "Matrix implemented by the CNOT decomposition of coupling(phi).");
  g.def("cnot", [](int c, int t) { return gates::cnot(c, t).matrix(); }, py::arg("control") = 1,
        py::arg("target") = 0);
  g.def("hadamard", [] { return gates::hadamard().matrix(); });

  // hardy
  py::class_<HardyParams>(m, "HardyParams")
      .def_static("from_degrees", &HardyParams::from_degrees, py::arg("theta_deg"), py::arg("phi_deg"))
      .def_static("from_radians", &HardyParams::from_radians, py::arg("theta"), py::arg("phi"))
      .def_property_readonly("theta", &HardyParams::theta)
      .def_property_readonly("phi", &HardyParams::phi)
      .def_property_readonly("chi", &HardyParams::chi)
      .def_property_readonly("lam", &HardyParams::lambda)
      .def_property_readonly("chi_at_singularity", &HardyParams::chi_at_singularity);

  m.def("chi_of", [](double t, double p) {
    const ChiAngle c = chi_of(t, p);
    return py::make_tuple(c.value, c.at_singularity);
  });
  m.def("analytic_q", &analytic_q, py::arg("theta"), py::arg("phi"));
  m.def("q_max", &q_max);
  m.def("optimal_angles", [] {
    const Angles a = optimal_angles();
    return py::make_tuple(a.theta, a.phi);
  });
  m.def("prepare_state", [](const HardyParams& p) { return Eigen::VectorXcd(prepare_state(p).amplitudes()); });
  m.def("joint_probability", &joint_probability, py::arg("params"), py::arg("a_index"),
        py::arg("b_index"), py::arg("a_outcome"), py::arg("b_outcome"));
  m.def("hardy_vector", [](const HardyParams& p) {
    const HardyProbabilities h = hardy_vector(p);
    return py::make_tuple(h.p11_a1b1, h.p1m1_a2b1, h.pm11_a1b2, h.p11_a2b2);
  });
  m.def("classify_state", [](const HardyParams& p) {
    const StateClass c = classify_state(p);
    return py::make_tuple(std::string(to_string(c.kind)), c.concurrence);
  });

  // noise
  py::class_<NoiseModel>(m, "NoiseModel")
      .def(py::init([](double p1, double p2, double readout0, double readout1, std::string name) {
             return NoiseModel(p1, p2,
                               {ReadoutConfusion::symmetric(readout0), ReadoutConfusion::symmetric(readout1)},
                               std::move(name));
           }),
           py::arg("p1") = 0.0, py::arg("p2") = 0.0, py::arg("readout0") = 0.0,
           py::arg("readout1") = 0.0, py::arg("name") = "")
      .def_static("none", &NoiseModel::none)
      .def_static("illustrative", &NoiseModel::illustrative)
      .def_static("load", [](const std::string& path) { return load_noise_profile(path); })
      .def_static("parse", [](const std::string& text) { return parse_noise_profile(text); })
      .def_property_readonly("p1", &NoiseModel::p1)
      .def_property_readonly("p2", &NoiseModel::p2)
      .def_property_readonly("name", &NoiseModel::name);

  py::class_<ShotConfig>(m, "ShotConfig")
      .def(py::init([](std::uint32_t shots, std::uint32_t runs, std::uint64_t seed) {
             ShotConfig c{shots, runs, seed};
             c.validate();
             return c;
           }),
           py::arg("shots_per_run") = 8192, py::arg("runs") = 10, py::arg("seed") = 0)
      .def_readonly("shots_per_run", &ShotConfig::shots_per_run)
      .def_readonly("runs", &ShotConfig::runs)
      .def_readonly("seed", &ShotConfig::seed);

  m.def("simulate_noisy", py::overload_cast<const HardyParams&, int, int, const NoiseModel&>(&simulate_noisy),
        py::arg("params"), py::arg("a_index"), py::arg("b_index"), py::arg("noise"));
  m.def("sample_shots",
        [](const Distribution& d, const ShotConfig& c, std::uint64_t stream) {
          return sample_shots(d, c, stream).runs;
        },
        py::arg("dist"), py::arg("config"), py::arg("stream") = 0);
  m.def("statistical_error", &statistical_error, py::arg("probability"), py::arg("runs"),
        py::arg("shots_per_run") = 8192);
  m.def("run_experiment",
        [](const HardyParams& p, const NoiseModel& n, const py::object& cfg, std::uint64_t stream) {
          return eps_dict(run_experiment(p, n, to_sampling(cfg), stream).eps);
        },
        py::arg("params"), py::arg("noise"), py::arg("shots") = py::none(), py::arg("stream") = 0);

  // sweeps and metrics
  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("theta_deg", &SweepRow::theta_deg)
      .def_readonly("phi_deg", &SweepRow::phi_deg)
      .def_readonly("q_theory", &SweepRow::q_theory)
      .def_readonly("eps1", &SweepRow::eps1)
      .def_readonly("eps2", &SweepRow::eps2)
      .def_readonly("eps3", &SweepRow::eps3)
      .def_readonly("eps5", &SweepRow::eps5)
      .def_readonly("eps4_est", &SweepRow::eps4_est)
      .def_readonly("stat_err", &SweepRow::stat_err)
      .def_property_readonly("state_class", [](const SweepRow& r) { return std::string(to_string(r.state_class)); });

  m.def("diagonal_sweep",
        [](const std::vector<double>& angles, const NoiseModel& n, const py::object& cfg) {
          return diagonal_sweep(angles, n, to_sampling(cfg));
        },
        py::arg("angles"), py::arg("noise"), py::arg("shots") = py::none(),
        "Rows for theta = phi at each angle (radians).");
  m.def("q_surface",
        [](double from, double to, double step) {
          const QSurface s = q_surface({from, to, from, to, step});
          Eigen::MatrixXd v(static_cast<Eigen::Index>(s.thetas.size()), static_cast<Eigen::Index>(s.phis.size()));
          for (std::size_t i = 0; i < s.thetas.size(); ++i)
            for (std::size_t j = 0; j < s.phis.size(); ++j)
              v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s.at(i, j);
          return v;
        },
        py::arg("start"), py::arg("stop"), py::arg("step"));
  m.def("sweep_csv", [](const std::vector<SweepRow>& rows) {
    std::ostringstream s;
    write_sweep_csv(s, rows);
    return s.str();
  });
  m.def("metric_shift", [](const std::vector<SweepRow>& r, double rho) { return metric_shift(r, rho).shift_deg; },
        py::arg("rows"), py::arg("rho_deg") = kHardyOptimumDeg);
  m.def("delta_interval", [](const std::vector<SweepRow>& r, double rho) { return delta_interval(r, rho).delta_deg; },
        py::arg("rows"), py::arg("rho_deg") = kHardyOptimumDeg);
  m.def("metric_fluctuation", [](const std::vector<SweepRow>& r) {
    const Fluctuation f = metric_fluctuation(r);
    return py::make_tuple(f.std_dev, f.range);
  });
  m.def("baseline_eps4",
        [](const NoiseModel& n, const py::object& cfg) { return baseline_eps4(n, to_sampling(cfg)); },
        py::arg("noise"), py::arg("shots") = py::none());
  m.def("metric_min_q",
        [](const NoiseModel& n, const py::object& cfg, double k, std::optional<double> base) {
          return metric_min_q(n, to_sampling(cfg), k, base).min_q;
        },
        py::arg("noise"), py::arg("shots") = py::none(), py::arg("k_sigma") = 3.0,
        py::arg("baseline") = py::none(), "None means non-locality is not established.");
  m.def("reduced_circuit_compare",
        [](const std::string& variant, const NoiseModel& n, const py::object& cfg) {
          const ReducedComparison c = reduced_circuit_compare(parse_variant(variant), n, to_sampling(cfg));
          py::dict d;
          d["full_eps"] = c.full_eps;
          d["reduced_eps"] = c.reduced_eps;
          d["full_gates"] = c.full_gates;
          d["reduced_gates"] = c.reduced_gates;
          return d;
        },
        py::arg("variant"), py::arg("noise"), py::arg("shots") = py::none());

  m.def("run_validation", [](int grid_points) {
    ValidationOptions o;
    o.grid_points = grid_points;
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const SuiteResult& s : run_validation(o).suites) out.emplace_back(s.name, s.passed, s.detail);
    return out;
  }, py::arg("grid_points") = 181);

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs a CLI command in-process; returns (exit_code, stdout, stderr).");
}
