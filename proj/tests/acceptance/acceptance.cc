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

// Acceptance checks. One line per criterion; exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hardysim/cli.h"
#include "hardysim/gates.h"
#include "hardysim/hardy.h"
#include "hardysim/metrics.h"
#include "hardysim/noise.h"
#include "hardysim/sweep.h"

namespace {

using namespace hardysim;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failing check and keeps the worst observed deviation.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  void near(double got, double want, double tol, const std::string& what) {
    const double dev = std::abs(got - want);
    worst_ = std::max(worst_, dev);
    if (!(dev <= tol) && failure_.empty()) {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want << " +- " << tol;
      failure_ = s.str();
    }
  }
  void note(const std::string& s) { note_ = s; }
  Outcome result() const {
    if (!failure_.empty()) return {false, failure_};
    std::ostringstream s;
    if (!note_.empty()) s << note_;
    else s << "max deviation " << worst_;
    return {true, s.str()};
  }

 private:
  std::string failure_;
  std::string note_;
  double worst_ = 0;
};

const double kOptDeg = kHardyOptimumDeg;

Outcome ac1_q_max() {
  Check c;
  const double expect = (5 * std::sqrt(5.0) - 11) / 2;
  c.near(q_max(), expect, 1e-15, "q_max()");
  c.near(analytic_q(deg_to_rad(kOptDeg), deg_to_rad(kOptDeg)), 0.09017, 1e-4, "analytic_q(opt)");
  c.near(q_max(), 0.09017, 1e-4, "q_max vs 0.09017");
  c.note("q_max=" + format_number(q_max()) + " analytic_q(51.827,51.827)=" +
         format_number(analytic_q(deg_to_rad(kOptDeg), deg_to_rad(kOptDeg))));
  return c.result();
}

Outcome ac2_table_q() {
  struct Row { double t, p, q, tol; };
  const Row rows[] = {{45, 90, 0, 1e-4},    {0, 0, 0, 1e-4},        {90, 0, 0, 1e-4},
                      {45, 0, 0, 1e-4},     {90, 45, 0, 1e-4},      {45, 45, 0.0833, 1e-4},
                      {55, 55, 0.0886, 1e-4}, {30, 60, 0.0433, 1e-4}, {60, 30, 0.0433, 1e-4},
                      {10, 80, 0.00088, 5e-5}, {80, 10, 0.00088, 5e-5}};
  Check c;
  for (const Row& r : rows) {
    std::ostringstream name;
    name << "q(" << r.t << "," << r.p << ")";
    c.near(analytic_q(deg_to_rad(r.t), deg_to_rad(r.p)), r.q, r.tol, name.str());
  }
  c.note("11 rows");
  return c.result();
}

Outcome ac3_hardy_grid() {
  Check c;
  double worst_zero = 0, worst_q = 0;
  for (int i = 0; i <= 180; ++i)
    for (int j = 0; j <= 180; ++j) {
      const auto p = HardyParams::from_degrees(i, j);
      const HardyProbabilities h = hardy_vector(p);
      worst_zero = std::max({worst_zero, h.p11_a1b1, h.p1m1_a2b1, h.pm11_a1b2});
      worst_q = std::max(worst_q, std::abs(h.p11_a2b2 - analytic_q(p.theta(), p.phi())));
    }
  c.expect(worst_zero <= 1e-12, "Hardy equations exceeded 1e-12: " + format_number(worst_zero));
  c.expect(worst_q <= 1e-10, "q equivalence exceeded 1e-10: " + format_number(worst_q));
  c.note("181x181 grid, max P1..3=" + format_number(worst_zero) + " max |P4-q|=" + format_number(worst_q));
  return c.result();
}

Outcome ac4_decomposition() {
  Check c;
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> a(0, 2 * std::numbers::pi);
  double worst_c = 0, worst_b = 0;
  for (int i = 0; i < 1000; ++i) {
    const double phi = a(rng);
    worst_c = std::max(worst_c, max_abs_diff(circuit_matrix(gates::coupling_decomposed(phi)),
                                             gates::coupling(phi).matrix()));
    const double t = a(rng);
    worst_b = std::max(worst_b, max_abs_diff(gates::beam_splitter(t).matrix(), gates::u3(2 * t, 0, 0).matrix()));
  }
  c.expect(worst_c <= 1e-12, "coupling decomposition deviation " + format_number(worst_c));
  c.expect(worst_b <= 1e-12, "beam splitter anchor deviation " + format_number(worst_b));
  c.note("1000 random angles, coupling dev=" + format_number(worst_c) + " U_B dev=" + format_number(worst_b));
  return c.result();
}

Outcome ac5_classification() {
  Check c;
  struct Row { double t, p; StateKind k; };
  const Row rows[] = {{0, 37, StateKind::kPS}, {73, 0, StateKind::kPS}, {90, 0, StateKind::kPS},
                      {45, 90, StateKind::kMES}};
  for (const Row& r : rows) {
    const StateClass s = classify_state(HardyParams::from_degrees(r.t, r.p));
    c.expect(s.kind == r.k, "row (" + format_number(r.t) + "," + format_number(r.p) + ") classified " +
                                std::string(to_string(s.kind)));
  }
  const auto p = HardyParams::from_degrees(kOptDeg, kOptDeg);
  const StateClass s = classify_state(p);
  c.expect(s.kind == StateKind::kNMES, "optimum not NMES");
  const StateVector v = closed_form_state(p);
  const double oracle = 2 * std::abs(v[0] * v[3] - v[1] * v[2]);
  c.near(s.concurrence, oracle, 1e-10, "concurrence vs oracle");
  c.note("PS,PS,PS,MES; optimum NMES C=" + format_number(s.concurrence));
  return c.result();
}

Outcome ac6_phi90() {
  Check c;
  for (int t = 10; t <= 80; t += 1) {
    if (t == 45) continue;
    const auto p = HardyParams::from_degrees(t, 90);
    c.expect(classify_state(p).kind == StateKind::kNMES, "theta=" + std::to_string(t) + " not NMES");
    c.near(analytic_q(p.theta(), p.phi()), 0.0, 1e-12, "q at theta=" + std::to_string(t));
  }
  return c.result();
}

Outcome ac7_surface_argmax() {
  Check c;
  const double step = deg_to_rad(0.1);
  const QSurface s = q_surface({deg_to_rad(0), deg_to_rad(90), deg_to_rad(0), deg_to_rad(90), step});
  const auto peak = s.argmax();
  const double t = rad_to_deg(s.thetas[peak.theta_index]);
  const double p = rad_to_deg(s.phis[peak.phi_index]);
  c.near(t, kOptDeg, 0.1, "argmax theta");
  c.near(p, kOptDeg, 0.1, "argmax phi");
  c.near(std::cos(2 * s.thetas[peak.theta_index]), 2 - std::sqrt(5.0), 2e-3, "cos(2 theta*)");
  c.note("argmax (" + format_number(t) + ", " + format_number(p) + ") q=" + format_number(peak.value));
  return c.result();
}

Outcome ac8_shots() {
  Check c;
  const Angles a = optimal_angles();
  const Distribution dist = simulate_noisy(HardyParams::from_radians(a.theta, a.phi), 2, 2, NoiseModel::none());
  const double P = dist[outcome_index(+1, +1)];
  const double tol = 4 * std::sqrt(P * (1 - P) / 81920.0);
  double worst = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ShotCounts counts = sample_shots(dist, {8192, 10, seed * 7919});
    const double eps5 = counts.pooled_frequency(outcome_index(+1, +1));
    worst = std::max(worst, std::abs(eps5 - 0.09017));
    c.near(eps5, 0.09017, tol, "seed " + std::to_string(seed));
  }
  c.near(statistical_error(0.5, 1), 0.005524, 1e-6, "statistical_error(0.5, 1)");
  c.note("20 seeds, max |eps5-0.09017|=" + format_number(worst) + " (bound " + format_number(tol) + ")");
  return c.result();
}

Outcome ac9_noise_properties() {
  Check c;
  const auto opt = HardyParams::from_degrees(kOptDeg, kOptDeg);
  // (a) zero noise equals ideal
  double worst = 0;
  for (int i = 0; i <= 180; i += 10)
    for (int j = 0; j <= 180; j += 10) {
      const auto p = HardyParams::from_degrees(i, j);
      for (int ai : {1, 2})
        for (int bi : {1, 2}) {
          const Distribution d = simulate_noisy(p, ai, bi, NoiseModel::none());
          for (int x : {+1, -1})
            for (int y : {+1, -1})
              worst = std::max(worst, std::abs(d[outcome_index(x, y)] - joint_probability(p, ai, bi, x, y)));
        }
    }
  c.expect(worst <= 1e-10, "(a) zero-noise deviation " + format_number(worst));
  // (b) default profile band
  const EpsilonEstimates e = run_experiment(opt, NoiseModel::illustrative(), std::nullopt).eps;
  for (double v : {e.eps1, e.eps2, e.eps3}) c.expect(v > 0 && v < 0.1, "(b) eps out of (0, 0.1): " + format_number(v));
  // (c) monotone on a 5-point ladder for each knob
  const double ladder[5] = {0.0, 0.002, 0.01, 0.03, 0.1};
  const ReadoutConfusion id = ReadoutConfusion::ideal();
  auto sum3 = [&](const NoiseModel& n) {
    const EpsilonEstimates x = run_experiment(opt, n, std::nullopt).eps;
    return x.eps1 + x.eps2 + x.eps3;
  };
  std::vector<std::function<NoiseModel(double)>> knobs{
      [&](double x) { return NoiseModel(x, 0, {id, id}); },
      [&](double x) { return NoiseModel(0, x, {id, id}); },
      [&](double x) { return NoiseModel(0, 0, {ReadoutConfusion::symmetric(x), ReadoutConfusion::symmetric(x)}); }};
  const char* knob_names[3] = {"p1", "p2", "readout"};
  for (std::size_t k = 0; k < knobs.size(); ++k) {
    double prev = -1;
    for (double x : ladder) {
      const double v = sum3(knobs[k](x));
      c.expect(v >= prev, std::string("(c) ") + knob_names[k] + " not monotone at " + format_number(x));
      prev = v;
    }
  }
  // (d) reduced circuits under p2 > 0
  for (double p2 : {1e-4, 0.01, 0.1, 1.0})
    for (ReducedVariant v : {ReducedVariant::kPs00, ReducedVariant::kPs01}) {
      const ReducedComparison r = reduced_circuit_compare(v, NoiseModel(0.001, p2, {id, id}), std::nullopt);
      c.expect(r.reduced_eps < r.full_eps, "(d) reduced_eps >= full_eps at p2=" + format_number(p2));
    }
  c.note("(a) dev=" + format_number(worst) + " (b) eps1..3=" + format_number(e.eps1) + "," +
         format_number(e.eps2) + "," + format_number(e.eps3) + " (c) ok (d) ok");
  return c.result();
}

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

double kv_number(const std::string& text, const std::string& key) {
  const std::string needle = "\n" + key + "=";
  const auto pos = ("\n" + text).find(needle);
  if (pos == std::string::npos) return std::nan("");
  return std::stod(text.substr(pos + needle.size() - 1));
}

Outcome ac10_metrics() {
  Check c;
  const std::string path = temp_file("hardysim_acceptance_peak.csv");
  auto write_peak = [&](double peak) {
    std::vector<SweepRow> rows;
    for (int d = 0; d <= 90; ++d) {
      SweepRow r;
      r.theta_deg = r.phi_deg = d;
      r.q_theory = analytic_q(deg_to_rad(d), deg_to_rad(d));
      r.eps5 = r.q_theory + 0.02 + (d == peak ? 0.2 : 0.0);
      r.eps4_est = r.eps5 - r.q_theory;
      r.stat_err = statistical_error(r.eps5, 10);
      r.state_class = classify_state(HardyParams::from_degrees(d, d)).kind;
      rows.push_back(r);
    }
    std::ofstream f(path, std::ios::binary);
    write_sweep_csv(f, rows);
  };
  std::ostringstream out, err;
  write_peak(62);
  int code = cli::run({"metrics", "--in", path}, out, err);
  c.expect(code == 0, "metrics exit " + std::to_string(code) + ": " + err.str());
  const double shift = kv_number(out.str(), "shift_deg");
  c.near(shift, 10.173, 1.0, "shift for peak at 62");

  std::ostringstream out2;
  write_peak(40);
  code = cli::run({"metrics", "--in", path, "--rho", "51.827"}, out2, err);
  c.expect(code == 0, "metrics exit " + std::to_string(code));
  const double delta = kv_number(out2.str(), "delta_interval_deg");
  c.near(delta, 11.827, 1e-9, "delta for peak at 40");
  std::filesystem::remove(path);
  c.note("shift=" + format_number(shift) + " delta=" + format_number(delta));
  return c.result();
}

Outcome ac11_determinism() {
  Check c;
  const std::vector<std::vector<std::string>> cmds{
      {"sweep", "diagonal", "--noise", "illustrative", "--seed", "11"},
      {"sweep", "diagonal", "--from", "55", "--to", "75", "--step", "1", "--seed", "11"},
      {"sweep", "surface", "--step", "5"},
      {"sweep", "ladder", "--noise", "illustrative", "--seed", "11"}};
  std::size_t idx = 0;
  for (const auto& cmd : cmds) {
    std::string bytes[2];
    for (int k = 0; k < 2; ++k) {
      const std::string path = temp_file("hardysim_acceptance_det_" + std::to_string(k) + ".csv");
      auto args = cmd;
      args.insert(args.end(), {"--out", path, "--threads", k == 0 ? "1" : "0"});
      std::ostringstream out, err;
      const int code = cli::run(args, out, err);
      c.expect(code == 0, cmd[1] + " exit " + std::to_string(code) + ": " + err.str());
      bytes[k] = slurp(path);
      std::filesystem::remove(path);
    }
    c.expect(!bytes[0].empty() && bytes[0] == bytes[1], "sweep " + cmd[1] + " output differs (command " +
                                                            std::to_string(idx) + ")");
    ++idx;
  }
  c.note(std::to_string(cmds.size()) + " sweep commands byte-identical across runs");
  return c.result();
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*fn)();
  };
  const Criterion criteria[] = {
      {"AC1  q_max", ac1_q_max},
      {"AC2  tabulated theoretical q", ac2_table_q},
      {"AC3  Hardy equations vanish on grid", ac3_hardy_grid},
      {"AC4  decomposition identity", ac4_decomposition},
      {"AC5  state classification", ac5_classification},
      {"AC6  phi=90 failure set", ac6_phi90},
      {"AC7  q surface optimum", ac7_surface_argmax},
      {"AC8  shot statistics", ac8_shots},
      {"AC9  noisy-model properties", ac9_noise_properties},
      {"AC10 metrics plumbing", ac10_metrics},
      {"AC11 sweep determinism", ac11_determinism},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %-38s %s (%.0f ms)\n", o.pass ? "PASS" : "FAIL", cr.name, o.detail.c_str(), ms);
    if (!o.pass) ++failed;
  }
  std::printf("criteria=%zu passed=%zu failed=%d\n", std::size(criteria), std::size(criteria) - failed, failed);
  return failed;
}
