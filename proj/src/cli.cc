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

#include "hardysim/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "hardysim/hardy.h"
#include "hardysim/metrics.h"
#include "hardysim/noise.h"
#include "hardysim/sweep.h"
#include "hardysim/validate.h"

namespace hardysim::cli {

namespace {

struct SamplingFlags {
  std::string noise = "none";
  std::uint32_t shots = 8192;
  std::uint32_t runs = 10;
  std::uint64_t seed = 0;
  bool exact = false;

  void attach(CLI::App* app) {
    app->add_option("--noise", noise, "Noise profile file, or 'none'")->capture_default_str();
    app->add_option("--shots", shots, "Shots per run")->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--runs", runs, "Runs per circuit")->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--seed", seed, "Master seed for shot sampling")->capture_default_str();
    app->add_flag("--exact", exact, "Use outcome distributions directly (infinite-shot limit)");
  }

  std::optional<ShotConfig> sampling() const {
    if (exact) return std::nullopt;
    return ShotConfig{shots, runs, seed};
  }
};

// Distinguishes I/O and data errors from usage errors on the way out.
struct IoFailure {
  std::string message;
};

NoiseModel resolve_noise(const std::string& spec) {
  if (spec == "none") return NoiseModel::none();
  if (spec == "illustrative") return NoiseModel::illustrative();
  try {
    return load_noise_profile(spec);
  } catch (const ProfileIoError& e) {
    throw IoFailure{e.what()};
  } catch (const std::invalid_argument& e) {
    throw IoFailure{"noise profile '" + spec + "': " + e.what()};
  }
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoFailure{"cannot open '" + path + "' for writing"};
  f << content;
  f.flush();
  if (!f) throw IoFailure{"failed writing '" + path + "'"};
}

void print_counts(std::ostream& out, const ExperimentResult& r) {
  static constexpr const char* kNames[] = {"A1B1", "A2B1", "A1B2", "A2B2"};
  for (std::size_t i = 0; i < 4; ++i) {
    const ShotCounts& c = (*r.counts)[i];
    out << "counts_" << kNames[i] << '=';
    for (std::size_t k = 0; k < 4; ++k) out << (k ? " " : "") << c.total(k);
    out << '\n';
  }
}

int cmd_probe(double theta_in, double phi_in, const SamplingFlags& flags, const std::string& csv,
              std::ostream& out) {
  const double theta_deg = substitute_pole(theta_in);
  if (theta_deg != theta_in) {
    out << "note: theta=" << format_number(theta_in) << " is on the tan pole; using "
        << format_number(theta_deg) << '\n';
  }
  const NoiseModel noise = resolve_noise(flags.noise);
  const auto sampling = flags.sampling();
  const HardyParams p = HardyParams::from_degrees(theta_deg, phi_in);
  const ExperimentResult r = run_experiment(p, noise, sampling, 0);
  const StateClass cls = classify_state(p);
  const EpsilonEstimates& e = r.eps;

  out << "theta_deg=" << format_number(theta_deg) << '\n'
      << "phi_deg=" << format_number(phi_in) << '\n'
      << "chi_deg=" << format_number(rad_to_deg(p.chi())) << '\n'
      << "noise=" << (noise.name().empty() ? flags.noise : noise.name()) << '\n'
      << "class=" << to_string(cls.kind) << '\n'
      << "concurrence=" << format_number(cls.concurrence) << '\n'
      << "q_theory=" << format_number(e.q_theory) << '\n'
      << "eps1=" << format_number(e.eps1) << " stat_err1=" << format_number(e.stat_err1) << '\n'
      << "eps2=" << format_number(e.eps2) << " stat_err2=" << format_number(e.stat_err2) << '\n'
      << "eps3=" << format_number(e.eps3) << " stat_err3=" << format_number(e.stat_err3) << '\n'
      << "eps5=" << format_number(e.eps5) << " stat_err5=" << format_number(e.stat_err5)
      << " run_std5=" << format_number(e.run_std5) << '\n'
      << "eps4_est=" << format_number(e.eps4_estimated) << '\n';
  if (r.counts) print_counts(out, r);

  if (!csv.empty()) {
    SweepRow row = evaluate_point(p, noise, sampling, 0);
    std::ostringstream s;
    write_sweep_csv(s, std::span(&row, 1));
    write_output(csv, s.str(), out);
  }
  return kOk;
}

struct SweepFlags {
  std::string mode;
  double from = 0;
  double to = 90;
  std::optional<double> step;
  std::string out = "-";
  unsigned threads = 0;
};

int cmd_sweep(const SweepFlags& sf, const SamplingFlags& flags, std::ostream& out) {
  const NoiseModel noise = resolve_noise(flags.noise);
  std::vector<Angles> pts;
  std::optional<ShotConfig> sampling = flags.sampling();
  if (sf.mode == "diagonal" || sf.mode == "surface") {
    const double step = sf.step.value_or(sf.mode == "diagonal" ? 5.0 : 1.0);
    const auto axis = axis_values(sf.from, sf.to, step);
    if (sf.mode == "diagonal") {
      for (double a : axis) {
        const double t = deg_to_rad(substitute_pole(a));
        pts.push_back({t, t});
      }
    } else {
      sampling.reset();
      for (double t : axis) {
        for (double p : axis) pts.push_back({deg_to_rad(substitute_pole(t)), deg_to_rad(p)});
      }
    }
  } else {
    pts = baseline_points();
    const auto ladder = min_q_ladder();
    pts.insert(pts.end(), ladder.begin(), ladder.end());
  }
  const auto rows = sweep_points(pts, noise, sampling, sf.threads);
  std::ostringstream s;
  write_sweep_csv(s, rows);
  write_output(sf.out, s.str(), out);
  return kOk;
}

struct MetricsFlags {
  std::string in;
  std::optional<double> baseline;
  double k_sigma = 3.0;
  double rho = kHardyOptimumDeg;
};

int cmd_metrics(const MetricsFlags& mf, std::ostream& out) {
  std::ifstream f(mf.in, std::ios::binary);
  if (!f) throw IoFailure{"cannot read '" + mf.in + "'"};
  std::vector<SweepRow> rows;
  try {
    rows = read_sweep_csv(f);
  } catch (const CsvError& e) {
    throw IoFailure{mf.in + ": " + e.what()};
  }
  if (rows.empty()) throw IoFailure{mf.in + ": no data rows"};

  PerformanceReport rep;
  try {
    rep = performance_report(rows, mf.k_sigma, mf.baseline, mf.rho);
  } catch (const std::invalid_argument& e) {
    throw IoFailure{mf.in + ": " + e.what()};
  }
  auto opt = [](const auto& v, auto fn) { return v ? format_number(fn(*v)) : std::string("n/a"); };

  out << "Performance report for " << mf.in << " (" << rows.size() << " rows)\n"
      << "  baseline eps4 (max over MES/PS): " << format_number(rep.baseline_eps4) << '\n'
      << "  minimum distinguishable q:       "
      << (rep.min_distinguishable_q ? format_number(*rep.min_distinguishable_q)
                                    : std::string("not established"))
      << '\n'
      << "  eps5 peak shift (deg):           " << opt(rep.shift, [](auto& s) { return s.shift_deg; })
      << '\n'
      << "  delta interval (deg):            " << opt(rep.delta, [](auto& d) { return d.delta_deg; })
      << '\n'
      << "  eps4 fluctuation std / range:    "
      << opt(rep.fluctuation, [](auto& x) { return x.std_dev; }) << " / "
      << opt(rep.fluctuation, [](auto& x) { return x.range; }) << "\n\n";

  out << "baseline_eps4=" << format_number(rep.baseline_eps4) << '\n'
      << "min_distinguishable_q="
      << (rep.min_distinguishable_q ? format_number(*rep.min_distinguishable_q)
                                    : std::string("not_established"))
      << '\n'
      << "shift_deg=" << opt(rep.shift, [](auto& s) { return s.shift_deg; }) << '\n'
      << "peak_deg=" << opt(rep.shift, [](auto& s) { return s.peak_deg; }) << '\n'
      << "shift_tie=" << (rep.shift && rep.shift->tie ? 1 : 0) << '\n'
      << "delta_interval_deg=" << opt(rep.delta, [](auto& d) { return d.delta_deg; }) << '\n'
      << "delta_at_edge=" << (rep.delta && rep.delta->at_edge ? 1 : 0) << '\n'
      << "eps4_fluctuation_std=" << opt(rep.fluctuation, [](auto& x) { return x.std_dev; }) << '\n'
      << "eps4_fluctuation_range=" << opt(rep.fluctuation, [](auto& x) { return x.range; }) << '\n';
  return kOk;
}

int cmd_reduced(const std::string& variant, const SamplingFlags& flags, std::ostream& out) {
  const ReducedVariant v = variant == "ps_00" ? ReducedVariant::kPs00 : ReducedVariant::kPs01;
  const ReducedComparison c = reduced_circuit_compare(v, resolve_noise(flags.noise), flags.sampling());
  out << "variant=" << variant << '\n'
      << "full_gates=" << c.full_gates << '\n'
      << "reduced_gates=" << c.reduced_gates << '\n'
      << "full_eps=" << format_number(c.full_eps) << " stat_err=" << format_number(c.full_stat_err)
      << '\n'
      << "reduced_eps=" << format_number(c.reduced_eps)
      << " stat_err=" << format_number(c.reduced_stat_err) << '\n';
  return kOk;
}

int cmd_validate(const ValidationOptions& opts, std::ostream& out) {
  const ValidationReport rep = run_validation(opts);
  std::size_t passed = 0;
  for (const SuiteResult& s : rep.suites) {
    out << (s.passed ? "[PASS] " : "[FAIL] ") << s.name << " (" << s.checks << " checks): "
        << s.detail << '\n';
    passed += s.passed ? 1 : 0;
  }
  out << "suites=" << rep.suites.size() << " passed=" << passed
      << " failed=" << rep.suites.size() - passed << '\n';
  return rep.passed() ? kOk : kValidationFailure;
}

}  // namespace

double substitute_pole(double theta_deg) {
  const double r = std::fmod(theta_deg, 180.0);
  if (r == 90.0 || r == -90.0) return theta_deg - 0.01;
  return theta_deg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hardy nonlocality test simulator", "hardysim"};
  app.require_subcommand(1);

  auto* probe = app.add_subcommand("probe", "Run the four Hardy circuits at one (theta, phi) in degrees");
  double theta = 0, phi = 0;
  std::string probe_csv;
  SamplingFlags probe_flags;
  probe->add_option("theta", theta, "theta in degrees")->required();
  probe->add_option("phi", phi, "phi in degrees")->required();
  probe->add_option("--csv", probe_csv, "Also write the point as a sweep CSV row");
  probe_flags.attach(probe);

  auto* sweep = app.add_subcommand("sweep", "Write sweep rows as CSV");
  SweepFlags sweep_flags;
  SamplingFlags sweep_sampling;
  sweep->add_option("mode", sweep_flags.mode, "diagonal | surface | ladder")
      ->required()
      ->check(CLI::IsMember({"diagonal", "surface", "ladder"}));
  sweep->add_option("--from", sweep_flags.from, "First angle in degrees")->capture_default_str();
  sweep->add_option("--to", sweep_flags.to, "Last angle in degrees")->capture_default_str();
  sweep->add_option("--step", sweep_flags.step, "Angle step in degrees (diagonal 5, surface 1)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--out", sweep_flags.out, "Output CSV path, '-' for stdout")->capture_default_str();
  sweep->add_option("--threads", sweep_flags.threads, "Worker threads, 0 = all cores");
  sweep_sampling.attach(sweep);

  auto* metrics = app.add_subcommand("metrics", "Performance measures from a sweep CSV");
  MetricsFlags metrics_flags;
  metrics->add_option("--in", metrics_flags.in, "Sweep CSV")->required();
  metrics->add_option("--baseline", metrics_flags.baseline,
                      "Baseline eps4; default is the max over MES/PS rows");
  metrics->add_option("--k-sigma", metrics_flags.k_sigma, "Separation in statistical errors")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  metrics->add_option("--rho", metrics_flags.rho, "Reference angle for shift and delta")
      ->capture_default_str();

  auto* reduced = app.add_subcommand("reduced", "Compare full and gate-reduced product-state circuits");
  std::string variant;
  SamplingFlags reduced_flags;
  reduced->add_option("variant", variant, "ps_00 | ps_01")
      ->required()
      ->check(CLI::IsMember({"ps_00", "ps_01"}));
  reduced_flags.attach(reduced);

  auto* validate = app.add_subcommand("validate", "Run the built-in invariant suites");
  ValidationOptions vopts;
  validate->add_option("--grid", vopts.grid_points, "Grid points per axis")->check(CLI::Range(2, 2001));
  validate->add_option("--lambda-skew", vopts.lambda_skew,
                       "Test hook: offset added to lambda in the coupling decomposition");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*probe) return cmd_probe(theta, phi, probe_flags, probe_csv, out);
    if (*sweep) return cmd_sweep(sweep_flags, sweep_sampling, out);
    if (*metrics) return cmd_metrics(metrics_flags, out);
    if (*reduced) return cmd_reduced(variant, reduced_flags, out);
    if (*validate) return cmd_validate(vopts, out);
  } catch (const IoFailure& e) {
    err << "error: " << e.message << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hardysim::cli
