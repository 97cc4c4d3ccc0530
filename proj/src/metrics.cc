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

#include "hardysim/metrics.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hardysim/gates.h"

namespace hardysim {

namespace {

constexpr double kDiagonalTol = 1e-9;

// Angle on [0, theta*] where q(t, t) equals `target`; q rises monotonically there.
double diagonal_angle_for_q(double target) {
  double lo = 0.0;
  double hi = optimal_angles().theta;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (analytic_q(mid, mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Index of the first row with the largest eps5, preferring smaller theta on ties.
std::pair<std::size_t, bool> peak_row(std::span<const SweepRow> rows) {
  std::size_t best = 0;
  bool tie = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].eps5 > rows[best].eps5) {
      best = i;
      tie = false;
    } else if (rows[i].eps5 == rows[best].eps5) {
      tie = true;
      if (rows[i].theta_deg < rows[best].theta_deg) best = i;
    }
  }
  return {best, tie};
}

HardyParams variant_params(ReducedVariant v) {
  return v == ReducedVariant::kPs00 ? HardyParams::from_degrees(0, 0)
                                    : HardyParams::from_degrees(90, 0);
}

}  // namespace

std::vector<Angles> baseline_points() {
  std::vector<Angles> pts;
  for (const auto& [t, p] : {std::pair{45.0, 90.0}, {0.0, 0.0}, {90.0, 0.0}, {45.0, 0.0}, {90.0, 45.0}}) {
    pts.push_back({deg_to_rad(t), deg_to_rad(p)});
  }
  return pts;
}

double baseline_eps4(const NoiseModel& noise, const std::optional<ShotConfig>& sampling) {
  const auto pts = baseline_points();
  const auto rows = sweep_points(pts, noise, sampling);
  double best = 0;
  for (const SweepRow& r : rows) best = std::max(best, r.eps5);
  return best;
}

std::optional<double> baseline_from_rows(std::span<const SweepRow> rows) {
  std::optional<double> best;
  for (const SweepRow& r : rows) {
    if (r.state_class == StateKind::kNMES) continue;
    best = best ? std::max(*best, r.eps4_est) : r.eps4_est;
  }
  return best;
}

std::vector<Angles> min_q_ladder() {
  std::vector<Angles> pts;
  for (const auto& [t, p] : {std::pair{kHardyOptimumDeg, kHardyOptimumDeg}, {55.0, 55.0},
                             {45.0, 45.0}, {30.0, 60.0}, {60.0, 30.0}, {10.0, 80.0}, {80.0, 10.0}}) {
    pts.push_back({deg_to_rad(t), deg_to_rad(p)});
  }
  for (int k = 1; k <= 10; ++k) {
    const double a = diagonal_angle_for_q(q_max() / std::ldexp(1.0, k));
    pts.push_back({a, a});
  }
  return pts;
}

MinQResult min_distinguishable_q(std::span<const SweepRow> rows, double baseline, double k_sigma) {
  if (!(k_sigma > 0)) throw std::invalid_argument("k_sigma must be positive");
  std::vector<SweepRow> ladder;
  for (const SweepRow& r : rows) {
    if (r.state_class == StateKind::kNMES && r.q_theory > 0) ladder.push_back(r);
  }
  std::stable_sort(ladder.begin(), ladder.end(),
                   [](const SweepRow& a, const SweepRow& b) { return a.q_theory > b.q_theory; });
  MinQResult out{std::nullopt, baseline, {}};
  for (const SweepRow& r : ladder) {
    const bool ok = r.eps5 - k_sigma * r.stat_err > baseline;
    out.steps.push_back({r.q_theory, r.eps5, r.stat_err, ok});
    if (!ok) break;
    out.min_q = r.q_theory;
  }
  return out;
}

MinQResult metric_min_q(const NoiseModel& noise, const std::optional<ShotConfig>& sampling,
                        double k_sigma, std::optional<double> baseline_override) {
  std::vector<Angles> pts = baseline_points();
  const std::size_t n_base = pts.size();
  const auto ladder = min_q_ladder();
  pts.insert(pts.end(), ladder.begin(), ladder.end());
  const auto rows = sweep_points(pts, noise, sampling);

  double baseline = 0;
  if (baseline_override) {
    baseline = *baseline_override;
  } else {
    for (std::size_t i = 0; i < n_base; ++i) baseline = std::max(baseline, rows[i].eps5);
  }
  return min_distinguishable_q(std::span(rows).subspan(n_base), baseline, k_sigma);
}

ShiftResult metric_shift(std::span<const SweepRow> rows, double rho_deg) {
  if (rows.size() < 3) throw std::invalid_argument("shift needs at least 3 sweep rows");
  const auto [i, tie] = peak_row(rows);
  return {std::abs(rows[i].theta_deg - rho_deg), rows[i].theta_deg, tie};
}

Fluctuation metric_fluctuation(std::span<const SweepRow> rows) {
  if (rows.size() < 2) throw std::invalid_argument("fluctuation needs at least 2 sweep rows");
  double mean = 0;
  double lo = rows.front().eps4_est;
  double hi = lo;
  for (const SweepRow& r : rows) {
    mean += r.eps4_est;
    lo = std::min(lo, r.eps4_est);
    hi = std::max(hi, r.eps4_est);
  }
  mean /= static_cast<double>(rows.size());
  double ss = 0;
  for (const SweepRow& r : rows) ss += (r.eps4_est - mean) * (r.eps4_est - mean);
  return {std::sqrt(ss / static_cast<double>(rows.size() - 1)), hi - lo};
}

DeltaResult delta_interval(std::span<const SweepRow> rows, double rho_deg) {
  if (rows.empty()) throw std::invalid_argument("delta interval needs sweep rows");
  const auto [lo_it, hi_it] = std::minmax_element(
      rows.begin(), rows.end(),
      [](const SweepRow& a, const SweepRow& b) { return a.theta_deg < b.theta_deg; });
  const double lo = lo_it->theta_deg;
  const double hi = hi_it->theta_deg;
  if (rho_deg < lo || rho_deg > hi) {
    throw std::invalid_argument("sweep does not cover the reference angle");
  }
  const auto [i, tie] = peak_row(rows);
  const double peak = rows[i].theta_deg;
  return {std::abs(peak - rho_deg), peak, rows.size() > 1 && (peak == lo || peak == hi)};
}

std::vector<SweepRow> diagonal_rows(std::span<const SweepRow> rows) {
  std::vector<SweepRow> out;
  for (const SweepRow& r : rows) {
    if (std::abs(r.theta_deg - r.phi_deg) <= kDiagonalTol) out.push_back(r);
  }
  return out;
}

PerformanceReport performance_report(std::span<const SweepRow> rows, double k_sigma,
                                     std::optional<double> baseline_override, double rho_deg) {
  PerformanceReport rep{};
  const std::optional<double> baseline =
      baseline_override ? baseline_override : baseline_from_rows(rows);
  if (!baseline) {
    throw std::invalid_argument("no MES/PS rows to form a baseline; pass one explicitly");
  }
  rep.baseline_eps4 = *baseline;
  rep.min_distinguishable_q = min_distinguishable_q(rows, *baseline, k_sigma).min_q;

  const auto diag = diagonal_rows(rows);
  if (diag.size() >= 3) {
    rep.shift = metric_shift(diag, rho_deg);
    try {
      rep.delta = delta_interval(diag, rho_deg);
    } catch (const std::invalid_argument&) {
      rep.delta.reset();
    }
  }
  if (rows.size() >= 2) rep.fluctuation = metric_fluctuation(rows);
  return rep;
}

Circuit full_circuit(ReducedVariant v) { return hardy_circuit(variant_params(v), 2, 2); }

Circuit reduced_circuit(ReducedVariant v) {
  const HardyParams p = variant_params(v);
  Circuit c(2);
  c.add(gates::hadamard(), {kAliceQubit}, "h");
  if (v == ReducedVariant::kPs01) c.add(gates::pauli_x(), {kBobQubit}, "x");
  for (const auto& g : measurement_setting(p, Party::kAlice, 2).native) {
    c.add(g, {kAliceQubit}, "meas");
  }
  for (const auto& g : measurement_setting(p, Party::kBob, 2).native) {
    c.add(g, {kBobQubit}, "meas");
  }
  return c;
}

ReducedComparison reduced_circuit_compare(ReducedVariant v, const NoiseModel& noise,
                                          const std::optional<ShotConfig>& sampling) {
  const Circuit full = full_circuit(v);
  const Circuit reduced = reduced_circuit(v);
  const std::size_t k = outcome_index(+1, +1);

  auto measure = [&](const Circuit& c, std::uint64_t stream) -> std::pair<double, double> {
    const auto d = simulate_noisy(c, noise);
    if (!sampling) return {d[k], 0.0};
    const ShotCounts counts = sample_shots({d[0], d[1], d[2], d[3]}, *sampling, stream);
    const double f = counts.pooled_frequency(k);
    return {f, statistical_error(f, static_cast<int>(sampling->runs),
                                 static_cast<int>(sampling->shots_per_run))};
  };
  const auto [fe, fs] = measure(full, 0);
  const auto [re, rs] = measure(reduced, 1);
  return {fe, re, fs, rs, full.size(), reduced.size()};
}

}  // namespace hardysim
