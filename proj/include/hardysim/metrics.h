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

#ifndef HARDYSIM_METRICS_H_
#define HARDYSIM_METRICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hardysim/sweep.h"

/// Device performance measures derived from Hardy experiments:
///   1. the smallest q whose eps5 still separates from the MES/PS baseline,
///   2. the shift of the observed eps5 peak away from the optimum,
///   3. the fluctuation of estimated eps4 across a sweep.
namespace hardysim {

/// MES/PS points whose eps5 is pure error: (45,90), (0,0), (90,0), (45,0), (90,45) degrees.
std::vector<Angles> baseline_points();

/// Largest eps5 (= estimated eps4, since q = 0) over baseline_points().
double baseline_eps4(const NoiseModel& noise, const std::optional<ShotConfig>& sampling);

/// Baseline taken from rows classified MES or PS; nullopt if there are none.
std::optional<double> baseline_from_rows(std::span<const SweepRow> rows);

/// Tabulated NMES points followed by diagonal points with q = q_max / 2^k, k = 1..10.
std::vector<Angles> min_q_ladder();

struct LadderStep {
  double q_theory;
  double eps5;
  double stat_err;
  bool distinguishable;
};

struct MinQResult {
  /// Empty when not even the largest q separates from the baseline.
  std::optional<double> min_q;
  double baseline;
  /// Visited steps in descending-q order, up to and including the first failure.
  std::vector<LadderStep> steps;
};

/// Walks NMES rows in descending q and returns the last q for which
/// eps5 - k_sigma * stat_err > baseline holds before the first failure.
MinQResult min_distinguishable_q(std::span<const SweepRow> rows, double baseline, double k_sigma);

/// Evaluates baseline_points() and min_q_ladder() and applies min_distinguishable_q.
MinQResult metric_min_q(const NoiseModel& noise, const std::optional<ShotConfig>& sampling,
                        double k_sigma = 3.0, std::optional<double> baseline_override = {});

struct ShiftResult {
  double shift_deg;
  double peak_deg;
  /// Another row shares the maximal eps5; the smaller angle was taken.
  bool tie;
};

/// |argmax_rows eps5 - rho_deg| along theta_deg. Needs >= 3 rows.
ShiftResult metric_shift(std::span<const SweepRow> rows, double rho_deg = kHardyOptimumDeg);

struct Fluctuation {
  /// Sample standard deviation (n - 1) of eps4_est.
  double std_dev;
  double range;
};

/// Needs >= 2 rows.
Fluctuation metric_fluctuation(std::span<const SweepRow> rows);

struct DeltaResult {
  double delta_deg;
  double peak_deg;
  /// The peak sits on the edge of the swept range, so the true maximum may lie
  /// outside it and delta_deg is a lower bound.
  bool at_edge;
};

/// Smallest delta with the eps5 argmax inside [rho - delta, rho + delta].
/// Throws std::invalid_argument when the rows do not cover rho.
DeltaResult delta_interval(std::span<const SweepRow> rows, double rho_deg = kHardyOptimumDeg);

/// Rows with theta_deg == phi_deg, in input order.
std::vector<SweepRow> diagonal_rows(std::span<const SweepRow> rows);

struct PerformanceReport {
  std::optional<double> min_distinguishable_q;
  double baseline_eps4;
  std::optional<ShiftResult> shift;
  std::optional<DeltaResult> delta;
  std::optional<Fluctuation> fluctuation;
};

/// All measures from one table of rows (e.g. a sweep CSV). Shift and delta use
/// the diagonal rows; they are left empty when fewer than three exist or rho is
/// not covered. Throws std::invalid_argument if no baseline can be formed.
PerformanceReport performance_report(std::span<const SweepRow> rows, double k_sigma = 3.0,
                                     std::optional<double> baseline_override = {},
                                     double rho_deg = kHardyOptimumDeg);

/// Product states prepared with fewer gates: ps_00 = H on Alice (theta = phi = 0),
/// ps_01 = H on Alice and X on Bob (theta = 90, phi = 0).
enum class ReducedVariant { kPs00, kPs01 };

/// The full preparation plus (A2, B2) measurement for the variant's product state.
Circuit full_circuit(ReducedVariant v);
/// The short preparation plus the same (A2, B2) measurement gates.
Circuit reduced_circuit(ReducedVariant v);

struct ReducedComparison {
  double full_eps;
  double reduced_eps;
  double full_stat_err;
  double reduced_stat_err;
  std::size_t full_gates;
  std::size_t reduced_gates;
};

/// P(+1,+1) of both circuits under `noise`; distribution-level without sampling.
ReducedComparison reduced_circuit_compare(ReducedVariant v, const NoiseModel& noise,
                                          const std::optional<ShotConfig>& sampling);

}  // namespace hardysim

#endif  // HARDYSIM_METRICS_H_
