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

#ifndef HARDYSIM_SWEEP_H_
#define HARDYSIM_SWEEP_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hardysim/hardy.h"
#include "hardysim/noise.h"

namespace hardysim {

/// Rectangular (theta, phi) grid, radians, inclusive bounds.
struct GridSpec {
  double theta_from;
  double theta_to;
  double phi_from;
  double phi_to;
  double step;
};

/// Axis values from..to in `step` increments; the endpoint is included when it
/// falls on the lattice to within 1e-9 steps. Throws on step <= 0 or to < from.
std::vector<double> axis_values(double from, double to, double step);

struct QSurface {
  std::vector<double> thetas;
  std::vector<double> phis;
  /// values[i * phis.size() + j] = analytic_q(thetas[i], phis[j]).
  std::vector<double> values;

  double at(std::size_t i, std::size_t j) const { return values[i * phis.size() + j]; }

  struct Peak {
    std::size_t theta_index;
    std::size_t phi_index;
    double value;
  };
  /// First maximal cell in row-major order.
  Peak argmax() const;
};

QSurface q_surface(const GridSpec& grid);

struct SweepRow {
  double theta_deg = 0;
  double phi_deg = 0;
  double q_theory = 0;
  double eps1 = 0;
  double eps2 = 0;
  double eps3 = 0;
  double eps5 = 0;
  double eps4_est = 0;
  double stat_err = 0;
  StateKind state_class = StateKind::kPS;
};

/// Full four-circuit pipeline at one point. Sampling (when set) uses stream `stream`.
SweepRow evaluate_point(const HardyParams& p, const NoiseModel& noise,
                        const std::optional<ShotConfig>& sampling, std::uint64_t stream);

/// Evaluates every point; point i samples on stream i. Output order equals
/// input order and does not depend on `threads` (0 = hardware concurrency).
std::vector<SweepRow> sweep_points(std::span<const Angles> points, const NoiseModel& noise,
                                   const std::optional<ShotConfig>& sampling,
                                   unsigned threads = 0);

/// theta = phi at each listed angle (radians).
std::vector<SweepRow> diagonal_sweep(std::span<const double> angles, const NoiseModel& noise,
                                     const std::optional<ShotConfig>& sampling,
                                     unsigned threads = 0);

inline constexpr char kSweepCsvHeader[] =
    "theta_deg,phi_deg,q_theory,eps1,eps2,eps3,eps5,eps4_est,stat_err,class";

/// Writes the header and one LF-terminated row per entry. Numbers use the C
/// locale with 10 significant digits.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);
std::string format_number(double v);

class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses CSV produced by write_sweep_csv; the header must match exactly.
std::vector<SweepRow> read_sweep_csv(std::istream& in);

}  // namespace hardysim

#endif  // HARDYSIM_SWEEP_H_
