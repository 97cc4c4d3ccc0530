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

#include "hardysim/sweep.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <thread>

namespace hardysim {

std::vector<double> axis_values(double from, double to, double step) {
  if (!(step > 0) || !std::isfinite(step)) {
    throw std::invalid_argument("grid step must be positive");
  }
  if (!std::isfinite(from) || !std::isfinite(to) || to < from) {
    throw std::invalid_argument("empty grid: upper bound below lower bound");
  }
  const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = from + static_cast<double>(i) * step;
  return v;
}

QSurface::Peak QSurface::argmax() const {
  if (values.empty()) throw std::logic_error("argmax of an empty surface");
  const auto it = std::max_element(values.begin(), values.end());
  const auto flat = static_cast<std::size_t>(it - values.begin());
  return {flat / phis.size(), flat % phis.size(), *it};
}

QSurface q_surface(const GridSpec& grid) {
  QSurface s;
  s.thetas = axis_values(grid.theta_from, grid.theta_to, grid.step);
  s.phis = axis_values(grid.phi_from, grid.phi_to, grid.step);
  s.values.resize(s.thetas.size() * s.phis.size());
  for (std::size_t i = 0; i < s.thetas.size(); ++i) {
    for (std::size_t j = 0; j < s.phis.size(); ++j) {
      s.values[i * s.phis.size() + j] = analytic_q(s.thetas[i], s.phis[j]);
    }
  }
  return s;
}

SweepRow evaluate_point(const HardyParams& p, const NoiseModel& noise,
                        const std::optional<ShotConfig>& sampling, std::uint64_t stream) {
  const ExperimentResult r = run_experiment(p, noise, sampling, stream);
  SweepRow row;
  row.theta_deg = rad_to_deg(p.theta());
  row.phi_deg = rad_to_deg(p.phi());
  row.q_theory = r.eps.q_theory;
  row.eps1 = r.eps.eps1;
  row.eps2 = r.eps.eps2;
  row.eps3 = r.eps.eps3;
  row.eps5 = r.eps.eps5;
  row.eps4_est = r.eps.eps4_estimated;
  row.stat_err = r.eps.stat_err5;
  row.state_class = classify_state(p).kind;
  return row;
}

std::vector<SweepRow> sweep_points(std::span<const Angles> points, const NoiseModel& noise,
                                   const std::optional<ShotConfig>& sampling, unsigned threads) {
  if (points.empty()) throw std::invalid_argument("sweep needs at least one point");
  if (sampling) sampling->validate();
  std::vector<SweepRow> rows(points.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(points.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        rows[i] = evaluate_point(HardyParams::from_radians(points[i].theta, points[i].phi), noise,
                                 sampling, i);
      } catch (...) {
        const std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<SweepRow> diagonal_sweep(std::span<const double> angles, const NoiseModel& noise,
                                     const std::optional<ShotConfig>& sampling, unsigned threads) {
  std::vector<Angles> pts;
  pts.reserve(angles.size());
  for (double a : angles) pts.push_back({a, a});
  return sweep_points(pts, noise, sampling, threads);
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 10);
  return std::string(buf, res.ptr);
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    out << format_number(r.theta_deg) << ',' << format_number(r.phi_deg) << ','
        << format_number(r.q_theory) << ',' << format_number(r.eps1) << ','
        << format_number(r.eps2) << ',' << format_number(r.eps3) << ','
        << format_number(r.eps5) << ',' << format_number(r.eps4_est) << ','
        << format_number(r.stat_err) << ',' << to_string(r.state_class) << '\n';
  }
}

namespace {

double parse_field(std::string_view text, std::size_t line, std::string_view column) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw CsvError(line, "bad number '" + std::string(text) + "' in column " + std::string(column));
  }
  return v;
}

}  // namespace

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw CsvError(1, "missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kSweepCsvHeader) {
    throw CsvError(1, "header does not match '" + std::string(kSweepCsvHeader) + "'");
  }
  static constexpr std::string_view kColumns[] = {"theta_deg", "phi_deg", "q_theory",
                                                  "eps1",      "eps2",    "eps3",
                                                  "eps5",      "eps4_est", "stat_err"};
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (fields.size() != 10) {
      throw CsvError(line_no, "expected 10 fields, got " + std::to_string(fields.size()));
    }
    double v[9];
    for (std::size_t i = 0; i < 9; ++i) v[i] = parse_field(fields[i], line_no, kColumns[i]);
    SweepRow r;
    r.theta_deg = v[0];
    r.phi_deg = v[1];
    r.q_theory = v[2];
    r.eps1 = v[3];
    r.eps2 = v[4];
    r.eps3 = v[5];
    r.eps5 = v[6];
    r.eps4_est = v[7];
    r.stat_err = v[8];
    try {
      r.state_class = parse_state_kind(fields[9]);
    } catch (const std::invalid_argument& e) {
      throw CsvError(line_no, e.what());
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace hardysim
