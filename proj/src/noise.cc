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

#include "hardysim/noise.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "hardysim/gates.h"

namespace hardysim {

namespace {

void check_probability(double p, std::string_view what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text, std::size_t line) {
  text = trim(text);
  double v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("line " + std::to_string(line) + ": expected a number, got '" +
                                std::string(text) + "'");
  }
  return v;
}

ReadoutConfusion parse_readout(std::string_view value, std::size_t line) {
  const auto comma = value.find(',');
  if (comma == std::string_view::npos) {
    return ReadoutConfusion::symmetric(parse_double(value, line));
  }
  return ReadoutConfusion::asymmetric(parse_double(value.substr(0, comma), line),
                                      parse_double(value.substr(comma + 1), line));
}

// Single-qubit Pauli basis {I, X, Y, Z}.
std::array<Matrix, 4> paulis() {
  return {gates::identity().matrix(), gates::pauli_x().matrix(), gates::pauli_y().matrix(),
          gates::pauli_z().matrix()};
}

// 53 random bits mapped onto [0, 1).
double unit_draw(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

}  // namespace

ReadoutConfusion ReadoutConfusion::symmetric(double flip) { return asymmetric(flip, flip); }

ReadoutConfusion ReadoutConfusion::asymmetric(double p01, double p10) {
  check_probability(p01, "readout flip probability");
  check_probability(p10, "readout flip probability");
  ReadoutConfusion r;
  r.p = {{{1.0 - p01, p01}, {p10, 1.0 - p10}}};
  return r;
}

void ReadoutConfusion::validate() const {
  for (const auto& row : p) {
    for (double v : row) check_probability(v, "readout confusion entry");
    if (std::abs(row[0] + row[1] - 1.0) > kExactTol) {
      throw std::invalid_argument("readout confusion rows must sum to 1");
    }
  }
}

NoiseModel::NoiseModel(double p1, double p2, std::array<ReadoutConfusion, 2> readout,
                       std::string name)
    : p1_(p1), p2_(p2), readout_(readout), name_(std::move(name)) {
  check_probability(p1_, "p1");
  check_probability(p2_, "p2");
  for (const auto& r : readout_) r.validate();
}

NoiseModel NoiseModel::none() { return NoiseModel(0.0, 0.0, {}, "none"); }

NoiseModel NoiseModel::illustrative() {
  const auto r = ReadoutConfusion::symmetric(0.02);
  return NoiseModel(0.001, 0.01, {r, r}, "illustrative");
}

bool NoiseModel::is_noiseless() const {
  return p1_ == 0.0 && p2_ == 0.0 &&
         std::all_of(readout_.begin(), readout_.end(),
                     [](const ReadoutConfusion& r) { return r.flip0() == 0.0 && r.flip1() == 0.0; });
}

NoiseModel parse_noise_profile(std::string_view text) {
  double p1 = 0;
  double p2 = 0;
  std::array<ReadoutConfusion, 2> readout{};
  std::string name;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "name" || key == "profile") {
      name = std::string(value);
    } else if (key == "p1") {
      p1 = parse_double(value, line_no);
    } else if (key == "p2") {
      p2 = parse_double(value, line_no);
    } else if (key == "readout0") {
      readout[0] = parse_readout(value, line_no);
    } else if (key == "readout1") {
      readout[1] = parse_readout(value, line_no);
    } else {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown key '" +
                                  std::string(key) + "'");
    }
  }
  return NoiseModel(p1, p2, readout, std::move(name));
}

NoiseModel load_noise_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ProfileIoError("cannot read noise profile '" + path.string() + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  NoiseModel m = parse_noise_profile(buf.str());
  if (m.name().empty()) {
    m = NoiseModel(m.p1(), m.p2(), {m.readout(0), m.readout(1)}, path.stem().string());
  }
  return m;
}

std::vector<Matrix> depolarizing_kraus(double p, int num_targets) {
  check_probability(p, "depolarizing probability");
  if (num_targets != 1 && num_targets != 2) {
    throw std::invalid_argument("depolarizing channel supports 1 or 2 targets");
  }
  const int dim = 1 << num_targets;
  if (p == 0.0) return {Matrix::Identity(dim, dim)};

  const auto pa = paulis();
  const int terms = dim * dim;  // 4 or 16 Pauli strings
  const double w_id = std::sqrt(1.0 - p * (terms - 1) / terms);
  const double w = std::sqrt(p / terms);
  std::vector<Matrix> ks;
  ks.reserve(static_cast<std::size_t>(terms));
  if (num_targets == 1) {
    ks.push_back(w_id * pa[0]);
    for (int i = 1; i < 4; ++i) ks.push_back(w * pa[static_cast<std::size_t>(i)]);
  } else {
    for (int i = 0; i < 16; ++i) {
      const Matrix ps = kron(pa[static_cast<std::size_t>(i / 4)], pa[static_cast<std::size_t>(i % 4)]);
      ks.push_back((i == 0 ? w_id : w) * ps);
    }
  }
  return ks;
}

std::vector<double> apply_readout(std::span<const double> dist, const NoiseModel& noise) {
  std::vector<double> cur(dist.begin(), dist.end());
  int n = 0;
  while ((std::size_t{1} << n) < cur.size()) ++n;
  if ((std::size_t{1} << n) != cur.size() || n > 2) {
    throw std::invalid_argument("readout model covers distributions over at most two qubits");
  }
  for (int q = 0; q < n; ++q) {
    const auto& c = noise.readout(q).p;
    std::vector<double> next(cur.size(), 0.0);
    for (std::size_t k = 0; k < cur.size(); ++k) {
      const std::size_t bit = (k >> q) & 1U;
      const std::size_t k0 = k & ~(std::size_t{1} << q);
      next[k0] += cur[k] * c[bit][0];
      next[k0 | (std::size_t{1} << q)] += cur[k] * c[bit][1];
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<double> simulate_noisy(const Circuit& circuit, const NoiseModel& noise) {
  if (circuit.num_qubits() > 2) {
    throw std::invalid_argument("noise model is defined for at most two qubits");
  }
  DensityMatrix rho = to_density(StateVector::basis(circuit.num_qubits(), 0));
  const auto k1 = depolarizing_kraus(noise.p1(), 1);
  const auto k2 = depolarizing_kraus(noise.p2(), 2);
  for (const GateStep& step : circuit.steps()) {
    rho = apply_unitary(rho, step.gate, step.targets);
    const auto& ks = step.targets.size() == 1 ? k1 : k2;
    if (ks.size() > 1) rho = apply_channel(rho, ks, step.targets);
  }
  std::vector<double> pop = rho.diagonal();
  for (double& v : pop) v = std::max(v, 0.0);
  return apply_readout(pop, noise);
}

Distribution simulate_noisy(const HardyParams& p, int a_index, int b_index, const NoiseModel& noise) {
  const auto v = simulate_noisy(hardy_circuit(p, a_index, b_index), noise);
  return {v[0], v[1], v[2], v[3]};
}

void ShotConfig::validate() const {
  if (shots_per_run < 1) throw std::invalid_argument("shots_per_run must be >= 1");
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
}

std::uint64_t ShotCounts::total(std::size_t outcome) const {
  std::uint64_t t = 0;
  for (const auto& r : runs) t += r.at(outcome);
  return t;
}

double ShotCounts::pooled_frequency(std::size_t outcome) const {
  const double n = static_cast<double>(shots_per_run) * static_cast<double>(runs.size());
  return n > 0 ? static_cast<double>(total(outcome)) / n : 0.0;
}

double ShotCounts::run_frequency_std(std::size_t outcome) const {
  if (runs.size() < 2) return 0.0;
  const double n = static_cast<double>(shots_per_run);
  const double mean = pooled_frequency(outcome);
  double ss = 0;
  for (const auto& r : runs) {
    const double d = static_cast<double>(r.at(outcome)) / n - mean;
    ss += d * d;
  }
  return std::sqrt(ss / static_cast<double>(runs.size() - 1));
}

ShotCounts sample_shots(const Distribution& dist, const ShotConfig& cfg, std::uint64_t stream) {
  cfg.validate();
  double sum = 0;
  for (double p : dist) {
    if (!(p >= -kExactTol) || !std::isfinite(p)) {
      throw std::invalid_argument("distribution has a negative or non-finite entry");
    }
    sum += std::max(p, 0.0);
  }
  if (std::abs(sum - 1.0) > kValidationTol) {
    throw std::invalid_argument("distribution does not sum to 1");
  }
  std::array<double, 4> cdf{};
  std::size_t last_nonzero = 0;
  double acc = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    acc += std::max(dist[k], 0.0) / sum;
    cdf[k] = acc;
    if (dist[k] > 0) last_nonzero = k;
  }

  ShotCounts out;
  out.shots_per_run = cfg.shots_per_run;
  out.runs.resize(cfg.runs);
  for (std::uint32_t r = 0; r < cfg.runs; ++r) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32), r};
    std::mt19937_64 gen(seq);
    auto& counts = out.runs[r];
    counts.fill(0);
    for (std::uint32_t s = 0; s < cfg.shots_per_run; ++s) {
      const double u = unit_draw(gen);
      std::size_t k = 0;
      while (k < 4 && !(u < cdf[k])) ++k;
      if (k == 4) k = last_nonzero;
      ++counts[k];
    }
  }
  return out;
}

double statistical_error(double probability, int runs, int shots_per_run) {
  check_probability(probability, "probability");
  if (runs < 1 || shots_per_run < 1) {
    throw std::invalid_argument("runs and shots_per_run must be >= 1");
  }
  return std::sqrt(probability * (1.0 - probability) /
                   (static_cast<double>(shots_per_run) * static_cast<double>(runs)));
}

EpsilonEstimates estimate_epsilons(const std::array<ShotCounts, 4>& counts, double q_theory) {
  std::array<double, 4> eps{};
  std::array<double, 4> err{};
  std::array<double, 4> rstd{};
  for (std::size_t i = 0; i < 4; ++i) {
    const HardyEvent& e = kHardyEvents[i];
    const std::size_t k = outcome_index(e.a_outcome, e.b_outcome);
    const ShotCounts& c = counts[i];
    eps[i] = c.pooled_frequency(k);
    err[i] = statistical_error(eps[i], static_cast<int>(c.runs.size()), static_cast<int>(c.shots_per_run));
    rstd[i] = c.run_frequency_std(k);
  }
  EpsilonEstimates out;
  out.eps1 = eps[0];
  out.eps2 = eps[1];
  out.eps3 = eps[2];
  out.eps5 = eps[3];
  out.stat_err1 = err[0];
  out.stat_err2 = err[1];
  out.stat_err3 = err[2];
  out.stat_err5 = err[3];
  out.run_std1 = rstd[0];
  out.run_std2 = rstd[1];
  out.run_std3 = rstd[2];
  out.run_std5 = rstd[3];
  out.q_theory = q_theory;
  out.eps4_estimated = out.eps5 - q_theory;
  return out;
}

EpsilonEstimates epsilons_from_distributions(const std::array<Distribution, 4>& dists,
                                             double q_theory) {
  std::array<double, 4> eps{};
  for (std::size_t i = 0; i < 4; ++i) {
    const HardyEvent& e = kHardyEvents[i];
    eps[i] = dists[i][outcome_index(e.a_outcome, e.b_outcome)];
  }
  EpsilonEstimates out;
  out.eps1 = eps[0];
  out.eps2 = eps[1];
  out.eps3 = eps[2];
  out.eps5 = eps[3];
  out.q_theory = q_theory;
  out.eps4_estimated = out.eps5 - q_theory;
  return out;
}

ExperimentResult run_experiment(const HardyParams& p, const NoiseModel& noise,
                                const std::optional<ShotConfig>& sampling, std::uint64_t stream) {
  ExperimentResult res;
  for (std::size_t i = 0; i < 4; ++i) {
    const HardyEvent& e = kHardyEvents[i];
    res.distributions[i] = simulate_noisy(p, e.a_index, e.b_index, noise);
  }
  const double q = analytic_q(p.theta(), p.phi());
  if (!sampling) {
    res.eps = epsilons_from_distributions(res.distributions, q);
    return res;
  }
  std::array<ShotCounts, 4> counts;
  for (std::size_t i = 0; i < 4; ++i) {
    counts[i] = sample_shots(res.distributions[i], *sampling, 4 * stream + i);
  }
  res.eps = estimate_epsilons(counts, q);
  res.counts = std::move(counts);
  return res;
}

}  // namespace hardysim
