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

#ifndef HARDYSIM_NOISE_H_
#define HARDYSIM_NOISE_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hardysim/hardy.h"
#include "hardysim/statevector.h"

namespace hardysim {

/// Row-stochastic readout matrix: p[true_bit][reported_bit].
struct ReadoutConfusion {
  std::array<std::array<double, 2>, 2> p{{{1.0, 0.0}, {0.0, 1.0}}};

  static ReadoutConfusion ideal() { return {}; }
  static ReadoutConfusion symmetric(double flip);
  /// p01 = P(report 1 | true 0), p10 = P(report 0 | true 1).
  static ReadoutConfusion asymmetric(double p01, double p10);

  double flip0() const { return p[0][1]; }
  double flip1() const { return p[1][0]; }
  void validate() const;
};

/// Depolarizing rate after every one- and two-qubit gate plus terminal
/// per-qubit readout confusion. readout[q] applies to register qubit q.
class NoiseModel {
 public:
  NoiseModel(double p1, double p2, std::array<ReadoutConfusion, 2> readout, std::string name = {});

  static NoiseModel none();
  /// p1 = 0.001, p2 = 0.01, symmetric readout flip 0.02 on both qubits.
  /// Illustrative only; not fitted to any device.
  static NoiseModel illustrative();

  double p1() const { return p1_; }
  double p2() const { return p2_; }
  const ReadoutConfusion& readout(int qubit) const { return readout_.at(static_cast<std::size_t>(qubit)); }
  const std::string& name() const { return name_; }
  bool is_noiseless() const;

 private:
  double p1_;
  double p2_;
  std::array<ReadoutConfusion, 2> readout_;
  std::string name_;
};

/// Raised when a noise profile cannot be read from disk.
class ProfileIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses `key = value` lines. Keys: name, p1, p2, readout0, readout1.
/// A readout value is one flip probability or `p01,p10`. `#` starts a comment.
/// Throws std::invalid_argument on malformed content.
NoiseModel parse_noise_profile(std::string_view text);
/// Throws ProfileIoError if the file cannot be opened.
NoiseModel load_noise_profile(const std::filesystem::path& path);

/// Symmetric depolarizing channel rho -> (1-p) rho + p I/d on 1 or 2 qubits.
/// p = 0 yields a single identity operator.
std::vector<Matrix> depolarizing_kraus(double p, int num_targets);

/// Applies each qubit's confusion matrix to a computational-basis distribution.
std::vector<double> apply_readout(std::span<const double> dist, const NoiseModel& noise);

/// Density-matrix run from |0..0> with a depolarizing channel after every
/// gate and readout confusion on the final populations.
std::vector<double> simulate_noisy(const Circuit& circuit, const NoiseModel& noise);

using Distribution = std::array<double, 4>;

Distribution simulate_noisy(const HardyParams& p, int a_index, int b_index, const NoiseModel& noise);

struct ShotConfig {
  std::uint32_t shots_per_run = 8192;
  std::uint32_t runs = 10;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Per-run outcome counts of one circuit.
struct ShotCounts {
  std::uint32_t shots_per_run = 0;
  std::vector<std::array<std::uint64_t, 4>> runs;

  std::uint64_t total(std::size_t outcome) const;
  double pooled_frequency(std::size_t outcome) const;
  /// Sample standard deviation of per-run frequencies; 0 with one run.
  double run_frequency_std(std::size_t outcome) const;
};

/// Multinomial draw per run. Run r of stream s uses a generator seeded from
/// (cfg.seed, s, r), so any (experiment, run) pair is reproducible on its own.
ShotCounts sample_shots(const Distribution& dist, const ShotConfig& cfg, std::uint64_t stream = 0);

/// sqrt(P (1 - P) / (shots_per_run * runs)).
double statistical_error(double probability, int runs, int shots_per_run = 8192);

struct EpsilonEstimates {
  double eps1 = 0;
  double eps2 = 0;
  double eps3 = 0;
  /// Observed P(+1,+1|A2,B2): eps4 + q.
  double eps5 = 0;
  double stat_err1 = 0;
  double stat_err2 = 0;
  double stat_err3 = 0;
  double stat_err5 = 0;
  double run_std1 = 0;
  double run_std2 = 0;
  double run_std3 = 0;
  double run_std5 = 0;
  double q_theory = 0;
  /// eps5 - q_theory.
  double eps4_estimated = 0;
};

/// counts[i] are the shots of the circuit for kHardyEvents[i].
EpsilonEstimates estimate_epsilons(const std::array<ShotCounts, 4>& counts, double q_theory);
/// Infinite-shot limit: errors are zero.
EpsilonEstimates epsilons_from_distributions(const std::array<Distribution, 4>& dists,
                                             double q_theory);

struct ExperimentResult {
  std::array<Distribution, 4> distributions;
  std::optional<std::array<ShotCounts, 4>> counts;
  EpsilonEstimates eps;
};

/// All four Hardy circuits under `noise`. Without a ShotConfig the
/// distributions are used directly. Circuit i samples on stream 4*stream + i.
ExperimentResult run_experiment(const HardyParams& p, const NoiseModel& noise,
                                const std::optional<ShotConfig>& sampling,
                                std::uint64_t stream = 0);

}  // namespace hardysim

#endif  // HARDYSIM_NOISE_H_
