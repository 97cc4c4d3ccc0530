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

#ifndef HARDYSIM_HARDY_H_
#define HARDYSIM_HARDY_H_

#include <array>
#include <numbers>
#include <string_view>
#include <vector>

#include "hardysim/statevector.h"

namespace hardysim {

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Optimum theta = phi in degrees, rounded as usually quoted. The exact value
/// is optimal_angles().
inline constexpr double kHardyOptimumDeg = 51.827;

/// Register slots of the two parties.
inline constexpr int kAliceQubit = 1;
inline constexpr int kBobQubit = 0;

struct ChiAngle {
  double value;
  /// Set when theta sits on the tan(theta) pole and the limit was substituted.
  bool at_singularity = false;
};

/// Solves cot(chi) = tan(theta) * cos(phi) with chi in (0, pi).
///
/// At |cos(theta)| < 1e-15 the limit theta -> pi/2 from below is used:
/// chi -> 0 when sin(theta)cos(phi) > 0, chi -> pi when it is < 0, and
/// chi = pi/2 when cos(phi) vanishes as well.
ChiAngle chi_of(double theta, double phi);

/// Interferometer settings (theta, phi); chi and lambda are derived.
class HardyParams {
 public:
  static HardyParams from_radians(double theta, double phi);
  static HardyParams from_degrees(double theta_deg, double phi_deg);

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  double chi() const { return chi_.value; }
  /// Phase-gate angle of the native decomposition; always equal to phi.
  double lambda() const { return phi_; }
  bool chi_at_singularity() const { return chi_.at_singularity; }

 private:
  HardyParams(double theta, double phi);

  double theta_;
  double phi_;
  ChiAngle chi_;
};

enum class Party { kAlice, kBob };

struct MeasurementSetting {
  Party party;
  int index;  // 1 or 2
  /// Composed rotation applied before the sigma_z readout.
  UnitaryMatrix rotation;
  /// Native U1/U3 gates in application order; their product equals `rotation`.
  std::vector<UnitaryMatrix> native;
};

/// a1 = U_B(pi/4), b1 = U_B(0), a2 = U_P(2phi) U_B(pi/4) U_P(-2phi),
/// b2 = U_P(phi) U_B(chi) U_P(-phi).
MeasurementSetting measurement_setting(const HardyParams& p, Party party, int index);

/// Beam splitters U_B(pi/4) on Alice and U_B(theta) on Bob, then the
/// CNOT-decomposed coupling U_C(phi). Acts on |00>.
Circuit preparation_circuit(const HardyParams& p);

/// Preparation followed by Alice's and Bob's native measurement gates.
Circuit hardy_circuit(const HardyParams& p, int a_index, int b_index);

/// State produced by preparation_circuit on |00>.
StateVector prepare_state(const HardyParams& p);

/// (cos t |00> + sin t |01> + cos t |10> + sin t e^{2i phi} |11>) / sqrt(2).
StateVector closed_form_state(const HardyParams& p);

/// Outcome value +1 corresponds to computational |0>, -1 to |1>, for both parties.
std::size_t outcome_index(int a_outcome, int b_outcome);

double joint_probability(const HardyParams& p, int a_index, int b_index, int a_outcome,
                         int b_outcome);

/// One of the four Hardy conditions: measurement choice plus flagged outcome.
struct HardyEvent {
  int a_index;
  int b_index;
  int a_outcome;
  int b_outcome;
};

/// P(+1,+1|A1,B1), P(+1,-1|A2,B1), P(-1,+1|A1,B2), P(+1,+1|A2,B2).
inline constexpr std::array<HardyEvent, 4> kHardyEvents{{
    {1, 1, +1, +1},
    {2, 1, +1, -1},
    {1, 2, -1, +1},
    {2, 2, +1, +1},
}};

struct HardyProbabilities {
  double p11_a1b1;
  double p1m1_a2b1;
  double pm11_a1b2;
  double p11_a2b2;
};

HardyProbabilities hardy_vector(const HardyParams& p);

/// |(1/2) cos(theta) cos(chi) (1 - e^{-2i phi})|^2.
double analytic_q(double theta, double phi);

/// (5 sqrt(5) - 11) / 2.
double q_max();

struct Angles {
  double theta;
  double phi;
};

/// theta = phi = arccos(2 - sqrt(5)) / 2.
Angles optimal_angles();

enum class StateKind { kMES, kPS, kNMES };

std::string_view to_string(StateKind kind);
/// Throws std::invalid_argument for anything but "MES", "PS", "NMES".
StateKind parse_state_kind(std::string_view text);

inline constexpr double kClassificationTol = 1e-9;

struct StateClass {
  StateKind kind;
  /// |sin(2 theta) sin(phi)|.
  double concurrence;
  /// 2 |a00 a11 - a01 a10| of the prepared state.
  double concurrence_from_state;
};

/// Pure two-qubit concurrence 2|a00 a11 - a01 a10|.
double concurrence(const StateVector& state);

StateClass classify_state(const HardyParams& p);

}  // namespace hardysim

#endif  // HARDYSIM_HARDY_H_
