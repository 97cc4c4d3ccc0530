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

#include "hardysim/hardy.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hardysim/gates.h"

namespace hardysim {

namespace {

using std::numbers::pi;

constexpr double kPoleTol = 1e-15;

void check_index(int index) {
  if (index != 1 && index != 2) {
    throw std::invalid_argument("measurement index must be 1 or 2, got " + std::to_string(index));
  }
}

void check_outcome(int outcome) {
  if (outcome != 1 && outcome != -1) {
    throw std::invalid_argument("outcome must be +1 or -1, got " + std::to_string(outcome));
  }
}

}  // namespace

ChiAngle chi_of(double theta, double phi) {
  const double c = std::cos(theta);
  if (std::abs(c) < kPoleTol) {
    const double slope = std::sin(theta) * std::cos(phi);
    if (std::abs(std::cos(phi)) < kPoleTol) return {pi / 2, true};
    return {slope > 0 ? 0.0 : pi, true};
  }
  return {std::atan2(1.0, std::tan(theta) * std::cos(phi)), false};
}

HardyParams::HardyParams(double theta, double phi)
    : theta_(theta), phi_(phi), chi_(chi_of(theta, phi)) {}

HardyParams HardyParams::from_radians(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw std::invalid_argument("Hardy angles must be finite");
  }
  return HardyParams(theta, phi);
}

HardyParams HardyParams::from_degrees(double theta_deg, double phi_deg) {
  return from_radians(deg_to_rad(theta_deg), deg_to_rad(phi_deg));
}

MeasurementSetting measurement_setting(const HardyParams& p, Party party, int index) {
  check_index(index);
  using namespace gates;
  const double lam = p.lambda();
  if (party == Party::kAlice) {
    if (index == 1) {
      return {party, index, beam_splitter(pi / 4), {u3(pi / 2, 0, 0)}};
    }
    return {party, index,
            phase_shifter(2 * p.phi()) * beam_splitter(pi / 4) * phase_shifter(-2 * p.phi()),
            {u1(-2 * lam), u3(pi / 2, 0, 0), u1(2 * lam)}};
  }
  if (index == 1) {
    return {party, index, beam_splitter(0), {u3(0, 0, 0)}};
  }
  return {party, index,
          phase_shifter(p.phi()) * beam_splitter(p.chi()) * phase_shifter(-p.phi()),
          {u1(-lam), u3(2 * p.chi(), 0, 0), u1(lam)}};
}

Circuit preparation_circuit(const HardyParams& p) {
  Circuit c(2);
  // U_B(theta) = U3(2 theta, 0, 0).
  c.add(gates::u3(pi / 2, 0, 0), {kAliceQubit}, "u3");
  c.add(gates::u3(2 * p.theta(), 0, 0), {kBobQubit}, "u3");
  c.append(gates::coupling_decomposed(p.phi()));
  return c;
}

Circuit hardy_circuit(const HardyParams& p, int a_index, int b_index) {
  Circuit c = preparation_circuit(p);
  for (const auto& g : measurement_setting(p, Party::kAlice, a_index).native) {
    c.add(g, {kAliceQubit}, "meas");
  }
  for (const auto& g : measurement_setting(p, Party::kBob, b_index).native) {
    c.add(g, {kBobQubit}, "meas");
  }
  return c;
}

StateVector prepare_state(const HardyParams& p) {
  return run_circuit(preparation_circuit(p), StateVector::basis(2, 0));
}

StateVector closed_form_state(const HardyParams& p) {
  const double r = std::numbers::sqrt2 / 2;
  const double c = std::cos(p.theta()) * r;
  const double s = std::sin(p.theta()) * r;
  return StateVector::from_amplitudes({c, s, c, s * std::polar(1.0, 2 * p.phi())});
}

std::size_t outcome_index(int a_outcome, int b_outcome) {
  check_outcome(a_outcome);
  check_outcome(b_outcome);
  const std::size_t a_bit = a_outcome == -1 ? 1 : 0;
  const std::size_t b_bit = b_outcome == -1 ? 1 : 0;
  return (a_bit << kAliceQubit) | (b_bit << kBobQubit);
}

double joint_probability(const HardyParams& p, int a_index, int b_index, int a_outcome,
                         int b_outcome) {
  const std::size_t k = outcome_index(a_outcome, b_outcome);
  const StateVector out = run_circuit(hardy_circuit(p, a_index, b_index), StateVector::basis(2, 0));
  return outcome_distribution(out)[k];
}

HardyProbabilities hardy_vector(const HardyParams& p) {
  std::array<double, 4> v{};
  for (std::size_t i = 0; i < kHardyEvents.size(); ++i) {
    const HardyEvent& e = kHardyEvents[i];
    v[i] = joint_probability(p, e.a_index, e.b_index, e.a_outcome, e.b_outcome);
  }
  return {v[0], v[1], v[2], v[3]};
}

double analytic_q(double theta, double phi) {
  const double chi = chi_of(theta, phi).value;
  const Complex amp = 0.5 * std::cos(theta) * std::cos(chi) * (1.0 - std::polar(1.0, -2 * phi));
  return std::norm(amp);
}

double q_max() { return (5.0 * std::sqrt(5.0) - 11.0) / 2.0; }

Angles optimal_angles() {
  const double t = 0.5 * std::acos(2.0 - std::sqrt(5.0));
  return {t, t};
}

std::string_view to_string(StateKind kind) {
  switch (kind) {
    case StateKind::kMES:
      return "MES";
    case StateKind::kPS:
      return "PS";
    case StateKind::kNMES:
      return "NMES";
  }
  return "?";
}

StateKind parse_state_kind(std::string_view text) {
  if (text == "MES") return StateKind::kMES;
  if (text == "PS") return StateKind::kPS;
  if (text == "NMES") return StateKind::kNMES;
  throw std::invalid_argument("unknown state class '" + std::string(text) + "'");
}

double concurrence(const StateVector& state) {
  if (state.num_qubits() != 2) {
    throw std::invalid_argument("concurrence is defined here for two-qubit pure states");
  }
  return 2.0 * std::abs(state[0] * state[3] - state[1] * state[2]);
}

StateClass classify_state(const HardyParams& p) {
  const double c = std::abs(std::sin(2 * p.theta()) * std::sin(p.phi()));
  const double from_state = concurrence(prepare_state(p));
  StateKind kind = StateKind::kNMES;
  if (c < kClassificationTol) {
    kind = StateKind::kPS;
  } else if (c > 1.0 - kClassificationTol) {
    kind = StateKind::kMES;
  }
  return {kind, c, from_state};
}

}  // namespace hardysim
