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

#include "hardysim/validate.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hardysim/gates.h"
#include "hardysim/hardy.h"

namespace hardysim {

namespace {

using std::numbers::pi;

// Tracks the worst deviation against a fixed tolerance.
class Suite {
 public:
  Suite(std::string name, double tol) : name_(std::move(name)), tol_(tol) {}

  void check(double deviation, const std::string& where) {
    ++checks_;
    if (!(deviation <= worst_)) {
      worst_ = deviation;
      worst_where_ = where;
    }
  }
  void expect(bool ok, const std::string& where) {
    ++checks_;
    if (!ok && failure_.empty()) failure_ = where;
  }

  SuiteResult finish() const {
    const bool ok = failure_.empty() && worst_ <= tol_;
    std::ostringstream d;
    if (!failure_.empty()) {
      d << "failed: " << failure_;
    } else {
      d << "max deviation " << worst_ << " (tol " << tol_ << ")";
      if (!ok) d << " at " << worst_where_;
    }
    return {name_, ok, checks_, d.str()};
  }

 private:
  std::string name_;
  double tol_;
  std::size_t checks_ = 0;
  double worst_ = 0.0;
  std::string worst_where_;
  std::string failure_;
};

std::string at_deg(double theta, double phi) {
  std::ostringstream s;
  s << "theta=" << rad_to_deg(theta) << " phi=" << rad_to_deg(phi);
  return s.str();
}

double unitarity_dev(const UnitaryMatrix& u) {
  const Matrix& m = u.matrix();
  const double id = max_abs_diff(m.adjoint() * m, Matrix::Identity(m.rows(), m.cols()));
  return std::max(id, std::abs(std::abs(m.determinant()) - 1.0));
}

}  // namespace

bool ValidationReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

ValidationReport run_validation(const ValidationOptions& opts) {
  ValidationReport rep;
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> angle(0.0, 2 * pi);

  {
    Suite s("gate-unitarity", kValidationTol);
    for (int i = 0; i < opts.random_trials; ++i) {
      const double a = angle(rng), b = angle(rng), c = angle(rng);
      s.check(unitarity_dev(gates::u1(a)), "u1");
      s.check(unitarity_dev(gates::u3(a, b, c)), "u3");
      s.check(unitarity_dev(gates::beam_splitter(a)), "beam_splitter");
      s.check(unitarity_dev(gates::phase_shifter(a)), "phase_shifter");
      s.check(unitarity_dev(gates::coupling(a)), "coupling");
    }
    s.check(unitarity_dev(gates::cnot(1, 0)), "cnot");
    s.check(unitarity_dev(gates::cnot(0, 1)), "cnot");
    s.check(unitarity_dev(gates::hadamard()), "hadamard");
    s.check(unitarity_dev(gates::pauli_x()), "pauli_x");
    s.check(unitarity_dev(gates::identity()), "identity");
    rep.suites.push_back(s.finish());
  }

  {
    Suite s("beam-splitter-u3-anchor", kExactTol);
    for (int i = 0; i < opts.random_trials; ++i) {
      const double t = angle(rng);
      s.check(max_abs_diff(gates::beam_splitter(t).matrix(), gates::u3(2 * t, 0, 0).matrix()),
              "theta=" + std::to_string(t));
    }
    rep.suites.push_back(s.finish());
  }

  {
    Suite s("coupling-identity", kExactTol);
    for (int i = 0; i < opts.random_trials; ++i) {
      const double phi = angle(rng);
      const Circuit c = gates::coupling_decomposed(phi, phi + opts.lambda_skew);
      s.check(max_abs_diff(circuit_matrix(c), gates::coupling(phi).matrix()),
              "phi=" + std::to_string(phi));
    }
    rep.suites.push_back(s.finish());
  }

  const auto grid = [&](int i) { return pi * i / std::max(1, opts.grid_points - 1); };
  {
    Suite prep("state-preparation", kExactTol);
    Suite vanish("hardy-equations-vanish", kExactTol);
    Suite q_equiv("closed-form-q-equivalence", kValidationTol);
    Suite norm("outcome-normalization", kValidationTol);
    for (int i = 0; i < opts.grid_points; ++i) {
      for (int j = 0; j < opts.grid_points; ++j) {
        const double t = grid(i), p = grid(j);
        const HardyParams hp = HardyParams::from_radians(t, p);
        const std::string where = at_deg(t, p);
        prep.check((prepare_state(hp).amplitudes() - closed_form_state(hp).amplitudes())
                       .cwiseAbs()
                       .maxCoeff(),
                   where);
        std::array<std::vector<double>, 4> dists;
        for (std::size_t e = 0; e < 4; ++e) {
          const HardyEvent& ev = kHardyEvents[e];
          dists[e] = outcome_distribution(
              run_circuit(hardy_circuit(hp, ev.a_index, ev.b_index), StateVector::basis(2, 0)));
          double sum = 0;
          for (double v : dists[e]) sum += v;
          norm.check(std::abs(sum - 1.0), where);
        }
        for (std::size_t e = 0; e < 3; ++e) {
          const HardyEvent& ev = kHardyEvents[e];
          vanish.check(dists[e][outcome_index(ev.a_outcome, ev.b_outcome)], where);
        }
        q_equiv.check(std::abs(dists[3][outcome_index(1, 1)] - analytic_q(t, p)), where);
      }
    }
    rep.suites.push_back(prep.finish());
    rep.suites.push_back(vanish.finish());
    rep.suites.push_back(q_equiv.finish());
    rep.suites.push_back(norm.finish());
  }

  {
    Suite s("state-classification", kValidationTol);
    auto expect_kind = [&](double td, double pd, StateKind want) {
      const StateClass c = classify_state(HardyParams::from_degrees(td, pd));
      s.expect(c.kind == want, at_deg(deg_to_rad(td), deg_to_rad(pd)) + " expected " +
                                   std::string(to_string(want)));
      s.check(std::abs(c.concurrence - c.concurrence_from_state),
              at_deg(deg_to_rad(td), deg_to_rad(pd)));
    };
    for (int k = 0; k <= 18; ++k) {
      const double any = 5.0 * k;
      expect_kind(0, any, StateKind::kPS);
      expect_kind(any, 0, StateKind::kPS);
      expect_kind(90, any, StateKind::kPS);
    }
    expect_kind(45, 90, StateKind::kMES);
    expect_kind(kHardyOptimumDeg, kHardyOptimumDeg, StateKind::kNMES);
    rep.suites.push_back(s.finish());
  }

  {
    Suite s("q-max-optimum", kValidationTol);
    const Angles opt = optimal_angles();
    s.check(std::abs(q_max() - (5 * std::sqrt(5.0) - 11) / 2), "closed form");
    s.check(std::abs(analytic_q(opt.theta, opt.phi) - q_max()), "analytic_q at optimum");
    s.check(std::abs(std::cos(2 * opt.theta) - (2 - std::sqrt(5.0))), "cos(2 theta*)");
    const HardyParams hp = HardyParams::from_radians(opt.theta, opt.phi);
    s.check(std::abs(joint_probability(hp, 2, 2, 1, 1) - q_max()), "circuit at optimum");
    for (int i = 0; i <= 360; i += 2) {
      for (int j = 0; j <= 360; j += 2) {
        const double q = analytic_q(deg_to_rad(i), deg_to_rad(j));
        s.expect(q <= q_max() + kValidationTol, at_deg(deg_to_rad(i), deg_to_rad(j)) + " exceeds q_max");
      }
    }
    rep.suites.push_back(s.finish());
  }

  {
    Suite s("phi90-failure-set", kExactTol);
    for (int td = 10; td <= 80; td += 5) {
      if (td == 45) continue;
      const HardyParams hp = HardyParams::from_degrees(td, 90);
      s.expect(classify_state(hp).kind == StateKind::kNMES,
               at_deg(hp.theta(), hp.phi()) + " should be NMES");
      s.check(analytic_q(hp.theta(), hp.phi()), at_deg(hp.theta(), hp.phi()));
    }
    rep.suites.push_back(s.finish());
  }
  return rep;
}

}  // namespace hardysim
