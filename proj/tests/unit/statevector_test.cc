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

#include "hardysim/statevector.h"

#include <gtest/gtest.h>

#include <array>
#include <random>
#include <vector>

#include "hardysim/gates.h"
#include "hardysim/hardy.h"
#include "hardysim/noise.h"
#include "test_util.h"

namespace hardysim {
namespace {

using testing::diag;
using testing::expi;
using testing::kPi;
using testing::mat2;

TEST(UnitaryMatrixTest, RejectsNonUnitaryAndBadShape) {
  EXPECT_THROW(UnitaryMatrix(mat2(1, 1, 0, 1)), std::invalid_argument);
  EXPECT_THROW(UnitaryMatrix(Matrix::Identity(3, 3)), std::invalid_argument);
  EXPECT_NO_THROW(UnitaryMatrix(Matrix::Identity(4, 4)));
}

TEST(StateVectorTest, RejectsZeroNormAndUnnormalized) {
  EXPECT_THROW(StateVector(2, Vector::Zero(4)), std::invalid_argument);
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(StateVector(2, Vector::Zero(3)), std::invalid_argument);
  EXPECT_THROW(StateVector(6, Vector::Zero(64)), std::invalid_argument);
  EXPECT_THROW(StateVector::basis(2, 4), std::out_of_range);
}

TEST(ApplyGateTest, IdentityLeavesStateUnchanged) {
  std::mt19937_64 rng(7);
  const StateVector s = testing::random_state(3, rng);
  for (int q = 0; q < 3; ++q) {
    const StateVector out = apply_gate(s, gates::identity(), {q});
    EXPECT_LE((out.amplitudes() - s.amplitudes()).cwiseAbs().maxCoeff(), kExactTol);
  }
}

TEST(ApplyGateTest, XOnQubitZeroFlipsLowBit) {
  const StateVector out = apply_gate(StateVector::basis(2, 0), gates::pauli_x(), {0});
  EXPECT_NEAR(std::abs(out[1] - 1.0), 0.0, kExactTol);
  EXPECT_NEAR(out.norm(), 1.0, kExactTol);
}

TEST(ApplyGateTest, HadamardOnQubitOne) {
  const StateVector out = apply_gate(StateVector::basis(2, 0), gates::hadamard(), {1});
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(out[0] - r), 0.0, kExactTol);
  EXPECT_NEAR(std::abs(out[2] - r), 0.0, kExactTol);
  EXPECT_NEAR(std::abs(out[1]) + std::abs(out[3]), 0.0, kExactTol);
}

TEST(ApplyGateTest, Errors) {
  const StateVector s = StateVector::basis(2, 0);
  EXPECT_THROW(apply_gate(s, gates::cnot(1, 0), {0}), std::invalid_argument);
  EXPECT_THROW(apply_gate(s, gates::pauli_x(), {2}), std::out_of_range);
  EXPECT_THROW(apply_gate(s, gates::pauli_x(), {-1}), std::out_of_range);
  EXPECT_THROW(apply_gate(s, gates::cnot(1, 0), {1, 1}), std::invalid_argument);
}

TEST(TensorTest, IdentityAndBitOrder) {
  EXPECT_MAT_NEAR(tensor(gates::identity(), gates::identity()).matrix(), Matrix::Identity(4, 4), kExactTol);
  const StateVector out =
      apply_gate(StateVector::basis(2, 0), tensor(gates::pauli_x(), gates::identity()), {1, 0});
  EXPECT_NEAR(std::abs(out[2] - 1.0), 0.0, kExactTol);
}

TEST(TensorTest, PhasePairMatchesDirectProduct) {
  const double l = 0.731;
  const UnitaryMatrix t = tensor(gates::u1(l), gates::u1(-l));
  // |q1 q0>: phase e^{i l q1} e^{-i l q0}
  EXPECT_MAT_NEAR(t.matrix(), diag({1.0, expi(-l), expi(l), 1.0}), kExactTol);
}

TEST(TensorTest, MatchesExplicitKroneckerEntries) {
  std::mt19937_64 rng(11);
  const Matrix a = testing::random_unitary(2, rng);
  const Matrix b = testing::random_unitary(2, rng);
  const Matrix t = tensor(UnitaryMatrix(a), UnitaryMatrix(b)).matrix();
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i0 = 0; i0 < 2; ++i0)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j0 = 0; j0 < 2; ++j0)
          EXPECT_NEAR(std::abs(t(2 * i1 + i0, 2 * j1 + j0) - a(i1, j1) * b(i0, j0)), 0.0, kExactTol);
}

TEST(RunCircuitTest, EmptyCircuitIsIdentity) {
  std::mt19937_64 rng(3);
  const StateVector s = testing::random_state(2, rng);
  const StateVector out = run_circuit(Circuit(2), s);
  EXPECT_LE((out.amplitudes() - s.amplitudes()).cwiseAbs().maxCoeff(), 0.0);
}

TEST(RunCircuitTest, BellPair) {
  Circuit c(2);
  c.add(gates::hadamard(), {kAliceQubit}).add(gates::cnot(1, 0), {1, 0});
  const std::vector<double> p = outcome_distribution(run_circuit(c, StateVector::basis(2, 0)));
  EXPECT_NEAR(p[0], 0.5, kExactTol);
  EXPECT_NEAR(p[3], 0.5, kExactTol);
  EXPECT_NEAR(p[1] + p[2], 0.0, kExactTol);
}

TEST(RunCircuitTest, HardyA1B1CircuitAtOptimumHasNoPlusPlus) {
  const auto p = HardyParams::from_degrees(51.827, 51.827);
  const StateVector out = run_circuit(hardy_circuit(p, 1, 1), StateVector::basis(2, 0));
  EXPECT_NEAR(outcome_distribution(out)[outcome_index(+1, +1)], 0.0, kExactTol);
}

TEST(RunCircuitTest, QubitCountMismatch) {
  EXPECT_THROW(run_circuit(Circuit(3), StateVector::basis(2, 0)), std::invalid_argument);
  Circuit c(2);
  EXPECT_THROW(c.add(gates::pauli_x(), {0, 1}), std::invalid_argument);
  EXPECT_THROW(c.append(Circuit(3)), std::invalid_argument);
}

TEST(OutcomeDistributionTest, Examples) {
  EXPECT_EQ(outcome_distribution(StateVector::basis(2, 0)), (std::vector<double>{1, 0, 0, 0}));
  const double r = 1.0 / std::sqrt(2.0);
  const auto bell = outcome_distribution(StateVector::from_amplitudes({r, 0, 0, r}));
  EXPECT_NEAR(bell[0], 0.5, kExactTol);
  EXPECT_NEAR(bell[3], 0.5, kExactTol);
  // (c, s, c, s e^{2i phi}) / sqrt 2 at theta = 45, phi = 0
  const auto flat = outcome_distribution(closed_form_state(HardyParams::from_degrees(45, 0)));
  for (double x : flat) EXPECT_NEAR(x, 0.25, kExactTol);
}

TEST(ToDensityTest, Examples) {
  EXPECT_MAT_NEAR(to_density(StateVector::basis(1, 0)).matrix(), diag({1.0, 0.0}), kExactTol);
  const double r = 1.0 / std::sqrt(2.0);
  const DensityMatrix plus = to_density(StateVector::from_amplitudes({r, r}));
  EXPECT_MAT_NEAR(plus.matrix(), Matrix::Constant(2, 2, 0.5), kExactTol);
  const DensityMatrix rho = to_density(prepare_state(HardyParams::from_degrees(30, 60)));
  EXPECT_NEAR(rho.trace(), 1.0, kExactTol);
  EXPECT_NEAR(rho.purity(), 1.0, kExactTol);
}

TEST(DensityMatrixTest, RejectsInvalid) {
  EXPECT_THROW(DensityMatrix(1, mat2(1, 0.5, 0, 0)), std::invalid_argument);
  EXPECT_THROW(DensityMatrix(1, diag({0.6, 0.6})), std::invalid_argument);
  EXPECT_THROW(DensityMatrix(1, diag({1.5, -0.5})), std::invalid_argument);
}

TEST(ApplyChannelTest, SingleUnitaryKraus) {
  std::mt19937_64 rng(5);
  const StateVector s = testing::random_state(2, rng);
  const Matrix u = testing::random_unitary(2, rng);
  const std::array<Matrix, 1> k{u};
  const std::array<int, 1> t{1};
  const DensityMatrix out = apply_channel(to_density(s), k, t);
  const DensityMatrix ref = to_density(apply_gate(s, UnitaryMatrix(u), {1}));
  EXPECT_MAT_NEAR(out.matrix(), ref.matrix(), kExactTol);
}

TEST(ApplyChannelTest, FullDepolarizingGivesMaximallyMixedQubit) {
  std::mt19937_64 rng(9);
  const DensityMatrix rho = to_density(testing::random_state(1, rng));
  const auto k = depolarizing_kraus(1.0, 1);
  const std::array<int, 1> t{0};
  EXPECT_MAT_NEAR(apply_channel(rho, k, t).matrix(), diag({0.5, 0.5}), kExactTol);
}

TEST(ApplyChannelTest, DepolarizingMatchesBruteForceKrausSum) {
  const double p = 0.01;
  const Matrix rho = diag({1.0, 0.0});
  // (1 - 3p/4) rho + (p/4)(X rho X + Y rho Y + Z rho Z)
  Matrix expect = (1 - 0.75 * p) * rho;
  for (const auto& g : {gates::pauli_x(), gates::pauli_y(), gates::pauli_z()})
    expect += 0.25 * p * g.matrix() * rho * g.matrix().adjoint();
  const auto k = depolarizing_kraus(p, 1);
  const std::array<int, 1> t{0};
  const Matrix got = apply_channel(DensityMatrix(1, rho), k, t).matrix();
  EXPECT_MAT_NEAR(got, expect, kExactTol);
  EXPECT_NEAR(got(0, 0).real(), 1 - p / 2, kExactTol);
}

TEST(ApplyChannelTest, RejectsIncompleteKrausSet) {
  const std::array<Matrix, 1> k{0.9 * Matrix::Identity(2, 2)};
  const std::array<int, 1> t{0};
  EXPECT_THROW(apply_channel(DensityMatrix(1, diag({1.0, 0.0})), k, t), std::invalid_argument);
}

// Properties.

class RandomCircuitProperty : public ::testing::TestWithParam<int> {};

TEST_P(RandomCircuitProperty, NormPreserved) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  std::uniform_int_distribution<int> nq(1, 3), steps(0, 20), coin(0, 1);
  const int n = nq(rng);
  Circuit c(n);
  std::uniform_int_distribution<int> q(0, n - 1);
  for (int s = steps(rng); s > 0; --s) {
    if (n >= 2 && coin(rng)) {
      const int a = q(rng);
      int b = q(rng);
      while (b == a) b = q(rng);
      c.add(UnitaryMatrix(testing::random_unitary(4, rng)), {a, b});
    } else {
      c.add(UnitaryMatrix(testing::random_unitary(2, rng)), {q(rng)});
    }
  }
  const StateVector out = run_circuit(c, testing::random_state(n, rng));
  EXPECT_NEAR(out.norm(), 1.0, kValidationTol);
  // circuit_matrix agrees with sequential application
  const StateVector in = testing::random_state(n, rng);
  const Vector via_matrix = circuit_matrix(c) * in.amplitudes();
  EXPECT_LE((via_matrix - run_circuit(c, in).amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomCircuitProperty, ::testing::Range(0, 50));

TEST(StateVectorProperty, DisjointGatesCommute) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const StateVector s = testing::random_state(3, rng);
    const UnitaryMatrix a(testing::random_unitary(2, rng));
    const UnitaryMatrix b(testing::random_unitary(2, rng));
    const int i = trial % 3, j = (trial + 1 + trial / 3 % 2) % 3;
    if (i == j) continue;
    const StateVector ab = apply_gate(apply_gate(s, a, {i}), b, {j});
    const StateVector ba = apply_gate(apply_gate(s, b, {j}), a, {i});
    EXPECT_LE((ab.amplitudes() - ba.amplitudes()).cwiseAbs().maxCoeff(), kExactTol);
  }
}

TEST(StateVectorProperty, ChannelPreservesTraceAndHermiticity) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> w(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    // Kraus set from columns of a random isometry: K_i = sqrt(w_i) U_i
    const int nk = 1 + trial % 4;
    std::vector<double> weights(static_cast<std::size_t>(nk));
    double total = 0;
    for (auto& x : weights) total += (x = w(rng) + 1e-3);
    std::vector<Matrix> kraus;
    for (double x : weights) kraus.push_back(std::sqrt(x / total) * testing::random_unitary(4, rng));
    const std::array<int, 2> t{trial % 2 == 0 ? 1 : 2, 0};
    const DensityMatrix rho = to_density(testing::random_state(3, rng));
    const DensityMatrix out = apply_channel(rho, kraus, t);
    EXPECT_NEAR(out.trace(), 1.0, kValidationTol);
    EXPECT_LE(max_abs_diff(out.matrix(), out.matrix().adjoint()), kValidationTol);
  }
}

TEST(StateVectorProperty, DensityDiagonalEqualsOutcomeDistribution) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const StateVector s = testing::random_state(1 + trial % 5, rng);
    const auto d = to_density(s).diagonal();
    const auto p = outcome_distribution(s);
    ASSERT_EQ(d.size(), p.size());
    for (std::size_t k = 0; k < p.size(); ++k) EXPECT_NEAR(d[k], p[k], kExactTol);
  }
}

}  // namespace
}  // namespace hardysim
