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

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hardysim {

namespace {

Eigen::Index dim_of(int num_qubits) { return Eigen::Index{1} << num_qubits; }

void check_qubit_count(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in 1.." + std::to_string(kMaxQubits) +
                                ", got " + std::to_string(num_qubits));
  }
}

void check_targets(std::span<const int> targets, Eigen::Index op_dim, int num_qubits) {
  if (targets.empty() || (Eigen::Index{1} << targets.size()) != op_dim) {
    throw std::invalid_argument("operator dimension " + std::to_string(op_dim) +
                                " does not match " + std::to_string(targets.size()) +
                                " target(s)");
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= num_qubits) {
      throw std::out_of_range("target qubit " + std::to_string(targets[i]) +
                              " out of range for " + std::to_string(num_qubits) + " qubits");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (targets[i] == targets[j]) {
        throw std::invalid_argument("duplicate target qubit " + std::to_string(targets[i]));
      }
    }
  }
}

// Local index of `full` restricted to `targets` (targets[0] is the high bit).
std::size_t local_index(std::size_t full, std::span<const int> targets) {
  std::size_t local = 0;
  for (int t : targets) {
    local = (local << 1) | ((full >> t) & 1U);
  }
  return local;
}

std::size_t with_local_bits(std::size_t full, std::size_t local, std::span<const int> targets) {
  const std::size_t k = targets.size();
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t bit = (local >> (k - 1 - j)) & 1U;
    const std::size_t mask = std::size_t{1} << targets[j];
    full = bit ? (full | mask) : (full & ~mask);
  }
  return full;
}

}  // namespace

// ---- UnitaryMatrix ----

UnitaryMatrix::UnitaryMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || (m_.rows() != 2 && m_.rows() != 4)) {
    throw std::invalid_argument("unitary must be 2x2 or 4x4");
  }
  if (!is_unitary(m_)) {
    throw std::invalid_argument("matrix is not unitary within tolerance");
  }
}

UnitaryMatrix UnitaryMatrix::identity(int dim) {
  return UnitaryMatrix(Matrix::Identity(dim, dim));
}

UnitaryMatrix UnitaryMatrix::adjoint() const { return UnitaryMatrix(m_.adjoint()); }

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch in unitary product");
  }
  return UnitaryMatrix(a.m_ * b.m_);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw std::invalid_argument("tensor expects two 2x2 unitaries");
  }
  return UnitaryMatrix(kron(a.matrix(), b.matrix()));
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Matrix prod = m.adjoint() * m;
  return max_abs_diff(prod, Matrix::Identity(m.rows(), m.cols())) <= tol;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("shape mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

// ---- StateVector ----

StateVector::StateVector(int num_qubits, Vector amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  check_qubit_count(num_qubits_);
  if (amps_.size() != dim_of(num_qubits_)) {
    throw std::invalid_argument("amplitude count must be 2^num_qubits");
  }
  for (Eigen::Index i = 0; i < amps_.size(); ++i) {
    if (!std::isfinite(amps_(i).real()) || !std::isfinite(amps_(i).imag())) {
      throw std::invalid_argument("non-finite amplitude");
    }
  }
  const double n2 = amps_.squaredNorm();
  if (n2 == 0.0) {
    throw std::invalid_argument("zero-norm state");
  }
  if (std::abs(n2 - 1.0) > kValidationTol) {
    throw std::invalid_argument("state is not normalized (|psi|^2 = " + std::to_string(n2) + ")");
  }
}

StateVector StateVector::basis(int num_qubits, std::size_t index) {
  check_qubit_count(num_qubits);
  Vector v = Vector::Zero(dim_of(num_qubits));
  if (static_cast<Eigen::Index>(index) >= v.size()) {
    throw std::out_of_range("basis index out of range");
  }
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(num_qubits, std::move(v));
}

StateVector StateVector::from_amplitudes(std::initializer_list<Complex> amps) {
  int n = 0;
  while ((std::size_t{1} << n) < amps.size()) ++n;
  if ((std::size_t{1} << n) != amps.size()) {
    throw std::invalid_argument("amplitude count must be a power of two");
  }
  Vector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (const Complex& a : amps) v(i++) = a;
  return StateVector(n, std::move(v));
}

// ---- DensityMatrix ----

DensityMatrix::DensityMatrix(int num_qubits, Matrix rho)
    : num_qubits_(num_qubits), rho_(std::move(rho)) {
  check_qubit_count(num_qubits_);
  if (rho_.rows() != dim_of(num_qubits_) || rho_.cols() != rho_.rows()) {
    throw std::invalid_argument("density matrix must be 2^n x 2^n");
  }
  if (max_abs_diff(rho_, rho_.adjoint()) > kValidationTol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(rho_.trace() - Complex(1.0)) > kValidationTol) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  const Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9) {
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  }
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

std::vector<double> DensityMatrix::diagonal() const {
  std::vector<double> d(static_cast<std::size_t>(rho_.rows()));
  for (Eigen::Index i = 0; i < rho_.rows(); ++i) d[static_cast<std::size_t>(i)] = rho_(i, i).real();
  return d;
}

// ---- Circuit ----

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) { check_qubit_count(num_qubits); }

Circuit& Circuit::add(UnitaryMatrix gate, std::vector<int> targets, std::string label) {
  check_targets(targets, gate.dim(), num_qubits_);
  steps_.push_back(GateStep{std::move(gate), std::move(targets), std::move(label)});
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw std::invalid_argument("cannot append circuits on different register sizes");
  }
  steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
  return *this;
}

// ---- operations ----

StateVector apply_gate(const StateVector& state, const UnitaryMatrix& gate,
                       std::span<const int> targets) {
  check_targets(targets, gate.dim(), state.num_qubits());
  const Vector& in = state.amplitudes();
  Vector out = Vector::Zero(in.size());
  const auto ld = static_cast<std::size_t>(gate.dim());
  for (std::size_t i = 0; i < static_cast<std::size_t>(in.size()); ++i) {
    const std::size_t row = local_index(i, targets);
    Complex acc = 0.0;
    for (std::size_t col = 0; col < ld; ++col) {
      const std::size_t src = with_local_bits(i, col, targets);
      acc += gate(static_cast<int>(row), static_cast<int>(col)) *
             in(static_cast<Eigen::Index>(src));
    }
    out(static_cast<Eigen::Index>(i)) = acc;
  }
  return StateVector(state.num_qubits(), std::move(out));
}

StateVector apply_gate(const StateVector& state, const UnitaryMatrix& gate,
                       std::initializer_list<int> targets) {
  return apply_gate(state, gate, std::span<const int>(targets.begin(), targets.size()));
}

StateVector run_circuit(const Circuit& c, const StateVector& initial) {
  if (c.num_qubits() != initial.num_qubits()) {
    throw std::invalid_argument("circuit and state qubit counts differ");
  }
  StateVector s = initial;
  for (const GateStep& step : c.steps()) {
    s = apply_gate(s, step.gate, step.targets);
  }
  return s;
}

Matrix embed(const Matrix& op, std::span<const int> targets, int num_qubits) {
  check_targets(targets, op.rows(), num_qubits);
  const Eigen::Index n = dim_of(num_qubits);
  Matrix full = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    const std::size_t row = local_index(i, targets);
    for (std::size_t col = 0; col < static_cast<std::size_t>(op.cols()); ++col) {
      const std::size_t j = with_local_bits(i, col, targets);
      full(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          op(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
  }
  return full;
}

Matrix circuit_matrix(const Circuit& c) {
  const Eigen::Index n = dim_of(c.num_qubits());
  Matrix m = Matrix::Identity(n, n);
  for (const GateStep& step : c.steps()) {
    m = embed(step.gate.matrix(), step.targets, c.num_qubits()) * m;
  }
  return m;
}

std::vector<double> outcome_distribution(const StateVector& state) {
  std::vector<double> p(state.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(state[i]);
  return p;
}

DensityMatrix to_density(const StateVector& state) {
  const Vector& a = state.amplitudes();
  return DensityMatrix(state.num_qubits(), a * a.adjoint());
}

DensityMatrix apply_channel(const DensityMatrix& rho, std::span<const Matrix> kraus,
                            std::span<const int> targets) {
  if (kraus.empty()) {
    throw std::invalid_argument("empty Kraus set");
  }
  const Eigen::Index d = kraus.front().rows();
  Matrix completeness = Matrix::Zero(d, d);
  for (const Matrix& k : kraus) {
    if (k.rows() != d || k.cols() != d) {
      throw std::invalid_argument("Kraus operators must share one square shape");
    }
    completeness += k.adjoint() * k;
  }
  if (max_abs_diff(completeness, Matrix::Identity(d, d)) > kValidationTol) {
    throw std::invalid_argument("Kraus set is not complete (sum K^dagger K != I)");
  }
  const int n = rho.num_qubits();
  const Eigen::Index full_dim = dim_of(n);
  Matrix out = Matrix::Zero(full_dim, full_dim);
  for (const Matrix& k : kraus) {
    const Matrix kf = embed(k, targets, n);
    out += kf * rho.matrix() * kf.adjoint();
  }
  // Hermitian up to round-off.
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(DensityMatrix::Unchecked{}, n, std::move(out));
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const UnitaryMatrix& gate,
                            std::span<const int> targets) {
  const Matrix u = embed(gate.matrix(), targets, rho.num_qubits());
  Matrix out = u * rho.matrix() * u.adjoint();
  return DensityMatrix(DensityMatrix::Unchecked{}, rho.num_qubits(), std::move(out));
}

}  // namespace hardysim
