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

#ifndef HARDYSIM_STATEVECTOR_H_
#define HARDYSIM_STATEVECTOR_H_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

/// Dense simulation core for small qubit registers.
///
/// Bit-order convention: qubit 0 is the least-significant bit of a basis
/// index, so for two qubits index k = 2*q1 + q0 and the ket |q1 q0> is
/// written with qubit 1 first. In Hardy circuits Alice is qubit 1 (the CNOT
/// control) and Bob is qubit 0.
///
/// Multi-qubit gates take an ordered target list: targets[0] is the gate's
/// most-significant local bit. tensor(a, b) applied on {1, 0} therefore acts
/// with `a` on qubit 1 and `b` on qubit 0.
namespace hardysim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Tolerance for validating invariants of constructed values.
inline constexpr double kValidationTol = 1e-10;
/// Tolerance for exact-math assertions.
inline constexpr double kExactTol = 1e-12;

inline constexpr int kMaxQubits = 5;

/// Square unitary on one or two qubits. Unitarity is checked on construction.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Matrix m);

  static UnitaryMatrix identity(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  int num_qubits() const { return dim() == 2 ? 1 : 2; }
  const Matrix& matrix() const { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }

  UnitaryMatrix adjoint() const;

  /// Matrix product; the right operand is applied first.
  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);

 private:
  Matrix m_;
};

/// Kronecker product a ⊗ b; `a` occupies the high bit of the result.
UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

bool is_unitary(const Matrix& m, double tol = kValidationTol);
double max_abs_diff(const Matrix& a, const Matrix& b);

class StateVector {
 public:
  /// Rejects zero-norm or non-normalized input; no silent renormalization.
  StateVector(int num_qubits, Vector amplitudes);

  static StateVector basis(int num_qubits, std::size_t index);
  static StateVector from_amplitudes(std::initializer_list<Complex> amps);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return static_cast<std::size_t>(amps_.size()); }
  const Vector& amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }
  double norm() const { return amps_.norm(); }

 private:
  int num_qubits_;
  Vector amps_;
};

/// Hermitian, trace-one, positive semidefinite operator.
class DensityMatrix {
 public:
  /// Validates Hermiticity and trace (1e-10) and eigenvalues >= -1e-9.
  DensityMatrix(int num_qubits, Matrix rho);

  int num_qubits() const { return num_qubits_; }
  const Matrix& matrix() const { return rho_; }
  Complex operator()(int r, int c) const { return rho_(r, c); }

  double trace() const { return rho_.trace().real(); }
  double purity() const;
  /// Computational-basis populations.
  std::vector<double> diagonal() const;

 private:
  friend DensityMatrix apply_channel(const DensityMatrix&, std::span<const Matrix>,
                                     std::span<const int>);
  friend DensityMatrix apply_unitary(const DensityMatrix&, const UnitaryMatrix&,
                                     std::span<const int>);
  struct Unchecked {};
  DensityMatrix(Unchecked, int num_qubits, Matrix rho)
      : num_qubits_(num_qubits), rho_(std::move(rho)) {}

  int num_qubits_;
  Matrix rho_;
};

struct GateStep {
  UnitaryMatrix gate;
  std::vector<int> targets;
  std::string label;
};

/// Ordered gate list on a fixed register. Steps are validated when added.
class Circuit {
 public:
  explicit Circuit(int num_qubits);

  Circuit& add(UnitaryMatrix gate, std::vector<int> targets, std::string label = {});
  /// Appends all steps of `other`, which must act on the same register size.
  Circuit& append(const Circuit& other);

  int num_qubits() const { return num_qubits_; }
  const std::vector<GateStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

 private:
  int num_qubits_;
  std::vector<GateStep> steps_;
};

StateVector apply_gate(const StateVector& state, const UnitaryMatrix& gate,
                       std::span<const int> targets);
StateVector apply_gate(const StateVector& state, const UnitaryMatrix& gate,
                       std::initializer_list<int> targets);

StateVector run_circuit(const Circuit& c, const StateVector& initial);

/// Full 2^n x 2^n matrix implemented by a circuit.
Matrix circuit_matrix(const Circuit& c);

/// Lifts a 2^k x 2^k operator on `targets` to the full register.
Matrix embed(const Matrix& op, std::span<const int> targets, int num_qubits);

std::vector<double> outcome_distribution(const StateVector& state);

DensityMatrix to_density(const StateVector& state);

/// rho' = sum_k K rho K^dagger with every K acting on `targets`.
/// Throws std::invalid_argument if sum K^dagger K deviates from I by more than 1e-10.
DensityMatrix apply_channel(const DensityMatrix& rho, std::span<const Matrix> kraus,
                            std::span<const int> targets);
DensityMatrix apply_unitary(const DensityMatrix& rho, const UnitaryMatrix& gate,
                            std::span<const int> targets);

}  // namespace hardysim

#endif  // HARDYSIM_STATEVECTOR_H_
