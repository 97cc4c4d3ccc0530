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

#include "hardysim/gates.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hardysim::gates {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex expi(double angle) { return std::polar(1.0, angle); }

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

constexpr int kAlice = 1;
constexpr int kBob = 0;

}  // namespace

UnitaryMatrix u1(double lambda) { return UnitaryMatrix(mat2(1.0, 0.0, 0.0, expi(lambda))); }

UnitaryMatrix u3(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return UnitaryMatrix(mat2(c, -expi(lambda) * s, expi(phi) * s, expi(phi + lambda) * c));
}

UnitaryMatrix beam_splitter(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return UnitaryMatrix(mat2(c, -s, s, c));
}

UnitaryMatrix phase_shifter(double phi) { return u1(phi); }

UnitaryMatrix coupling(double phi) {
  Matrix m = Matrix::Identity(4, 4);
  m(3, 3) = expi(2 * phi);
  return UnitaryMatrix(std::move(m));
}

Circuit coupling_decomposed(double phi) { return coupling_decomposed(phi, phi); }

Circuit coupling_decomposed(double /*phi*/, double lambda) {
  Circuit c(2);
  c.add(u1(-lambda), {kBob}, "u1");
  c.add(cnot(1, 0), {kAlice, kBob}, "cx");
  c.add(u1(lambda), {kAlice}, "u1");
  c.add(u1(-lambda), {kBob}, "u1");
  c.add(cnot(1, 0), {kAlice, kBob}, "cx");
  c.add(u1(2 * lambda), {kBob}, "u1");
  return c;
}

UnitaryMatrix cnot(int control, int target) {
  if (control == target) {
    throw std::invalid_argument("cnot control and target must differ");
  }
  if (control < 0 || control > 1 || target < 0 || target > 1) {
    throw std::out_of_range("cnot qubits must be 0 or 1");
  }
  Matrix m = Matrix::Zero(4, 4);
  for (int k = 0; k < 4; ++k) {
    const int out = ((k >> control) & 1) ? (k ^ (1 << target)) : k;
    m(out, k) = 1.0;
  }
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix hadamard() {
  const double r = std::numbers::sqrt2 / 2;
  return UnitaryMatrix(mat2(r, r, r, -r));
}

UnitaryMatrix pauli_x() { return UnitaryMatrix(mat2(0.0, 1.0, 1.0, 0.0)); }
UnitaryMatrix pauli_y() { return UnitaryMatrix(mat2(0.0, -kI, kI, 0.0)); }
UnitaryMatrix pauli_z() { return UnitaryMatrix(mat2(1.0, 0.0, 0.0, -1.0)); }
UnitaryMatrix identity() { return UnitaryMatrix::identity(2); }

}  // namespace hardysim::gates
