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

#ifndef HARDYSIM_TESTS_TEST_UTIL_H_
#define HARDYSIM_TESTS_TEST_UTIL_H_

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hardysim/statevector.h"

namespace hardysim::testing {

inline constexpr double kPi = std::numbers::pi;
inline const Complex kI{0.0, 1.0};

inline Complex expi(double x) { return std::polar(1.0, x); }

#define EXPECT_MAT_NEAR(a, b, tol) \
  EXPECT_LE(::hardysim::max_abs_diff((a), (b)), (tol)) << "lhs:\n" << (a) << "\nrhs:\n" << (b)

inline Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline Matrix diag(std::initializer_list<Complex> v) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (Complex x : v) m(i, i) = x, ++i;
  return m;
}

/// Haar-ish random unitary via QR of a complex Gaussian matrix.
inline Matrix random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Matrix g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = Complex(n(rng), n(rng));
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  for (int i = 0; i < dim; ++i) q.col(i) *= std::polar(1.0, std::arg(qr.matrixQR()(i, i)));
  return q;
}

inline StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  Vector v(1 << n);
  for (auto& x : v) x = Complex(d(rng), d(rng));
  v.normalize();
  return StateVector(n, v);
}

}  // namespace hardysim::testing

#endif  // HARDYSIM_TESTS_TEST_UTIL_H_
