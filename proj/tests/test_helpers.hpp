// Copyright 2026 The tfdgen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TFDGEN_TEST_HELPERS_HPP
#define TFDGEN_TEST_HELPERS_HPP

#include "tfdgen/deopt.hpp"
#include "tfdgen/qcore.hpp"

namespace tfdgen::testing {

// Uniform complex entries in the unit square, re and im in [-1, 1).
inline Matrix random_matrix(SeededRng& rng, int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
  }
  return m;
}

inline Matrix random_hermitian(SeededRng& rng, int dim) {
  const Matrix m = random_matrix(rng, dim, dim);
  return Matrix(0.5 * (m + m.adjoint()));
}

// Density matrix G G^dagger / tr, full rank with probability 1.
inline Matrix random_density(SeededRng& rng, int dim) {
  const Matrix g = random_matrix(rng, dim, dim);
  Matrix rho = g * g.adjoint();
  return Matrix(rho / rho.trace().real());
}

// Haar-ish unitary: Q factor of a random complex matrix.
inline Matrix random_unitary(SeededRng& rng, int dim) {
  return Eigen::HouseholderQR<Matrix>(random_matrix(rng, dim, dim)).householderQ();
}

inline Vector random_state(SeededRng& rng, int dim) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  v.normalize();
  return v;
}

// Computational basis state |index> of the given dimension.
inline Vector basis_state(int dim, int index) {
  Vector v = Vector::Zero(dim);
  v[index] = 1.0;
  return v;
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace tfdgen::testing

#endif  // TFDGEN_TEST_HELPERS_HPP
