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

#include <cmath>

#include <doctest.h>

#include "test_helpers.hpp"
#include "tfdgen/oracles.hpp"
#include "tfdgen/tfim.hpp"

namespace tfdgen {
namespace {

using testing::basis_state;
using testing::max_abs;
using testing::random_hermitian;
using testing::random_state;

TEST_SUITE("qcore") {

TEST_CASE("kron reproduces known Pauli products") {
  const Matrix i2 = Matrix::Identity(2, 2);
  CHECK(max_abs(kron(i2, i2) - Matrix::Identity(4, 4)) == 0.0);

  const Matrix xz = kron(pauli_matrix(Axis::X), pauli_matrix(Axis::Z));
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 2) = 1.0;
  expected(1, 3) = -1.0;
  expected(2, 0) = 1.0;
  expected(3, 1) = -1.0;
  CHECK(max_abs(xz - expected) == 0.0);

  const Matrix zz = kron(pauli_matrix(Axis::Z), pauli_matrix(Axis::Z));
  Matrix diag = Matrix::Zero(4, 4);
  diag(0, 0) = 1.0;
  diag(1, 1) = -1.0;
  diag(2, 2) = -1.0;
  diag(3, 3) = 1.0;
  CHECK(max_abs(zz - diag) == 0.0);
}

TEST_CASE("kron agrees with the naive oracle and is associative") {
  SeededRng rng(11);
  for (int k = 0; k < 20; ++k) {
    const Matrix a = testing::random_matrix(rng, 2, 2);
    const Matrix b = testing::random_matrix(rng, 3, 3);
    const Matrix c = testing::random_matrix(rng, 2, 2);
    CHECK(max_abs(kron(a, b) - oracles::naive_kron(a, b)) == 0.0);
    CHECK(max_abs(kron(kron(a, b), c) - kron(a, kron(b, c))) < 1e-12);
  }
}

TEST_CASE("hermitian_eig on fixed spectra") {
  const EigenDecomposition x = hermitian_eig(pauli_matrix(Axis::X));
  CHECK(std::abs(x.eigenvalues[0] - -1.0) < 1e-14);
  CHECK(std::abs(x.eigenvalues[1] - 1.0) < 1e-14);

  const EigenDecomposition id = hermitian_eig(Matrix::Identity(4, 4));
  for (int i = 0; i < 4; ++i) CHECK(std::abs(id.eigenvalues[i] - 1.0) < 1e-14);

  // Two-site transverse-field Ising Hamiltonian at g=1.
  const EigenDecomposition h = hermitian_eig(build_hamiltonians(1.0).h_A_sub);
  const double root5 = std::sqrt(5.0);
  CHECK(std::abs(h.eigenvalues[0] - -root5) < 1e-12);
  CHECK(std::abs(h.eigenvalues[1] - -1.0) < 1e-12);
  CHECK(std::abs(h.eigenvalues[2] - 1.0) < 1e-12);
  CHECK(std::abs(h.eigenvalues[3] - root5) < 1e-12);
}

TEST_CASE("hermitian_eig reconstruction and orthonormality on 200 random inputs") {
  SeededRng rng(12);
  double worst_reconstruction = 0.0;
  double worst_orthonormality = 0.0;
  for (int k = 0; k < 200; ++k) {
    const Matrix h = random_hermitian(rng, 16);
    const EigenDecomposition eig = hermitian_eig(h);
    const Matrix rebuilt = eig.eigenvectors * eig.eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
                           eig.eigenvectors.adjoint();
    worst_reconstruction = std::max(worst_reconstruction, max_abs(rebuilt - h));
    worst_orthonormality = std::max(
        worst_orthonormality,
        max_abs(eig.eigenvectors.adjoint() * eig.eigenvectors - Matrix::Identity(16, 16)));
    for (int i = 1; i < 16; ++i) CHECK(eig.eigenvalues[i - 1] <= eig.eigenvalues[i]);
  }
  CHECK(worst_reconstruction < 1e-10);
  CHECK(worst_orthonormality < 1e-10);
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eig(m), NotHermitian);
  CHECK_THROWS_AS(matrix_function(m, [](double x) { return x; }), NotHermitian);
}

TEST_CASE("matrix_function on fixed cases") {
  const Matrix e_id = matrix_function(Matrix::Identity(4, 4), [](double x) { return std::exp(x); });
  CHECK(max_abs(e_id - std::exp(1.0) * Matrix::Identity(4, 4)) < 1e-14);

  const double t = 0.7;
  const Matrix ez = matrix_function(pauli_matrix(Axis::Z), [&](double x) { return std::exp(t * x); });
  CHECK(std::abs(ez(0, 0).real() - std::exp(t)) < 1e-14);
  CHECK(std::abs(ez(1, 1).real() - std::exp(-t)) < 1e-14);
  CHECK(std::abs(ez(0, 1)) < 1e-14);

  // Entropy of the maximally mixed 4-dim state: tr[x log x] = -log 4.
  const Matrix xlogx = matrix_function(Matrix::Identity(4, 4) / 4.0,
                                       [](double x) { return x * std::log(x); });
  CHECK(std::abs(xlogx.trace().real() - -std::log(4.0)) < 1e-12);
}

TEST_CASE("matrix_exp inverse pairing and oracle agreement") {
  SeededRng rng(13);
  for (int k = 0; k < 10; ++k) {
    const Matrix h = random_hermitian(rng, 4);
    CHECK(max_abs(matrix_exp(h) * matrix_exp(Matrix(-h)) - Matrix::Identity(4, 4)) < 1e-9);
    CHECK(max_abs(matrix_exp(h) - oracles::taylor_exp(h)) < 1e-12);
  }
}

TEST_CASE("matrix_sqrt clamps roundoff negatives and rejects real ones") {
  // Diagonal with one tiny negative eigenvalue: inside the clamp band.
  Matrix nearly_psd = Matrix::Identity(4, 4);
  nearly_psd(3, 3) = -1e-11;
  const Matrix root = matrix_sqrt(nearly_psd);
  CHECK(std::abs(root(3, 3)) == 0.0);
  CHECK(std::abs(root(0, 0).real() - 1.0) < 1e-14);

  Matrix negative = Matrix::Identity(4, 4);
  negative(3, 3) = -1e-6;
  CHECK_THROWS_AS(matrix_sqrt(negative), NegativeSpectrum);
}

TEST_CASE("matrix_log is finite on rank-deficient densities") {
  const Matrix pure = density_of(basis_state(4, 2));
  const Matrix log_pure = matrix_log(pure);
  CHECK(log_pure.allFinite());
  // x log x of a pure state has zero entropy.
  const Matrix xlogx = matrix_function(pure, [](double x) {
    return x <= numeric::kLogEigenvalueFloor ? 0.0 : x * std::log(x);
  });
  CHECK(std::abs(xlogx.trace().real()) < 1e-12);
}

TEST_CASE("partial_trace_B on fixed states") {
  CHECK(max_abs(partial_trace_B(density_of(initial_state())) - Matrix::Identity(4, 4) / 4.0) <
        1e-14);
  CHECK(max_abs(partial_trace_B(density_of(basis_state(16, 0))) - density_of(basis_state(4, 0))) <
        1e-14);

  const Matrix target_rho = density_of(target_tfd({1.0, 1.0}));
  CHECK(max_abs(partial_trace_B(target_rho) - oracles::naive_partial_trace_B(target_rho)) < 1e-12);
}

TEST_CASE("partial_trace_B is linear and trace-preserving") {
  SeededRng rng(14);
  for (int k = 0; k < 20; ++k) {
    const Matrix a = random_hermitian(rng, 16);
    const Matrix b = random_hermitian(rng, 16);
    const double w = rng.uniform(-2.0, 2.0);
    CHECK(max_abs(partial_trace_B(Matrix(a + w * b)) -
                  (partial_trace_B(a) + w * partial_trace_B(b))) < 1e-12);
    CHECK(std::abs(partial_trace_B(a).trace().real() - a.trace().real()) < 1e-12);
  }
  CHECK_THROWS_AS(partial_trace_B(Matrix::Identity(4, 4)), DimensionMismatch);
}

TEST_CASE("expectation on fixed states") {
  const auto& catalog = observable_catalog();
  const Vector xi = initial_state();
  CHECK(std::abs(expectation(xi, Matrix(catalog.at("ZZ_AB") + catalog.at("XX_AB"))) - 4.0) <
        1e-12);
  CHECK(std::abs(expectation(basis_state(16, 0), catalog.at("ZZ_A")) - 1.0) < 1e-14);
  CHECK(std::abs(expectation(xi, catalog.at("X_A"))) < 1e-14);
}

TEST_CASE("expectation equals the dense-trace form and the naive oracle") {
  SeededRng rng(15);
  const auto& catalog = observable_catalog();
  for (int k = 0; k < 20; ++k) {
    const Vector state = random_state(rng, 16);
    for (const auto& [name, op] : catalog) {
      const double direct = expectation(state, op);
      const double traced = (op * density_of(state)).trace().real();
      CHECK(std::abs(direct - traced) < 1e-12);
      CHECK(std::abs(direct - oracles::naive_expectation(state, op).real()) < 1e-12);
    }
  }

  Matrix skew = Matrix::Zero(16, 16);
  skew(0, 1) = 1.0;
  CHECK_THROWS_AS(expectation(initial_state(), skew), NotHermitian);
}

}  // TEST_SUITE

}  // namespace
}  // namespace tfdgen
