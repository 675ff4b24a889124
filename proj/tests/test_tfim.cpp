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
#include <set>

#include <doctest.h>

#include "test_helpers.hpp"
#include "tfdgen/oracles.hpp"
#include "tfdgen/tfim.hpp"

namespace tfdgen {
namespace {

using testing::max_abs;

// Row/column symmetry class of each register basis index; two entries of a
// circuit-reachable density matrix are equal (up to conjugation when the
// class pair is transposed) whenever their class pairs match.
constexpr int kEntryClass[16] = {0, 1, 1, 3, 1, 5, 6, 1, 1, 6, 5, 1, 3, 1, 1, 0};

double pattern_violation(const Matrix& m, bool expect_real) {
  std::map<std::pair<int, int>, Complex> representative;
  double err = 0.0;
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      const int ci = kEntryClass[i], cj = kEntryClass[j];
      const Complex value = ci <= cj ? m(i, j) : std::conj(m(i, j));
      if (expect_real) err = std::max(err, std::abs(m(i, j).imag()));
      const auto [it, inserted] = representative.try_emplace(std::minmax(ci, cj), value);
      if (!inserted) err = std::max(err, std::abs(value - it->second));
    }
  }
  // The class table generates exactly the 15 unique element labels.
  CHECK(representative.size() == 15);
  return err;
}

VariationalAngles random_angles(SeededRng& rng) {
  return {rng.uniform(-kAngleBound, kAngleBound), rng.uniform(-kAngleBound, kAngleBound),
          rng.uniform(-kAngleBound, kAngleBound), rng.uniform(-kAngleBound, kAngleBound)};
}

TEST_SUITE("tfim") {

TEST_CASE("observable catalog has the fixed 15 operators") {
  const auto& catalog = observable_catalog();
  CHECK(catalog.size() == 15);
  const std::set<std::string> expected = {"X_A",  "X_B",  "Y_A",  "Y_B",  "Z_A",
                                          "Z_B",  "XX_A", "XX_B", "YY_A", "YY_B",
                                          "ZZ_A", "ZZ_B", "XX_AB", "YY_AB", "ZZ_AB"};
  std::set<std::string> keys;
  for (const auto& [name, op] : catalog) {
    keys.insert(name);
    CHECK(is_hermitian(op));
  }
  CHECK(keys == expected);

  const Matrix zz_ab = PauliString{1.0, {{Qubit::A1, Axis::Z}, {Qubit::B1, Axis::Z}}}.to_matrix() +
                       PauliString{1.0, {{Qubit::A2, Axis::Z}, {Qubit::B2, Axis::Z}}}.to_matrix();
  CHECK(max_abs(catalog.at("ZZ_AB") - zz_ab) == 0.0);

  CHECK(std::abs(expectation(testing::basis_state(16, 0), catalog.at("X_A"))) == 0.0);
}

TEST_CASE("pauli strings reject repeated qubits") {
  const PauliString doubled{1.0, {{Qubit::A1, Axis::X}, {Qubit::A1, Axis::Z}}};
  CHECK_THROWS_AS(doubled.to_matrix(), DimensionMismatch);
}

TEST_CASE("build_hamiltonians fixed spectra and embeddings") {
  const Matrix sub0 = build_hamiltonians(0.0).h_A_sub;
  for (int i = 0; i < 4; ++i) {
    const double expected = (i == 0 || i == 3) ? 1.0 : -1.0;
    CHECK(std::abs(sub0(i, i).real() - expected) < 1e-14);
    for (int j = 0; j < 4; ++j) {
      if (i != j) CHECK(std::abs(sub0(i, j)) == 0.0);
    }
  }

  const HamiltonianSet ops = build_hamiltonians(1.0);
  const EigenDecomposition eig = hermitian_eig(ops.h_A_sub);
  const double root5 = std::sqrt(5.0);
  CHECK(std::abs(eig.eigenvalues[0] - -root5) < 1e-12);
  CHECK(std::abs(eig.eigenvalues[3] - root5) < 1e-12);

  // h_A is h_A_sub on the A half of |A1 A2 B1 B2>.
  CHECK(max_abs(ops.h_A - kron(ops.h_A_sub, Matrix::Identity(4, 4))) < 1e-14);
  CHECK(max_abs(ops.h_B - kron(Matrix::Identity(4, 4), ops.h_A_sub)) < 1e-14);
  CHECK(max_abs(ops.h_AB - (ops.xx_AB + ops.zz_AB)) < 1e-14);

  // The circuit input is an eigenstate of the entangling Hamiltonian.
  const Vector xi = initial_state();
  CHECK((ops.h_AB * xi - 4.0 * xi).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("initial_state amplitudes") {
  const Vector xi = initial_state();
  CHECK(xi.size() == 16);
  CHECK(std::abs(xi[5] - Complex(0.5, 0.0)) == 0.0);
  CHECK(std::abs(xi[1]) == 0.0);
  CHECK(std::abs(xi.norm() - 1.0) < 1e-15);
}

TEST_CASE("target_tfd at beta=0 is the initial state") {
  CHECK((target_tfd({1.0, 0.0}) - initial_state()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("target_tfd at beta=1e3 lives in the ground sector") {
  const TfdModel model(1.0);
  const Vector cold = model.target_tfd(1e3);
  CHECK(std::abs(cold.norm() - 1.0) < 1e-12);

  // Projector onto (ground eigenvector of the subsystem Hamiltonian) x B.
  const EigenDecomposition eig = hermitian_eig(model.ops().h_A_sub);
  const Vector ground = eig.eigenvectors.col(0);
  const Matrix projector = kron(density_of(ground), Matrix::Identity(4, 4));
  CHECK(std::abs(expectation(cold, projector) - 1.0) < 1e-6);
}

TEST_CASE("target_tfd reduces to the Gibbs state of the subsystem Hamiltonian") {
  for (const double g : {0.5, 1.0, 2.0}) {
    const TfdModel model(g);
    for (const double beta : {0.1, 1.0, 10.0}) {
      const Matrix reduced = partial_trace_B(density_of(model.target_tfd(beta)));
      CHECK(max_abs(reduced - oracles::gibbs_state(model.ops().h_A_sub, beta)) < 1e-10);
    }
  }
  CHECK_THROWS_AS(TfdModel(1.0).target_tfd(-0.5), InvalidBeta);
}

TEST_CASE("evolve_ansatz identity circuit and unit norm") {
  CHECK((evolve_ansatz({0.0, 0.0, 0.0, 0.0}) - initial_state()).cwiseAbs().maxCoeff() < 1e-14);

  SeededRng rng(21);
  for (int k = 0; k < 100; ++k) {
    CHECK(std::abs(evolve_ansatz(random_angles(rng)).norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("evolve_ansatz agrees with Taylor-series layer exponentials") {
  SeededRng rng(22);
  const HamiltonianSet ops = build_hamiltonians(0.0);
  const Complex i_unit(0.0, 1.0);
  for (int k = 0; k < 10; ++k) {
    const VariationalAngles a = random_angles(rng);
    const Vector expected = oracles::taylor_exp(Matrix(i_unit * a.alpha2 * ops.zz_AB)) *
                            oracles::taylor_exp(Matrix(i_unit * a.alpha1 * ops.xx_AB)) *
                            oracles::taylor_exp(Matrix(i_unit * a.gamma2 * ops.zz_gen)) *
                            oracles::taylor_exp(Matrix(i_unit * a.gamma1 * ops.x_gen)) *
                            initial_state();
    CHECK((evolve_ansatz(a) - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("evolve_ansatz is 2*pi periodic in every angle") {
  SeededRng rng(23);
  constexpr double two_pi = 6.283185307179586;
  for (int axis = 0; axis < 4; ++axis) {
    const VariationalAngles base = random_angles(rng);
    VariationalAngles shifted = base;
    (axis == 0   ? shifted.gamma1
     : axis == 1 ? shifted.gamma2
     : axis == 2 ? shifted.alpha1
                 : shifted.alpha2) += two_pi;
    const Complex overlap = evolve_ansatz(base).dot(evolve_ansatz(shifted));
    CHECK(std::abs(std::norm(overlap) - 1.0) < 1e-10);
  }
}

TEST_CASE("pinned inter-system angles identify the (3,5) and (0,6) elements") {
  const Matrix sigma = density_of(evolve_ansatz({0.0, 0.0, kPinnedAlpha1, kPinnedAlpha2}));
  CHECK(std::abs(sigma(3, 5) - sigma(0, 6)) < 1e-12);
}

TEST_CASE("density_of basics") {
  const Matrix rho0 = density_of(initial_state());
  CHECK(std::abs(rho0(0, 5).real() - 0.25) == 0.0);
  CHECK(std::abs(rho0.trace().real() - 1.0) < 1e-14);
}

TEST_CASE("target density matches the 15-element real-symmetric pattern") {
  const Matrix rho = density_of(target_tfd({1.0, 1.0}));
  CHECK(max_abs(rho - rho.transpose()) < 1e-10);  // real symmetric
  CHECK(pattern_violation(rho, true) < 1e-10);

  for (const double g : {-0.5, 1.0, 2.0}) {
    const TfdModel model(g);
    for (const double beta : {0.0, 0.1, 1.0, 10.0, 100.0}) {
      CHECK(pattern_violation(density_of(model.target_tfd(beta)), true) < 1e-10);
    }
  }
}

TEST_CASE("generated density matches the conjugate-pair pattern") {
  SeededRng rng(24);
  for (int k = 0; k < 100; ++k) {
    CHECK(pattern_violation(density_of(evolve_ansatz(random_angles(rng))), false) < 1e-10);
  }
}

TEST_CASE("symmetrized circuit yields real unique elements") {
  SeededRng rng(25);
  for (int k = 0; k < 20; ++k) {
    const VariationalAngles angles{rng.uniform(-kAngleBound, kAngleBound),
                                   rng.uniform(-kAngleBound, kAngleBound), kPinnedAlpha1,
                                   kPinnedAlpha2};
    const Matrix sigma = density_of(evolve_ansatz(angles));
    double imag_leak = 0.0;
    for (int i = 0; i < 16; ++i) {
      for (int j = 0; j < 16; ++j) imag_leak = std::max(imag_leak, std::abs(sigma(i, j).imag()));
    }
    CHECK(imag_leak < 1e-10);
    CHECK(std::abs(sigma(3, 5) - sigma(0, 6)) < 1e-10);
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace tfdgen
