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

#include "tfdgen/tfim.hpp"

#include <cmath>
#include <complex>

namespace tfdgen {

namespace {

const Complex kI(0.0, 1.0);

Matrix identity2() { return Matrix::Identity(2, 2); }

// Single Pauli factor on one register qubit, identity elsewhere.
Matrix single_site(Qubit q, Axis axis) {
  PauliString p{1.0, {{q, axis}}};
  return p.to_matrix();
}

// Product of one Pauli axis on two register qubits.
Matrix pair_site(Qubit q1, Qubit q2, Axis axis) {
  PauliString p{1.0, {{q1, axis}, {q2, axis}}};
  return p.to_matrix();
}

}  // namespace

Matrix pauli_matrix(Axis axis) {
  Matrix m(2, 2);
  switch (axis) {
    case Axis::X:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case Axis::Y:
      m << 0.0, -kI, kI, 0.0;
      break;
    case Axis::Z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return m;
}

Matrix PauliString::to_matrix() const {
  Matrix site[4] = {identity2(), identity2(), identity2(), identity2()};
  bool used[4] = {false, false, false, false};
  for (const auto& [qubit, axis] : factors) {
    const int idx = static_cast<int>(qubit);
    if (used[idx]) {
      throw DimensionMismatch("PauliString: qubit index " + std::to_string(idx) +
                           " appears more than once");
    }
    used[idx] = true;
    site[idx] = pauli_matrix(axis);
  }
  return coefficient * kron(kron(site[0], site[1]), kron(site[2], site[3]));
}

const std::map<std::string, Matrix>& observable_catalog() {
  static const std::map<std::string, Matrix> catalog = [] {
    using enum Qubit;
    std::map<std::string, Matrix> c;
    const Axis axes[3] = {Axis::X, Axis::Y, Axis::Z};
    const char* names[3] = {"X", "Y", "Z"};
    for (int i = 0; i < 3; ++i) {
      const Axis ax = axes[i];
      const std::string n = names[i];
      c[n + "_A"] = single_site(A1, ax) + single_site(A2, ax);
      c[n + "_B"] = single_site(B1, ax) + single_site(B2, ax);
      c[n + n + "_A"] = pair_site(A1, A2, ax);
      c[n + n + "_B"] = pair_site(B1, B2, ax);
      c[n + n + "_AB"] = pair_site(A1, B1, ax) + pair_site(A2, B2, ax);
    }
    return c;
  }();
  return catalog;
}

HamiltonianSet build_hamiltonians(double g) {
  using enum Qubit;
  HamiltonianSet h;

  const Matrix x_a1 = single_site(A1, Axis::X);
  const Matrix x_a2 = single_site(A2, Axis::X);
  const Matrix x_b1 = single_site(B1, Axis::X);
  const Matrix x_b2 = single_site(B2, Axis::X);
  const Matrix zz_a = pair_site(A1, A2, Axis::Z);
  const Matrix zz_b = pair_site(B1, B2, Axis::Z);

  h.h_A = zz_a + g * (x_a1 + x_a2);
  h.h_B = zz_b + g * (x_b1 + x_b2);
  h.xx_AB = pair_site(A1, B1, Axis::X) + pair_site(A2, B2, Axis::X);
  h.zz_AB = pair_site(A1, B1, Axis::Z) + pair_site(A2, B2, Axis::Z);
  h.h_AB = h.xx_AB + h.zz_AB;
  h.x_gen = x_a1 + x_a2 + x_b1 + x_b2;
  h.zz_gen = zz_a + zz_b;

  const Matrix x = pauli_matrix(Axis::X);
  const Matrix z = pauli_matrix(Axis::Z);
  const Matrix i2 = identity2();
  h.h_A_sub = kron(z, z) + g * (kron(x, i2) + kron(i2, x));

  return h;
}

Vector initial_state() {
  Vector v = Vector::Zero(16);
  // Indices where the B bits mirror the A bits: 0000, 0101, 1010, 1111.
  v[0] = 0.5;
  v[5] = 0.5;
  v[10] = 0.5;
  v[15] = 0.5;
  return v;
}

Matrix density_of(const Vector& state) { return state * state.adjoint(); }

// ---------------------------------------------------------------------------
// AnsatzCircuit
// ---------------------------------------------------------------------------

AnsatzCircuit::AnsatzCircuit() {
  const HamiltonianSet ops = build_hamiltonians(0.0);  // generators ignore g
  x_layer_ = make_propagator(ops.x_gen);
  zz_layer_ = make_propagator(ops.zz_gen);
  xx_ab_layer_ = make_propagator(ops.xx_AB);
  zz_ab_layer_ = make_propagator(ops.zz_AB);
  input_ = initial_state();
}

AnsatzCircuit::Propagator AnsatzCircuit::make_propagator(const Matrix& generator) {
  EigenDecomposition eig = hermitian_eig(generator);
  Propagator p;
  p.vectors = eig.eigenvectors;
  p.vectors_adj = eig.eigenvectors.adjoint();
  p.eigenvalues = eig.eigenvalues;
  return p;
}

Vector AnsatzCircuit::apply(const Propagator& p, double theta, const Vector& v) {
  Vector w = p.vectors_adj * v;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    w[i] *= std::polar(1.0, theta * p.eigenvalues[i]);
  }
  return p.vectors * w;
}

Vector AnsatzCircuit::evolve(const VariationalAngles& angles) const {
  Vector v = apply(x_layer_, angles.gamma1, input_);
  v = apply(zz_layer_, angles.gamma2, v);
  v = apply(xx_ab_layer_, angles.alpha1, v);
  v = apply(zz_ab_layer_, angles.alpha2, v);
  return v;
}

const AnsatzCircuit& AnsatzCircuit::shared() {
  static const AnsatzCircuit instance;
  return instance;
}

Vector evolve_ansatz(const VariationalAngles& angles) {
  return AnsatzCircuit::shared().evolve(angles);
}

// ---------------------------------------------------------------------------
// TfdModel
// ---------------------------------------------------------------------------

TfdModel::TfdModel(double g)
    : g_(g),
      ops_(build_hamiltonians(g)),
      h_A_eig_(hermitian_eig(ops_.h_A)),
      input_(initial_state()) {}

Vector TfdModel::target_tfd(double beta) const {
  if (beta < 0.0) {
    throw InvalidBeta("target_tfd: beta must be nonnegative, got " + std::to_string(beta));
  }
  // exp(-beta/2 (h_A - lambda_min)) |input>, then normalize; the spectral
  // shift cancels in the normalization and keeps every exponent <= 0.
  const double lambda_min = h_A_eig_.eigenvalues.minCoeff();
  Vector w = h_A_eig_.eigenvectors.adjoint() * input_;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    w[i] *= std::exp(-0.5 * beta * (h_A_eig_.eigenvalues[i] - lambda_min));
  }
  Vector out = h_A_eig_.eigenvectors * w;
  out.normalize();
  return out;
}

Vector target_tfd(const ModelParams& params) {
  return TfdModel(params.g).target_tfd(params.beta);
}

}  // namespace tfdgen
