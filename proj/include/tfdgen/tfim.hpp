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

#ifndef TFDGEN_TFIM_HPP
#define TFDGEN_TFIM_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tfdgen/qcore.hpp"

// ============================================================================
// tfim: the two-site transverse-field Ising model doubled into systems A and
// B, on the 4-qubit register |A1 A2 B1 B2> (A1 = most significant bit).
//
// Provides the model Hamiltonians, the fixed entangled initial state, the
// exact thermofield-double target state, and the single-step variational
// circuit that the cost functions drive.
// ============================================================================

namespace tfdgen {

enum class Qubit { A1 = 0, A2 = 1, B1 = 2, B2 = 3 };
enum class Axis { X, Y, Z };

// The 2x2 Pauli matrix for one axis.
Matrix pauli_matrix(Axis axis);

// A real-weighted product of Pauli operators on distinct register qubits.
// An empty factor list is the (scaled) identity.
struct PauliString {
  double coefficient = 1.0;
  std::vector<std::pair<Qubit, Axis>> factors;

  // Dense 16x16 representation on |A1 A2 B1 B2>.
  // Throws DimensionMismatch if a qubit appears twice.
  Matrix to_matrix() const;
};

// Model parameters: transverse field strength g and inverse temperature beta.
struct ModelParams {
  double g = 1.0;
  double beta = 1.0;
};

// The four circuit angles, in application order: gamma1 (transverse-field
// layer), gamma2 (intra-system Ising layer), alpha1 (inter-system XX layer),
// alpha2 (inter-system ZZ layer).
struct VariationalAngles {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
};

// Inter-system angles used by the pruned-element cost, fixed so that the
// generated reduced density matrix becomes real with a symmetric pattern.
inline constexpr double kPinnedAlpha1 = 0.39269908169872414;  // pi/8
inline constexpr double kPinnedAlpha2 = 0.7853981633974483;   // pi/4

// Search window for every optimized angle; the circuit generators have
// integer spectra, so the circuit is exactly 2*pi periodic in each angle.
inline constexpr double kAngleBound = 3.141592653589793;

// All fixed operators of the doubled model, as dense 16x16 matrices
// (h_A_sub is the 4x4 single-copy Hamiltonian on subsystem A alone).
struct HamiltonianSet {
  Matrix h_A;      // Z_A1 Z_A2 + g (X_A1 + X_A2), embedded in the register
  Matrix h_B;      // same form on B
  Matrix h_AB;     // X_A1 X_B1 + X_A2 X_B2 + Z_A1 Z_B1 + Z_A2 Z_B2
  Matrix xx_AB;    // X_A1 X_B1 + X_A2 X_B2
  Matrix zz_AB;    // Z_A1 Z_B1 + Z_A2 Z_B2
  Matrix x_gen;    // X_A1 + X_A2 + X_B1 + X_B2   (transverse-field layer)
  Matrix zz_gen;   // Z_A1 Z_A2 + Z_B1 Z_B2       (intra-system Ising layer)
  Matrix h_A_sub;  // 4x4: Z Z + g (X I + I X) on subsystem A alone
};

// The fixed 15-operator observable catalog used by the state-agreement
// metric: single-axis sums per subsystem (X_A = X_A1 + X_A2, ...), the three
// intra-system pair products per subsystem (XX_A = X_A1 X_A2, ...), and the
// inter-system pair sums (XX_AB = X_A1 X_B1 + X_A2 X_B2, ...).
// Keys: X_A, X_B, Y_A, Y_B, Z_A, Z_B, XX_A, XX_B, YY_A, YY_B, ZZ_A, ZZ_B,
// XX_AB, YY_AB, ZZ_AB.  Built once, then shared.
const std::map<std::string, Matrix>& observable_catalog();

// All model operators for transverse field strength g.
HamiltonianSet build_hamiltonians(double g);

// The fixed circuit input: the uniform superposition of the four states
// where A and B agree, (|0000> + |0101> + |1010> + |1111>)/2.  This is the
// unique top eigenstate of h_AB (eigenvalue 4), i.e. the infinite-temperature
// thermofield double.
Vector initial_state();

// Rank-one density matrix |state><state|.
Matrix density_of(const Vector& state);

// beta was negative (or nonpositive where a finite temperature is required).
struct InvalidBeta final : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// AnsatzCircuit: the four-layer variational circuit.  Layer generators do
// not depend on g, so their eigendecompositions are computed once and reused
// for every evaluation.  Layers act on initial_state() in the order
//   exp(i gamma1 x_gen) -> exp(i gamma2 zz_gen)
//   -> exp(i alpha1 xx_AB) -> exp(i alpha2 zz_AB).
// ---------------------------------------------------------------------------
class AnsatzCircuit {
 public:
  AnsatzCircuit();

  // State produced by the circuit for the given angles; unit norm up to
  // roundoff (the layers are exactly unitary in exact arithmetic).
  Vector evolve(const VariationalAngles& angles) const;

  // Shared process-wide instance (construction is thread-safe; the object is
  // immutable afterwards).
  static const AnsatzCircuit& shared();

 private:
  // One layer generator, pre-diagonalized: exp(i theta h) v is evaluated as
  // V diag(exp(i theta lambda)) V^dagger v.
  struct Propagator {
    Matrix vectors;
    Matrix vectors_adj;
    RealVector eigenvalues;
  };

  static Propagator make_propagator(const Matrix& generator);
  static Vector apply(const Propagator& p, double theta, const Vector& v);

  Propagator x_layer_;
  Propagator zz_layer_;
  Propagator xx_ab_layer_;
  Propagator zz_ab_layer_;
  Vector input_;
};

// Circuit output for the given angles, via the shared AnsatzCircuit.
Vector evolve_ansatz(const VariationalAngles& angles);

// ---------------------------------------------------------------------------
// TfdModel: the g-dependent pieces, with the subsystem Hamiltonian
// pre-diagonalized for repeated thermal-state construction.
// ---------------------------------------------------------------------------
class TfdModel {
 public:
  explicit TfdModel(double g);

  double g() const { return g_; }
  const HamiltonianSet& ops() const { return ops_; }

  // Exact thermofield double exp(-beta/2 h_A)|xi0> / norm at inverse
  // temperature beta.  beta = 0 returns initial_state(); the spectrum is
  // shifted by its minimum before exponentiation so arbitrarily large beta
  // stays finite.  Throws InvalidBeta for beta < 0.
  Vector target_tfd(double beta) const;

 private:
  double g_;
  HamiltonianSet ops_;
  EigenDecomposition h_A_eig_;
  Vector input_;
};

// Convenience wrapper: exact target for one (g, beta) pair.  Callers looping
// over beta should hold a TfdModel instead to reuse the eigendecomposition.
Vector target_tfd(const ModelParams& params);

}  // namespace tfdgen

#endif  // TFDGEN_TFIM_HPP
