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

#ifndef TFDGEN_COSTS_HPP
#define TFDGEN_COSTS_HPP

#include <optional>
#include <string>

#include "tfdgen/tfim.hpp"

// ============================================================================
// costs: the five cost functions compared by the harness.
//
//   infidelity   1 - |<target|state>|^2            (needs the exact target)
//   free-energy  Tr[s_A h_A_sub] + T Tr[s_A log s_A]  (needs subsystem
//                tomography of the reduced state s_A)
//   c0           <h_A + h_B - T h_AB>              (six Pauli correlators)
//   c1           c0 reshaped with weights zeta and an exponent tau on T
//   c2           squared mismatch of three selected density-matrix elements,
//                each side known in closed form
//
// Correlator evaluation is the canonical path for c0/c1 (these costs exist
// because the correlators are the experimentally measurable primitive); the
// *_dense variants evaluate the same operator as one dense expectation and
// exist as cross-checks.
// ============================================================================

namespace tfdgen {

// Default shape parameters of the c1 cost (the grid optimum of the
// zeta-tau sweep; see bench::sweep_zeta_tau).
inline constexpr double kDefaultZeta = 1.6;
inline constexpr double kDefaultTau = 1.48;

// |<X_A>| at or below this floor makes the generated-element closed form
// ill-defined (its middle element divides by <X_A>).
inline constexpr double kCorrelatorDenominatorFloor = 1e-9;

// Above this inverse temperature the closed-form target elements switch to
// the exponential-shifted evaluation (naive cosh overflows near beta ~ 600
// at g=1, earlier for larger |g|).
inline constexpr double kStableHyperbolicBeta = 50.0;

// The closed form for the generated elements divides by <X_A>, which
// vanishes on a measurable set of angles.
struct DegenerateDenominator final : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Cost selection
// ---------------------------------------------------------------------------

enum class CostFamily { Infidelity, FreeEnergy, C0, C1, C2 };

// A cost function choice; C1 carries its two shape parameters.
struct CostKind {
  CostFamily family = CostFamily::Infidelity;
  double zeta = kDefaultZeta;  // meaningful for C1 only
  double tau = kDefaultTau;    // meaningful for C1 only

  static CostKind infidelity() { return {CostFamily::Infidelity}; }
  static CostKind free_energy() { return {CostFamily::FreeEnergy}; }
  static CostKind c0() { return {CostFamily::C0}; }
  static CostKind c1(double zeta = kDefaultZeta, double tau = kDefaultTau) {
    return {CostFamily::C1, zeta, tau};
  }
  static CostKind c2() { return {CostFamily::C2}; }

  // Canonical CLI/CSV name: infidelity | free-energy | c0 | c1 | c2.
  std::string name() const;

  // Inverse of name(); nullopt for unknown names.  A parsed C1 carries the
  // default shape parameters.
  static std::optional<CostKind> parse(const std::string& name);

  // Number of optimized angles: 2 for C2 (inter-system angles pinned at
  // (kPinnedAlpha1, kPinnedAlpha2)), 4 otherwise.
  int parameter_count() const { return family == CostFamily::C2 ? 2 : 4; }
};

// ---------------------------------------------------------------------------
// Correlators and pruned density-matrix elements
// ---------------------------------------------------------------------------

// The four measurable expectation values the engineered cost consumes.
// x_A is the two-qubit sum <X_A1 + X_A2>; zz_A the intra-system product
// <Z_A1 Z_A2>; xx_AB and zz_AB the inter-system pair sums.
struct CorrelatorReadings {
  double x_A = 0.0;
  double zz_A = 0.0;
  double xx_AB = 0.0;
  double zz_AB = 0.0;
};

// Correlator readings of a state, evaluated on the shared operator catalog.
CorrelatorReadings measure_correlators(const Vector& state);

// Values of a density matrix at the three retained positions (0,5), (1,5)
// and (5,5); all three are real both for the target and for the circuit
// output with pinned inter-system angles.
struct PrunedTriple {
  double e05 = 0.0;
  double e15 = 0.0;
  double e55 = 0.0;
};

// Target-side (closed-form) and generated-side (correlator-derived) values
// at the retained positions.
struct PrunedElements {
  PrunedTriple target;
  PrunedTriple generated;
};

// Closed-form target density-matrix elements at positions (0,5), (1,5),
// (5,5) as functions of (g, beta) alone.  Uses the exponential-shifted
// evaluation above kStableHyperbolicBeta.  Throws InvalidBeta for beta <= 0.
PrunedTriple target_pruned_elements(const ModelParams& params);

// Closed-form generated density-matrix elements at the same positions,
// valid for states evolved with the pinned inter-system angles
// (kPinnedAlpha1, kPinnedAlpha2) — not enforced here.  The x_A appearing in
// the closed form is the two-qubit sum <X_A1 + X_A2>, the same normalization
// as CorrelatorReadings::x_A (fixed by checking both candidate conventions
// against the dense density matrix; only the sum reproduces element (1,5)).
// Throws DegenerateDenominator when |x_A| <= kCorrelatorDenominatorFloor.
PrunedTriple generated_pruned_elements(const CorrelatorReadings& readings);

// ---------------------------------------------------------------------------
// Cost functions
// ---------------------------------------------------------------------------

// 1 - |<target|state>|^2, in [0, 1] for normalized inputs.
double cost_infidelity(const Vector& state, const Vector& target);

// Subsystem free energy of an explicit 4x4 reduced density matrix:
// Tr[rho_A h_sub] + T * sum_i lambda_i log lambda_i with T = 1/beta and the
// log clamped at numeric::kLogEigenvalueFloor.  Throws InvalidBeta for
// beta <= 0.
double subsystem_free_energy(const Matrix& rho_A, const Matrix& h_sub, double beta);

// Free energy of the reduced state of `state` against the subsystem
// Hamiltonian at params.g, at temperature T = 1/params.beta.  The global
// minimum over all reduced states is gibbs_free_energy(params), attained
// exactly by the thermal state.
double cost_free_energy(const Vector& state, const ModelParams& params);

// The analytic free-energy minimum -T log Tr[exp(-beta h_A_sub)], evaluated
// overflow-free.  Throws InvalidBeta for beta <= 0.
double gibbs_free_energy(const ModelParams& params);

// <h_A + h_B - T h_AB> with T = 1/beta, evaluated from six Pauli
// correlators.  Throws InvalidBeta for beta <= 0.
double cost_c0(const Vector& state, const ModelParams& params);

// Same operator evaluated as a single dense expectation; cross-check path.
double cost_c0_dense(const Vector& state, const ModelParams& params);

// <X_A + X_B + zeta (ZZ_A + ZZ_B) - T^tau (XX_AB + ZZ_AB)> with T = 1/beta.
// Reduces to cost_c0 at (zeta=1, tau=1, g=1).  Calibrated at g=1; defined
// for any g.  Throws InvalidBeta for beta <= 0.
double cost_c1(const Vector& state, const ModelParams& params, double zeta = kDefaultZeta,
               double tau = kDefaultTau);

// Dense cross-check path for cost_c1.
double cost_c1_dense(const Vector& state, const ModelParams& params, double zeta = kDefaultZeta,
                     double tau = kDefaultTau);

// Sum of squared target-vs-generated differences over the three retained
// elements.  Meaningful for states evolved with pinned inter-system angles.
// Throws InvalidBeta (beta <= 0) and propagates DegenerateDenominator.
double cost_c2(const Vector& state, const ModelParams& params);

}  // namespace tfdgen

#endif  // TFDGEN_COSTS_HPP
