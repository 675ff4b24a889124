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

#include "tfdgen/costs.hpp"

#include <cmath>
#include <string>

namespace tfdgen {

namespace {

// Expectation of a pre-validated Hermitian catalog operator; skips the
// per-call Hermiticity check of qcore::expectation on the hot path.
double expval(const Vector& state, const Matrix& op) { return state.dot(op * state).real(); }

// The six correlator operators of the c0/c1 expansions, taken from the
// shared catalog once.
struct CorrelatorOps {
  const Matrix& x_A;
  const Matrix& x_B;
  const Matrix& zz_A;
  const Matrix& zz_B;
  const Matrix& xx_AB;
  const Matrix& zz_AB;
};

const CorrelatorOps& correlator_ops() {
  static const CorrelatorOps ops = [] {
    const auto& c = observable_catalog();
    return CorrelatorOps{c.at("X_A"),   c.at("X_B"),   c.at("ZZ_A"),
                         c.at("ZZ_B"),  c.at("XX_AB"), c.at("ZZ_AB")};
  }();
  return ops;
}

void require_positive_beta(double beta, const char* who) {
  if (!(beta > 0.0)) {
    throw InvalidBeta(std::string(who) + ": finite temperature requires beta > 0, got " +
                      std::to_string(beta));
  }
}

// 4x4 subsystem Hamiltonian Z Z + g (X I + I X); small enough to rebuild
// per call.
Matrix subsystem_hamiltonian(double g) {
  const Matrix x = pauli_matrix(Axis::X);
  const Matrix z = pauli_matrix(Axis::Z);
  const Matrix i2 = Matrix::Identity(2, 2);
  return kron(z, z) + g * (kron(x, i2) + kron(i2, x));
}

}  // namespace

std::string CostKind::name() const {
  switch (family) {
    case CostFamily::Infidelity:
      return "infidelity";
    case CostFamily::FreeEnergy:
      return "free-energy";
    case CostFamily::C0:
      return "c0";
    case CostFamily::C1:
      return "c1";
    case CostFamily::C2:
      return "c2";
  }
  return "infidelity";
}

std::optional<CostKind> CostKind::parse(const std::string& name) {
  if (name == "infidelity") return infidelity();
  if (name == "free-energy") return free_energy();
  if (name == "c0") return c0();
  if (name == "c1") return c1();
  if (name == "c2") return c2();
  return std::nullopt;
}

CorrelatorReadings measure_correlators(const Vector& state) {
  const CorrelatorOps& ops = correlator_ops();
  CorrelatorReadings r;
  r.x_A = expval(state, ops.x_A);
  r.zz_A = expval(state, ops.zz_A);
  r.xx_AB = expval(state, ops.xx_AB);
  r.zz_AB = expval(state, ops.zz_AB);
  return r;
}

// ---------------------------------------------------------------------------
// Closed-form pruned elements
// ---------------------------------------------------------------------------

PrunedTriple target_pruned_elements(const ModelParams& params) {
  require_positive_beta(params.beta, "target_pruned_elements");
  const double g = params.g;
  const double gg = g * g;
  const double c = std::sqrt(4.0 * gg + 1.0);
  const double u = 0.5 * c * params.beta;
  const double w = 0.5 * params.beta;

  PrunedTriple out;
  if (params.beta <= kStableHyperbolicBeta) {
    // Direct transcription of the closed forms.
    const double d = std::cosh(2.0 * u) + std::cosh(2.0 * w);
    out.e05 = (3.0 * gg + 1.0 + gg * std::cosh(2.0 * u) - c * std::sinh(w) * std::sinh(u) +
               (4.0 * gg + 1.0) * std::cosh(w) * std::cosh(u)) /
              (4.0 * (4.0 * gg + 1.0) * d);
    out.e15 = -g * std::sinh(u) *
              (std::sinh(u) + c * (std::cosh(u) + std::sinh(w) + std::cosh(w))) /
              (4.0 * (4.0 * gg + 1.0) * d);
    const double root = std::sinh(u) / c + std::cosh(u) + std::sinh(w) + std::cosh(w);
    out.e55 = root * root / (8.0 * d);
  } else {
    // Same expressions with numerator and denominator scaled by exp(-2u).
    // Since c >= 1 implies u >= w >= 0, every surviving exponent is <= 0,
    // so nothing overflows no matter how large beta gets.
    const double e2u = std::exp(-2.0 * u);
    const double cosh2u_s = 0.5 * (1.0 + std::exp(-4.0 * u));
    const double cosh2w_s = 0.5 * (std::exp(2.0 * (w - u)) + std::exp(-2.0 * (w + u)));
    const double d_s = cosh2u_s + cosh2w_s;
    // sinh(w) sinh(u) exp(-2u) and cosh(w) cosh(u) exp(-2u):
    const double shsh_s = 0.25 * (std::exp(w - u) - std::exp(-w - u) - std::exp(w - 3.0 * u) +
                                  std::exp(-w - 3.0 * u));
    const double chch_s = 0.25 * (std::exp(w - u) + std::exp(-w - u) + std::exp(w - 3.0 * u) +
                                  std::exp(-w - 3.0 * u));
    out.e05 = ((3.0 * gg + 1.0) * e2u + gg * cosh2u_s - c * shsh_s +
               (4.0 * gg + 1.0) * chch_s) /
              (4.0 * (4.0 * gg + 1.0) * d_s);
    // sinh(u) exp(-u), cosh(u) exp(-u), and (cosh(w)+sinh(w)) exp(-u) = e^{w-u}:
    const double sinh_u_s = 0.5 * (1.0 - e2u);
    const double cosh_u_s = 0.5 * (1.0 + e2u);
    const double expw_s = std::exp(w - u);
    out.e15 = -g * sinh_u_s * (sinh_u_s + c * (cosh_u_s + expw_s)) /
              (4.0 * (4.0 * gg + 1.0) * d_s);
    const double root_s = sinh_u_s / c + cosh_u_s + expw_s;
    out.e55 = root_s * root_s / (8.0 * d_s);
  }
  return out;
}

PrunedTriple generated_pruned_elements(const CorrelatorReadings& readings) {
  const double x_a = readings.x_A;
  if (std::abs(x_a) <= kCorrelatorDenominatorFloor) {
    throw DegenerateDenominator("generated_pruned_elements: |<X_A>| = " +
                                std::to_string(std::abs(x_a)) +
                                " at or below the division guard");
  }
  const double zz_a = readings.zz_A;
  const double xx_ab = readings.xx_AB;
  const double zz_ab = readings.zz_AB;
  const double den = zz_ab * zz_ab + 4.0;
  const double plus2 = zz_ab + 2.0;

  PrunedTriple out;
  out.e05 = plus2 * plus2 * (4.0 * xx_ab + zz_ab * zz_ab - 4.0) / (64.0 * den);
  out.e15 = plus2 * (x_a * x_a * den + 4.0 * zz_a * (zz_ab * zz_ab - 4.0)) / (64.0 * x_a * den);
  out.e55 = plus2 * plus2 * (-8.0 * zz_a + zz_ab * zz_ab + 4.0) / (64.0 * den);
  return out;
}

// ---------------------------------------------------------------------------
// Cost functions
// ---------------------------------------------------------------------------

double cost_infidelity(const Vector& state, const Vector& target) {
  const Complex overlap = target.dot(state);
  return 1.0 - std::norm(overlap);
}

double subsystem_free_energy(const Matrix& rho_A, const Matrix& h_sub, double beta) {
  require_positive_beta(beta, "subsystem_free_energy");
  const double energy = (rho_A * h_sub).trace().real();
  const EigenDecomposition eig = hermitian_eig(rho_A);
  double neg_entropy = 0.0;  // Tr[rho log rho] = sum_i lambda_i log lambda_i
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double lambda = std::max(eig.eigenvalues[i], numeric::kLogEigenvalueFloor);
    neg_entropy += lambda * std::log(lambda);
  }
  return energy + (1.0 / beta) * neg_entropy;
}

double cost_free_energy(const Vector& state, const ModelParams& params) {
  require_positive_beta(params.beta, "cost_free_energy");
  const Matrix rho_A = partial_trace_B(density_of(state));
  return subsystem_free_energy(rho_A, subsystem_hamiltonian(params.g), params.beta);
}

double gibbs_free_energy(const ModelParams& params) {
  require_positive_beta(params.beta, "gibbs_free_energy");
  const EigenDecomposition eig = hermitian_eig(subsystem_hamiltonian(params.g));
  // -T log sum_i exp(-beta lambda_i), evaluated with the minimum eigenvalue
  // factored out so that the sum stays in [1, dim].
  const double lambda_min = eig.eigenvalues.minCoeff();
  double z_shifted = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    z_shifted += std::exp(-params.beta * (eig.eigenvalues[i] - lambda_min));
  }
  return lambda_min - std::log(z_shifted) / params.beta;
}

double cost_c0(const Vector& state, const ModelParams& params) {
  require_positive_beta(params.beta, "cost_c0");
  const CorrelatorOps& ops = correlator_ops();
  const double intra = expval(state, ops.zz_A) + expval(state, ops.zz_B) +
                       params.g * (expval(state, ops.x_A) + expval(state, ops.x_B));
  const double inter = expval(state, ops.xx_AB) + expval(state, ops.zz_AB);
  return intra - inter / params.beta;
}

double cost_c0_dense(const Vector& state, const ModelParams& params) {
  require_positive_beta(params.beta, "cost_c0_dense");
  const HamiltonianSet h = build_hamiltonians(params.g);
  const Matrix op = h.h_A + h.h_B - (1.0 / params.beta) * h.h_AB;
  return expectation(state, op);
}

double cost_c1(const Vector& state, const ModelParams& params, double zeta, double tau) {
  require_positive_beta(params.beta, "cost_c1");
  const CorrelatorOps& ops = correlator_ops();
  const double transverse = expval(state, ops.x_A) + expval(state, ops.x_B);
  const double intra = expval(state, ops.zz_A) + expval(state, ops.zz_B);
  const double inter = expval(state, ops.xx_AB) + expval(state, ops.zz_AB);
  return transverse + zeta * intra - std::pow(1.0 / params.beta, tau) * inter;
}

double cost_c1_dense(const Vector& state, const ModelParams& params, double zeta, double tau) {
  require_positive_beta(params.beta, "cost_c1_dense");
  const auto& c = observable_catalog();
  const Matrix op = c.at("X_A") + c.at("X_B") + zeta * (c.at("ZZ_A") + c.at("ZZ_B")) -
                    std::pow(1.0 / params.beta, tau) * (c.at("XX_AB") + c.at("ZZ_AB"));
  return expectation(state, op);
}

double cost_c2(const Vector& state, const ModelParams& params) {
  const PrunedTriple target = target_pruned_elements(params);
  const PrunedTriple generated = generated_pruned_elements(measure_correlators(state));
  const double d05 = target.e05 - generated.e05;
  const double d15 = target.e15 - generated.e15;
  const double d55 = target.e55 - generated.e55;
  return d05 * d05 + d15 * d15 + d55 * d55;
}

}  // namespace tfdgen
