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

#include "tfdgen/metrics.hpp"

#include <cmath>

#include "tfdgen/tfim.hpp"

namespace tfdgen {

double fidelity(const Matrix& rho, const Matrix& sigma) {
  const Matrix root = matrix_sqrt(rho);
  const Matrix inner = root * sigma * root;
  // inner is Hermitian PSD in exact arithmetic; its eigenvalues may dip
  // below zero by roundoff, handled by the same clamp policy as
  // matrix_sqrt.
  const EigenDecomposition eig = hermitian_eig(inner);
  double trace_root = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    if (eig.eigenvalues[i] < numeric::kSqrtNegativeTol) {
      throw NegativeSpectrum("fidelity: inner matrix eigenvalue " +
                             std::to_string(eig.eigenvalues[i]) + " below the roundoff tolerance");
    }
    trace_root += std::sqrt(std::max(eig.eigenvalues[i], 0.0));
  }
  // The exact value lies in [0,1]; roundoff can overshoot 1 by a few ulps
  // for near-identical arguments, so pin the contract range.
  return std::min(1.0, trace_root * trace_root);
}

double trace_distance(const Matrix& rho, const Matrix& sigma) {
  if (!is_hermitian(rho) || !is_hermitian(sigma)) {
    throw NotHermitian("trace_distance: inputs must be Hermitian");
  }
  const EigenDecomposition eig = hermitian_eig(rho - sigma);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    sum += std::abs(eig.eigenvalues[i]);
  }
  // Same contract pin as fidelity: the exact value cannot exceed 1.
  return std::min(1.0, 0.5 * sum);
}

ProximityPair subsystem_proximity(const Vector& ideal, const Vector& generated) {
  const Matrix rho_A = partial_trace_B(density_of(ideal));
  const Matrix sigma_A = partial_trace_B(density_of(generated));
  return {fidelity(rho_A, sigma_A), trace_distance(rho_A, sigma_A)};
}

double xi_metric(const std::vector<std::pair<Vector, Vector>>& pairs) {
  const auto& catalog = observable_catalog();
  double total = 0.0;
  for (const auto& [ideal, generated] : pairs) {
    for (const auto& [name, op] : catalog) {
      total += std::abs(expectation(ideal, op) - expectation(generated, op));
    }
  }
  return total;
}

}  // namespace tfdgen
