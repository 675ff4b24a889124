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

#ifndef TFDGEN_METRICS_HPP
#define TFDGEN_METRICS_HPP

#include <utility>
#include <vector>

#include "tfdgen/qcore.hpp"

// ============================================================================
// metrics: proximity measures between density matrices, evaluated on the
// subsystem-A reductions when full-register states are compared, plus the
// aggregate expectation-difference metric over the observable catalog.
// ============================================================================

namespace tfdgen {

// Slack applied to the analytic Fuchs-van de Graaf bounds to absorb
// roundoff when the sandwich is checked numerically.
inline constexpr double kFvgSlack = 1e-9;

// Fidelity and trace distance of one matrix pair.  For valid density
// matrices both lie in [0, 1] and obey the (numerically slackened)
// Fuchs-van de Graaf sandwich, which for the squared fidelity convention
// stored here reads
//   1 - sqrt(fidelity) <= trace_distance <= sqrt(1 - fidelity).
// Numeric checks of the upper branch should use the equivalent squared
// form trace_distance^2 <= 1 - fidelity + kFvgSlack, which stays
// conditioned as fidelity -> 1.
struct ProximityPair {
  double fidelity = 0.0;
  double trace_distance = 0.0;
};

// (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 via clamped Hermitian square
// roots.  Symmetric in its arguments up to roundoff; 1 for equal states.
// Throws NotHermitian for non-Hermitian input and NegativeSpectrum for a
// genuinely non-PSD matrix (eigenvalue below numeric::kSqrtNegativeTol).
double fidelity(const Matrix& rho, const Matrix& sigma);

// (1/2) sum_i |lambda_i(rho - sigma)|; in [0, 1] for density matrices.
// Throws NotHermitian for non-Hermitian input.
double trace_distance(const Matrix& rho, const Matrix& sigma);

// Both measures between the subsystem-A reductions of two full-register
// pure states.
ProximityPair subsystem_proximity(const Vector& ideal, const Vector& generated);

// Aggregate expectation-value disagreement: for every (ideal, generated)
// pair and every operator o in the 15-element observable catalog,
// accumulates |<ideal|o|ideal> - <generated|o|generated>|.  Non-negative;
// zero iff all catalog expectations agree.
double xi_metric(const std::vector<std::pair<Vector, Vector>>& pairs);

}  // namespace tfdgen

#endif  // TFDGEN_METRICS_HPP
