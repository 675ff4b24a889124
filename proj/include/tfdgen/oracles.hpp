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

#ifndef TFDGEN_ORACLES_HPP
#define TFDGEN_ORACLES_HPP

#include "tfdgen/qcore.hpp"

// ============================================================================
// oracles: independent reference implementations used to cross-check the
// main code paths.  Each routine deliberately avoids the primitive it
// checks: loops instead of Eigen blocks, Taylor series instead of
// eigendecomposition, a different fidelity formula.  They are slow and live
// entirely outside the hot path (validation runs and tests only).
// ============================================================================

namespace tfdgen::oracles {

// Kronecker product by quadruple loop over explicit indices.
Matrix naive_kron(const Matrix& a, const Matrix& b);

// Partial trace over B by explicit four-index contraction on bit patterns.
Matrix naive_partial_trace_B(const Matrix& rho_full);

// <state|op|state> accumulated entry by entry.
Complex naive_expectation(const Vector& state, const Matrix& op);

// Matrix exponential by scaling-and-squaring Taylor series (no
// eigendecomposition involved).
Matrix taylor_exp(const Matrix& m);

// Thermal state exp(-beta h)/Tr[exp(-beta h)] via taylor_exp, with a
// Gershgorin-bound spectral shift so that large beta stays finite.
Matrix gibbs_state(const Matrix& h, double beta);

// Fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 computed through the
// spectrum of the product rho*sigma (equal for positive semidefinite
// arguments); second, structurally different path to the metrics module.
double fidelity_product_spectrum(const Matrix& rho, const Matrix& sigma);

}  // namespace tfdgen::oracles

#endif  // TFDGEN_ORACLES_HPP
