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

#ifndef TFDGEN_QCORE_HPP
#define TFDGEN_QCORE_HPP

#include <complex>
#include <functional>
#include <stdexcept>

#include <Eigen/Dense>

// ============================================================================
// qcore: dense complex linear algebra for small multi-qubit registers.
//
// Everything operates on explicit dense matrices; dimensions are small
// (2, 4, or 16) so no sparsity or symmetry exploitation is attempted.
// ============================================================================

namespace tfdgen {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// ---------------------------------------------------------------------------
// Numeric policy: every tolerance used by the library lives here, named,
// so tests and callers can reference the same constants.
// ---------------------------------------------------------------------------
namespace numeric {

// Max-norm deviation from h == h^dagger accepted as Hermitian.
inline constexpr double kHermitianTol = 1e-12;

// Eigenvalues are clamped to this floor before taking log(x); keeps the
// x*log(x) entropy contribution of a zero eigenvalue at its limit value 0.
inline constexpr double kLogEigenvalueFloor = 1e-14;

// Eigenvalues of a nominally positive semidefinite matrix may dip slightly
// negative from roundoff; values in [kSqrtNegativeTol, 0) are clamped to 0
// before sqrt, anything below is a genuine negative spectrum.
inline constexpr double kSqrtNegativeTol = -1e-10;

// Largest tolerated imaginary part when a real number is extracted from a
// computation that is real in exact arithmetic.
inline constexpr double kImaginaryLeakTol = 1e-10;

}  // namespace numeric

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

// Matrix handed to a routine requiring h == h^dagger was not Hermitian.
struct NotHermitian final : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Iterative eigensolver failed to converge.
struct ConvergenceFailure final : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands had incompatible or unsupported dimensions.
struct DimensionMismatch final : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A matrix square root was requested for a matrix with an eigenvalue below
// the roundoff tolerance numeric::kSqrtNegativeTol.
struct NegativeSpectrum final : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

// Eigensystem of a Hermitian matrix.  Eigenvalues ascend; eigenvectors are
// the orthonormal columns of `eigenvectors`, ordered to match.
struct EigenDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;
};

// True iff m is square and max|m - m^dagger| <= tol.
bool is_hermitian(const Matrix& m, double tol = numeric::kHermitianTol);

// Kronecker product a (x) b; output is (ra*rb) x (ca*cb).
Matrix kron(const Matrix& a, const Matrix& b);

// Full eigensystem of a Hermitian matrix.
// Throws NotHermitian if the input fails is_hermitian, and
// ConvergenceFailure if the underlying solver does not converge.
EigenDecomposition hermitian_eig(const Matrix& h);

// Applies a scalar function f to a Hermitian matrix through its spectrum:
// V diag(f(lambda_i)) V^dagger.  The result is Hermitian whenever f is
// real-valued.
Matrix matrix_function(const Matrix& h, const std::function<double(double)>& f);

// exp(h) through the spectrum.  No overflow guard: callers exponentiating
// large spectra must shift first (see TfdModel::target_tfd).
Matrix matrix_exp(const Matrix& h);

// log(h) through the spectrum, with eigenvalues clamped up to
// numeric::kLogEigenvalueFloor so that rank-deficient density matrices map
// to finite values (their weight in x*log(x) is zero anyway).
Matrix matrix_log(const Matrix& h);

// Principal square root of a positive semidefinite Hermitian matrix.
// Eigenvalues in [numeric::kSqrtNegativeTol, 0) are treated as roundoff and
// clamped to 0; anything below throws NegativeSpectrum.
Matrix matrix_sqrt(const Matrix& h);

// Partial trace over subsystem B of a 16x16 operator on the 4-qubit register
// |A1 A2 B1 B2> (A1 most significant bit).  Output is the 4x4 operator on
// subsystem A:  out(a, a') = sum_b in(4a + b, 4a' + b).
// Throws DimensionMismatch unless the input is 16x16.
Matrix partial_trace_B(const Matrix& rho_full);

// Real expectation value <state| op |state> of a Hermitian operator.
// Throws NotHermitian for non-Hermitian op and DimensionMismatch on a
// size mismatch.
double expectation(const Vector& state, const Matrix& op);

}  // namespace tfdgen

#endif  // TFDGEN_QCORE_HPP
