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

#include "tfdgen/qcore.hpp"

#include <cmath>
#include <string>

namespace tfdgen {

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

EigenDecomposition hermitian_eig(const Matrix& h) {
  if (!is_hermitian(h)) {
    throw NotHermitian("hermitian_eig: input deviates from h == h^dagger by more than " +
                            std::to_string(numeric::kHermitianTol));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("hermitian_eig: eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix matrix_function(const Matrix& h, const std::function<double(double)>& f) {
  const EigenDecomposition eig = hermitian_eig(h);
  RealVector mapped(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < mapped.size(); ++i) mapped[i] = f(eig.eigenvalues[i]);
  return eig.eigenvectors * mapped.asDiagonal() * eig.eigenvectors.adjoint();
}

Matrix matrix_exp(const Matrix& h) {
  return matrix_function(h, [](double x) { return std::exp(x); });
}

Matrix matrix_log(const Matrix& h) {
  return matrix_function(h, [](double x) {
    return std::log(std::max(x, numeric::kLogEigenvalueFloor));
  });
}

Matrix matrix_sqrt(const Matrix& h) {
  const EigenDecomposition eig = hermitian_eig(h);
  if (eig.eigenvalues.minCoeff() < numeric::kSqrtNegativeTol) {
    throw NegativeSpectrum(
        "matrix_sqrt: eigenvalue " + std::to_string(eig.eigenvalues.minCoeff()) +
        " below the roundoff tolerance for a positive semidefinite matrix");
  }
  RealVector mapped(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < mapped.size(); ++i) {
    mapped[i] = std::sqrt(std::max(eig.eigenvalues[i], 0.0));
  }
  return eig.eigenvectors * mapped.asDiagonal() * eig.eigenvectors.adjoint();
}

Matrix partial_trace_B(const Matrix& rho_full) {
  if (rho_full.rows() != 16 || rho_full.cols() != 16) {
    throw DimensionMismatch("partial_trace_B: expected a 16x16 operator, got " +
                         std::to_string(rho_full.rows()) + "x" + std::to_string(rho_full.cols()));
  }
  Matrix out = Matrix::Zero(4, 4);
  for (int a = 0; a < 4; ++a) {
    for (int ap = 0; ap < 4; ++ap) {
      Complex sum = 0.0;
      for (int b = 0; b < 4; ++b) sum += rho_full(4 * a + b, 4 * ap + b);
      out(a, ap) = sum;
    }
  }
  return out;
}

double expectation(const Vector& state, const Matrix& op) {
  if (op.rows() != op.cols() || op.rows() != state.size()) {
    throw DimensionMismatch("expectation: operator is " + std::to_string(op.rows()) + "x" +
                         std::to_string(op.cols()) + " but state has dimension " +
                         std::to_string(state.size()));
  }
  if (!is_hermitian(op)) {
    throw NotHermitian("expectation: operator is not Hermitian");
  }
  const Complex value = state.dot(op * state);
  if (std::abs(value.imag()) > numeric::kImaginaryLeakTol) {
    throw std::logic_error("expectation: imaginary leak " + std::to_string(value.imag()));
  }
  return value.real();
}

}  // namespace tfdgen
