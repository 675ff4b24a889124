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

#include "tfdgen/oracles.hpp"

#include <cmath>

namespace tfdgen::oracles {

Matrix naive_kron(const Matrix& a, const Matrix& b) {
  const Eigen::Index ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  Matrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i) {
    for (Eigen::Index j = 0; j < ca; ++j) {
      for (Eigen::Index k = 0; k < rb; ++k) {
        for (Eigen::Index l = 0; l < cb; ++l) {
          out(i * rb + k, j * cb + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

Matrix naive_partial_trace_B(const Matrix& rho_full) {
  Matrix out = Matrix::Zero(4, 4);
  for (int a1 = 0; a1 < 2; ++a1) {
    for (int a2 = 0; a2 < 2; ++a2) {
      for (int a1p = 0; a1p < 2; ++a1p) {
        for (int a2p = 0; a2p < 2; ++a2p) {
          Complex sum = 0.0;
          for (int b1 = 0; b1 < 2; ++b1) {
            for (int b2 = 0; b2 < 2; ++b2) {
              const int row = 8 * a1 + 4 * a2 + 2 * b1 + b2;
              const int col = 8 * a1p + 4 * a2p + 2 * b1 + b2;
              sum += rho_full(row, col);
            }
          }
          out(2 * a1 + a2, 2 * a1p + a2p) = sum;
        }
      }
    }
  }
  return out;
}

Complex naive_expectation(const Vector& state, const Matrix& op) {
  Complex sum = 0.0;
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    for (Eigen::Index j = 0; j < state.size(); ++j) {
      sum += std::conj(state[i]) * op(i, j) * state[j];
    }
  }
  return sum;
}

Matrix taylor_exp(const Matrix& m) {
  // Scale so that the series argument has small norm, sum the series, then
  // square back up.
  const double norm = m.cwiseAbs().sum();
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  const Matrix x = m * scale;
  Matrix term = Matrix::Identity(m.rows(), m.cols());
  Matrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

Matrix gibbs_state(const Matrix& h, double beta) {
  // Gershgorin lower bound on the spectrum keeps the exponent matrix
  // bounded above by beta * (spectral spread), independent of beta's sign
  // conventions elsewhere.
  double lower = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    double radius = 0.0;
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
      if (j != i) radius += std::abs(h(i, j));
    }
    lower = std::min(lower, h(i, i).real() - radius);
  }
  const Matrix shifted = -beta * (h - lower * Matrix::Identity(h.rows(), h.cols()));
  Matrix rho = taylor_exp(shifted);
  return rho / rho.trace().real();
}

double fidelity_product_spectrum(const Matrix& rho, const Matrix& sigma) {
  // For positive semidefinite rho and sigma, the eigenvalues of rho*sigma
  // are real and nonnegative, and Tr sqrt(sqrt(rho) sigma sqrt(rho)) equals
  // the sum of their square roots.
  Eigen::ComplexEigenSolver<Matrix> solver(rho * sigma);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    sum += std::sqrt(std::max(solver.eigenvalues()[i].real(), 0.0));
  }
  return sum * sum;
}

}  // namespace tfdgen::oracles
