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

#include <cmath>

#include <doctest.h>

#include "test_helpers.hpp"
#include "tfdgen/metrics.hpp"
#include "tfdgen/oracles.hpp"
#include "tfdgen/tfim.hpp"

namespace tfdgen {
namespace {

using testing::basis_state;
using testing::random_density;
using testing::random_state;
using testing::random_unitary;

TEST_SUITE("metrics") {

TEST_CASE("fidelity on fixed pairs") {
  SeededRng rng(41);
  for (int k = 0; k < 20; ++k) {
    const Matrix m = random_density(rng, 4);
    CHECK(std::abs(fidelity(m, m) - 1.0) < 1e-10);
  }
  const Matrix mixed = Matrix::Identity(4, 4) / 4.0;
  const Matrix pure = density_of(basis_state(4, 0));
  CHECK(std::abs(fidelity(mixed, pure) - 0.25) < 1e-12);
}

TEST_CASE("fidelity is symmetric and matches the product-spectrum oracle") {
  SeededRng rng(42);
  for (int k = 0; k < 50; ++k) {
    const Matrix rho = random_density(rng, 4);
    const Matrix sigma = random_density(rng, 4);
    const double forward = fidelity(rho, sigma);
    CHECK(std::abs(forward - fidelity(sigma, rho)) < 1e-9);
    CHECK(std::abs(forward - oracles::fidelity_product_spectrum(rho, sigma)) < 1e-9);
  }
}

TEST_CASE("fidelity rejects genuinely non-PSD input") {
  Matrix indefinite = Matrix::Zero(4, 4);
  indefinite(0, 0) = 1.5;
  indefinite(1, 1) = -0.5;  // eigenvalue far below the clamp band
  const Matrix ok = Matrix::Identity(4, 4) / 4.0;
  CHECK_THROWS_AS(fidelity(indefinite, ok), NegativeSpectrum);
}

TEST_CASE("trace distance on fixed pairs") {
  SeededRng rng(43);
  for (int k = 0; k < 20; ++k) {
    const Matrix m = random_density(rng, 4);
    CHECK(trace_distance(m, m) < 1e-14);
  }
  CHECK(std::abs(trace_distance(density_of(basis_state(4, 0)), density_of(basis_state(4, 1))) -
                 1.0) < 1e-12);
  CHECK(std::abs(trace_distance(Matrix(Matrix::Identity(4, 4) / 4.0),
                                density_of(basis_state(4, 0))) -
                 0.75) < 1e-12);
}

TEST_CASE("trace distance obeys the triangle inequality and stays in range") {
  SeededRng rng(44);
  for (int k = 0; k < 30; ++k) {
    const Matrix a = random_density(rng, 4);
    const Matrix b = random_density(rng, 4);
    const Matrix c = random_density(rng, 4);
    const double ab = trace_distance(a, b);
    const double bc = trace_distance(b, c);
    const double ac = trace_distance(a, c);
    CHECK(ac <= ab + bc + 1e-9);
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0);
  }
}

TEST_CASE("Fuchs-van de Graaf sandwich on random pairs") {
  SeededRng rng(45);
  for (int k = 0; k < 50; ++k) {
    const Matrix rho = random_density(rng, 4);
    const Matrix sigma = random_density(rng, 4);
    const double f = fidelity(rho, sigma);
    const double t = trace_distance(rho, sigma);
    // Squared-fidelity form of the sandwich: 1 - sqrt(F) <= T <= sqrt(1 - F),
    // upper branch squared so it stays conditioned near F = 1.
    CHECK(1.0 - std::sqrt(f) <= t + kFvgSlack);
    CHECK(t * t <= 1.0 - f + kFvgSlack);
  }
}

TEST_CASE("near-identical pairs keep fidelity in range and the sandwich tight") {
  // Regression: for states differing at the 1e-8 scale the computed fidelity
  // used to overshoot 1 by a few ulps, and the root form of the upper
  // sandwich branch flagged spurious violations of order T.
  SeededRng rng(46);
  for (int k = 0; k < 20; ++k) {
    const Matrix rho = random_density(rng, 4);
    const Matrix bump = random_density(rng, 4);
    const double eps = 1e-8;
    const Matrix sigma = (1.0 - eps) * rho + eps * bump;
    const double f = fidelity(rho, sigma);
    const double t = trace_distance(rho, sigma);
    CHECK(f <= 1.0);
    CHECK(f > 1.0 - 1e-7);
    CHECK(1.0 - std::sqrt(f) <= t + kFvgSlack);
    CHECK(t * t <= 1.0 - f + kFvgSlack);
  }
}

TEST_CASE("both measures are invariant under joint unitary conjugation") {
  SeededRng rng(46);
  for (int k = 0; k < 20; ++k) {
    const Matrix rho = random_density(rng, 4);
    const Matrix sigma = random_density(rng, 4);
    const Matrix u = random_unitary(rng, 4);
    const Matrix rho_u = u * rho * u.adjoint();
    const Matrix sigma_u = u * sigma * u.adjoint();
    CHECK(std::abs(fidelity(rho, sigma) - fidelity(rho_u, sigma_u)) < 1e-9);
    CHECK(std::abs(trace_distance(rho, sigma) - trace_distance(rho_u, sigma_u)) < 1e-9);
  }
}

TEST_CASE("metrics demand Hermitian input") {
  Matrix skew = Matrix::Zero(4, 4);
  skew(0, 1) = 1.0;
  const Matrix ok = Matrix::Identity(4, 4) / 4.0;
  CHECK_THROWS_AS(trace_distance(skew, ok), NotHermitian);
  CHECK_THROWS_AS(fidelity(skew, ok), NotHermitian);
}

TEST_CASE("subsystem proximity of equal full states is (1, 0)") {
  SeededRng rng(47);
  for (int k = 0; k < 10; ++k) {
    const Vector state = random_state(rng, 16);
    const ProximityPair pair = subsystem_proximity(state, state);
    CHECK(std::abs(pair.fidelity - 1.0) < 1e-10);
    CHECK(pair.trace_distance < 1e-10);
  }
}

TEST_CASE("xi metric on fixed pairs") {
  const Vector a = basis_state(16, 0);
  CHECK(xi_metric({{a, a}}) == 0.0);

  // |0000> vs |1111>: only the single-axis Z sums differ (by 2 each, per
  // subsystem); all pair products and X/Y expectations coincide.
  const Vector b = basis_state(16, 15);
  CHECK(std::abs(xi_metric({{a, b}}) - 8.0) < 1e-12);
}

TEST_CASE("xi metric is additive over disjoint pair sets") {
  SeededRng rng(48);
  std::vector<std::pair<Vector, Vector>> first, second, joined;
  for (int k = 0; k < 5; ++k) {
    first.emplace_back(random_state(rng, 16), random_state(rng, 16));
    second.emplace_back(random_state(rng, 16), random_state(rng, 16));
  }
  joined = first;
  joined.insert(joined.end(), second.begin(), second.end());
  CHECK(std::abs(xi_metric(joined) - (xi_metric(first) + xi_metric(second))) < 1e-12);
  CHECK(xi_metric(joined) >= 0.0);
}

}  // TEST_SUITE

}  // namespace
}  // namespace tfdgen
