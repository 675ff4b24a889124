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

#ifndef TFDGEN_DEOPT_HPP
#define TFDGEN_DEOPT_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "tfdgen/costs.hpp"

// ============================================================================
// deopt: classic differential evolution (rand/1/bin) over box-bounded real
// vectors.  Self-contained and bit-for-bit deterministic for a fixed seed:
// all randomness comes from a seeded mt19937_64 through hand-rolled uniform
// draws, never through distribution objects with implementation-defined
// output.
// ============================================================================

namespace tfdgen {

// Configuration handed to minimize was invalid (bound order, population
// size below the minimum required by rand/1 mutation, ...).
struct InvalidConfig final : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic uniform source.  mt19937_64 output is fully specified by
// the standard, so sequences are reproducible across compilers.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Raw 64-bit word.
  std::uint64_t next() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  // Uniform integer in {0, ..., n-1}, unbiased via rejection.
  std::size_t below(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

struct DEConfig {
  int population_size = 40;
  double weight_f = 0.7;      // differential weight F, in (0, 2]
  double crossover_cr = 0.9;  // crossover probability CR, in [0, 1]
  int max_generations = 1000;
  int stall_generations = 100;  // consecutive sub-tolerance improvements to stop
  double tolerance = 1e-12;
  std::uint64_t seed = 0;
  std::vector<std::pair<double, double>> bounds;  // one (lo, hi) per parameter
};

struct OptimizationResult {
  std::vector<double> best_params;
  double best_cost = 0.0;
  int generations_run = 0;
  long long evaluations = 0;
  bool converged = false;  // true iff stopped by the stall criterion
};

using Objective = std::function<double(const std::vector<double>&)>;

// Minimizes objective over config.bounds with DE/rand/1/bin:
//   - uniform random initialization inside the bounds;
//   - mutation v = a + F (b - c) over three distinct members, all different
//     from the target;
//   - binomial crossover with one forced coordinate;
//   - out-of-bounds trial coordinates re-sampled uniformly in their bound
//     (no clipping, so the boundary does not accumulate candidates);
//   - greedy selection (trial replaces target only if not worse).
// Stops after max_generations, or earlier with converged = true once the
// population best has improved by less than tolerance for
// stall_generations consecutive generations.
//
// The objective must be total over the box; +infinity rejects a candidate
// (NaN is normalized to +infinity).  Identical seed + config + objective
// give a bit-identical result.  evaluations is exactly
// population_size * (generations_run + 1).
//
// Throws InvalidConfig for malformed configuration.
OptimizationResult minimize(const Objective& objective, const DEConfig& config);

// Minimizes the selected cost at the given model parameters over the
// circuit angles: all four angles in [-kAngleBound, kAngleBound] for most
// costs, only (gamma1, gamma2) for C2 with the inter-system angles pinned
// at (kPinnedAlpha1, kPinnedAlpha2).  config.bounds is replaced by those
// boxes.  Cost-function errors during a candidate evaluation reject the
// candidate as +infinity; they never abort the run.  Throws InvalidBeta
// upfront when the cost kind requires a finite temperature and
// params.beta <= 0.
OptimizationResult optimize_tfd(const CostKind& cost, const ModelParams& params, DEConfig config);

// Maps an optimizer parameter vector back to circuit angles for the given
// cost kind (re-attaching the pinned inter-system angles for C2).
// Throws DimensionMismatch if the size does not match the cost's
// parameter count.
VariationalAngles angles_from(const CostKind& cost, const std::vector<double>& params);

}  // namespace tfdgen

#endif  // TFDGEN_DEOPT_HPP
