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

#include "tfdgen/deopt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace tfdgen {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_config(const DEConfig& config) {
  if (config.population_size < 4) {
    throw InvalidConfig("minimize: population_size must be at least 4 (rand/1 mutation draws "
                        "three distinct members besides the target), got " +
                        std::to_string(config.population_size));
  }
  if (!(config.weight_f > 0.0) || config.weight_f > 2.0) {
    throw InvalidConfig("minimize: weight_f must lie in (0, 2], got " +
                        std::to_string(config.weight_f));
  }
  if (config.crossover_cr < 0.0 || config.crossover_cr > 1.0) {
    throw InvalidConfig("minimize: crossover_cr must lie in [0, 1], got " +
                        std::to_string(config.crossover_cr));
  }
  if (config.max_generations < 1) {
    throw InvalidConfig("minimize: max_generations must be positive");
  }
  if (config.stall_generations < 1) {
    throw InvalidConfig("minimize: stall_generations must be positive");
  }
  if (config.tolerance < 0.0) {
    throw InvalidConfig("minimize: tolerance must be non-negative");
  }
  if (config.bounds.empty()) {
    throw InvalidConfig("minimize: bounds must contain at least one (lo, hi) pair");
  }
  for (const auto& [lo, hi] : config.bounds) {
    if (!(lo < hi)) {
      throw InvalidConfig("minimize: every bound needs lo < hi, got [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
    }
  }
}

double checked_eval(const Objective& objective, const std::vector<double>& x) {
  const double value = objective(x);
  return std::isnan(value) ? kInf : value;
}

}  // namespace

std::size_t SeededRng::below(std::size_t n) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % static_cast<std::uint64_t>(n);
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return static_cast<std::size_t>(draw % static_cast<std::uint64_t>(n));
}

OptimizationResult minimize(const Objective& objective, const DEConfig& config) {
  validate_config(config);
  const std::size_t pop_size = static_cast<std::size_t>(config.population_size);
  const std::size_t dim = config.bounds.size();
  SeededRng rng(config.seed);

  std::vector<std::vector<double>> population(pop_size, std::vector<double>(dim));
  std::vector<double> costs(pop_size);
  for (std::size_t i = 0; i < pop_size; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const auto& [lo, hi] = config.bounds[j];
      population[i][j] = rng.uniform(lo, hi);
    }
    costs[i] = checked_eval(objective, population[i]);
  }

  OptimizationResult result;
  result.evaluations = static_cast<long long>(pop_size);

  std::size_t best_idx = static_cast<std::size_t>(
      std::min_element(costs.begin(), costs.end()) - costs.begin());
  result.best_params = population[best_idx];
  result.best_cost = costs[best_idx];

  std::vector<std::vector<double>> next_population = population;
  std::vector<double> next_costs = costs;
  std::vector<double> trial(dim);
  int stall = 0;

  for (int generation = 1; generation <= config.max_generations; ++generation) {
    for (std::size_t i = 0; i < pop_size; ++i) {
      // Three mutually distinct members, all different from the target.
      std::size_t r1, r2, r3;
      do {
        r1 = rng.below(pop_size);
      } while (r1 == i);
      do {
        r2 = rng.below(pop_size);
      } while (r2 == i || r2 == r1);
      do {
        r3 = rng.below(pop_size);
      } while (r3 == i || r3 == r1 || r3 == r2);

      const std::size_t forced = rng.below(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        const bool cross = rng.uniform() < config.crossover_cr || j == forced;
        trial[j] = cross ? population[r1][j] +
                               config.weight_f * (population[r2][j] - population[r3][j])
                         : population[i][j];
        const auto& [lo, hi] = config.bounds[j];
        if (trial[j] < lo || trial[j] > hi) trial[j] = rng.uniform(lo, hi);
      }

      const double trial_cost = checked_eval(objective, trial);
      ++result.evaluations;
      if (trial_cost <= costs[i]) {
        next_population[i] = trial;
        next_costs[i] = trial_cost;
      } else {
        next_population[i] = population[i];
        next_costs[i] = costs[i];
      }
    }
    population.swap(next_population);
    costs.swap(next_costs);
    result.generations_run = generation;

    best_idx = static_cast<std::size_t>(
        std::min_element(costs.begin(), costs.end()) - costs.begin());
    const double new_best = costs[best_idx];
    if (new_best > result.best_cost) {
      // Greedy selection never discards the best member, so the population
      // best cannot increase; catching it here guards the selection logic.
      throw std::logic_error("minimize: population best increased across a generation");
    }
    const double improvement = result.best_cost - new_best;
    result.best_cost = new_best;
    result.best_params = population[best_idx];

    if (improvement < config.tolerance) {
      if (++stall >= config.stall_generations) {
        result.converged = true;
        break;
      }
    } else {
      stall = 0;
    }
  }
  return result;
}

VariationalAngles angles_from(const CostKind& cost, const std::vector<double>& params) {
  const std::size_t expected = static_cast<std::size_t>(cost.parameter_count());
  if (params.size() != expected) {
    throw DimensionMismatch("angles_from: cost '" + cost.name() + "' expects " +
                            std::to_string(expected) + " parameters, got " +
                            std::to_string(params.size()));
  }
  if (expected == 2) {
    return {params[0], params[1], kPinnedAlpha1, kPinnedAlpha2};
  }
  return {params[0], params[1], params[2], params[3]};
}

OptimizationResult optimize_tfd(const CostKind& cost, const ModelParams& params,
                                DEConfig config) {
  if (cost.family != CostFamily::Infidelity && !(params.beta > 0.0)) {
    throw InvalidBeta("optimize_tfd: cost '" + cost.name() +
                      "' requires beta > 0, got " + std::to_string(params.beta));
  }

  config.bounds.assign(static_cast<std::size_t>(cost.parameter_count()),
                       {-kAngleBound, kAngleBound});

  // Per-family inner cost over the evolved state.  Immutable context is
  // captured by value so the closure is self-contained and pure.
  std::function<double(const Vector&)> inner;
  switch (cost.family) {
    case CostFamily::Infidelity: {
      const Vector target = target_tfd(params);
      inner = [target](const Vector& state) { return cost_infidelity(state, target); };
      break;
    }
    case CostFamily::FreeEnergy: {
      const Matrix h_sub = build_hamiltonians(params.g).h_A_sub;
      const double beta = params.beta;
      inner = [h_sub, beta](const Vector& state) {
        return subsystem_free_energy(partial_trace_B(density_of(state)), h_sub, beta);
      };
      break;
    }
    case CostFamily::C0: {
      const ModelParams p = params;
      inner = [p](const Vector& state) { return cost_c0(state, p); };
      break;
    }
    case CostFamily::C1: {
      const ModelParams p = params;
      const double zeta = cost.zeta;
      const double tau = cost.tau;
      inner = [p, zeta, tau](const Vector& state) { return cost_c1(state, p, zeta, tau); };
      break;
    }
    case CostFamily::C2: {
      const ModelParams p = params;
      inner = [p](const Vector& state) { return cost_c2(state, p); };
      break;
    }
  }

  const CostKind kind = cost;
  Objective objective = [kind, inner](const std::vector<double>& x) {
    try {
      return inner(evolve_ansatz(angles_from(kind, x)));
    } catch (const std::runtime_error&) {
      return kInf;  // reject the candidate, never abort the run
    }
  };
  return minimize(objective, config);
}

}  // namespace tfdgen
