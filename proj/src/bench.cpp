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

#include "tfdgen/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "tfdgen/oracles.hpp"

namespace tfdgen {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

// ---------------------------------------------------------------------------
// Grids
// ---------------------------------------------------------------------------

std::vector<double> beta_grid() {
  std::vector<double> values;
  values.reserve(55);
  for (int exponent = -3; exponent <= 2; ++exponent) {
    for (int mantissa = 1; mantissa <= 9; ++mantissa) {
      values.push_back(mantissa * std::pow(10.0, exponent));
    }
  }
  values.push_back(1000.0);
  return values;
}

std::vector<double> default_g_values() { return {-0.1, -0.2, -0.5, 1.0, 2.0, 5.0}; }

std::vector<double> linear_range(double lo, double hi, double step) {
  std::vector<double> values;
  for (int i = 0;; ++i) {
    const double v = lo + i * step;
    if (v > hi + 0.5 * step) break;
    values.push_back(v);
  }
  return values;
}

// ---------------------------------------------------------------------------
// Seed derivation and the worker pool
// ---------------------------------------------------------------------------

namespace {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t cost_id(const CostKind& kind) {
  return static_cast<std::uint64_t>(kind.family);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t beta_index, std::uint64_t g_index,
                          std::uint64_t cost_id_value, std::uint64_t extra) {
  std::uint64_t h = splitmix64(master ^ 0x243F6A8885A308D3ull);
  h = splitmix64(h ^ beta_index);
  h = splitmix64(h ^ (g_index + 0x100000000ull));
  h = splitmix64(h ^ (cost_id_value + 0x200000000ull));
  h = splitmix64(h ^ (extra + 0x300000000ull));
  return h;
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body) {
  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
  }
  const std::size_t thread_count = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  if (thread_count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(thread_count);
  for (std::size_t t = 0; t < thread_count; ++t) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        try {
          body(i);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

namespace {

// Runs one optimizer point and measures the resulting state against the
// exact target.  Never throws: a failed point is flagged with
// cost_value = +infinity.
SweepRecord run_sweep_point(const CostKind& cost, const ModelParams& params, DEConfig de,
                            std::uint64_t seed) {
  de.seed = seed;
  SweepRecord record;
  record.beta = params.beta;
  record.g = params.g;
  record.cost_kind = cost;
  record.seed = seed;
  try {
    const OptimizationResult result = optimize_tfd(cost, params, de);
    record.angles = angles_from(cost, result.best_params);
    record.cost_value = result.best_cost;
    const Vector generated = evolve_ansatz(record.angles);
    const Vector ideal = target_tfd(params);
    const ProximityPair proximity = subsystem_proximity(ideal, generated);
    record.fidelity = proximity.fidelity;
    record.trace_distance = proximity.trace_distance;
  } catch (const std::exception&) {
    record.angles = {};
    record.cost_value = kInf;
    record.fidelity = 0.0;
    record.trace_distance = 1.0;
  }
  return record;
}

}  // namespace

std::vector<SweepRecord> sweep_beta(const CostKind& cost, double g,
                                    const std::vector<double>& betas, const DEConfig& de,
                                    int workers) {
  std::vector<SweepRecord> records(betas.size());
  parallel_for(betas.size(), workers, [&](std::size_t bi) {
    const std::uint64_t seed = derive_seed(de.seed, bi, 0, cost_id(cost));
    records[bi] = run_sweep_point(cost, {g, betas[bi]}, de, seed);
  });
  return records;
}

ZetaTauSweep sweep_zeta_tau(const std::vector<double>& zetas, const std::vector<double>& taus,
                            const std::vector<double>& betas, const DEConfig& de, int workers) {
  const std::size_t nz = zetas.size(), nt = taus.size(), nb = betas.size();

  // Exact targets are shared across the whole grid (the c1 study runs at
  // g = 1, where its shape parameters were calibrated).
  TfdModel model(1.0);
  std::vector<Vector> ideals(nb);
  for (std::size_t bi = 0; bi < nb; ++bi) ideals[bi] = model.target_tfd(betas[bi]);

  std::vector<Vector> generated(nz * nt * nb);
  parallel_for(generated.size(), workers, [&](std::size_t job) {
    const std::size_t zi = job / (nt * nb);
    const std::size_t ti = (job / nb) % nt;
    const std::size_t bi = job % nb;
    const CostKind cost = CostKind::c1(zetas[zi], taus[ti]);
    DEConfig config = de;
    config.seed = derive_seed(de.seed, bi, 0, cost_id(cost),
                              (static_cast<std::uint64_t>(zi) << 32) |
                                  static_cast<std::uint64_t>(ti + 1));
    try {
      const OptimizationResult result = optimize_tfd(cost, {1.0, betas[bi]}, config);
      generated[job] = evolve_ansatz(angles_from(cost, result.best_params));
    } catch (const std::exception&) {
      generated[job] = initial_state();  // defined fallback; inflates xi_abs
    }
  });

  ZetaTauSweep sweep;
  sweep.records.reserve(nz * nt);
  double best = kInf;
  for (std::size_t zi = 0; zi < nz; ++zi) {
    for (std::size_t ti = 0; ti < nt; ++ti) {
      std::vector<std::pair<Vector, Vector>> pairs;
      pairs.reserve(nb);
      for (std::size_t bi = 0; bi < nb; ++bi) {
        pairs.emplace_back(ideals[bi], generated[(zi * nt + ti) * nb + bi]);
      }
      const GridRecord record{zetas[zi], taus[ti], xi_metric(pairs)};
      if (record.xi_abs < best) {
        best = record.xi_abs;
        sweep.argmin_zeta = record.zeta;
        sweep.argmin_tau = record.tau;
      }
      sweep.records.push_back(record);
    }
  }
  return sweep;
}

std::vector<SweepRecord> sweep_g(const std::vector<CostKind>& costs,
                                 const std::vector<double>& g_values,
                                 const std::vector<double>& betas, const DEConfig& de,
                                 int workers) {
  const std::size_t nc = costs.size(), ng = g_values.size(), nb = betas.size();
  std::vector<SweepRecord> records(nc * ng * nb);
  parallel_for(records.size(), workers, [&](std::size_t job) {
    const std::size_t ci = job / (ng * nb);
    const std::size_t gi = (job / nb) % ng;
    const std::size_t bi = job % nb;
    const std::uint64_t seed = derive_seed(de.seed, bi, gi, cost_id(costs[ci]));
    records[job] = run_sweep_point(costs[ci], {g_values[gi], betas[bi]}, de, seed);
  });
  return records;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace {

// Row/column symmetry class of each basis index; entries of the target and
// generated density matrices are equal whenever their (row class, column
// class) pairs match, giving the 15-unique-element structure both matrices
// share.
constexpr int kEntryClass[16] = {0, 1, 1, 3, 1, 5, 6, 1, 1, 6, 5, 1, 3, 1, 1, 0};

// Max deviation of a matrix from its class-equality pattern.  Entries with
// a transposed class pair must match the conjugate of the representative;
// with expect_real, imaginary parts count as violations too.
double pattern_violation(const Matrix& m, bool expect_real) {
  std::map<std::pair<int, int>, Complex> representative;
  double err = 0.0;
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      const int ci = kEntryClass[i], cj = kEntryClass[j];
      const std::pair<int, int> key = std::minmax(ci, cj);
      const Complex value = ci <= cj ? m(i, j) : std::conj(m(i, j));
      if (expect_real) err = std::max(err, std::abs(m(i, j).imag()));
      const auto [it, inserted] = representative.try_emplace(key, value);
      if (!inserted) err = std::max(err, std::abs(value - it->second));
    }
  }
  return err;
}

Vector random_state(SeededRng& rng) {
  Vector v(16);
  for (int i = 0; i < 16; ++i) v[i] = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  v.normalize();
  return v;
}

// Random density matrix: normalized G G^dagger with Ginibre-style G.
Matrix random_density(SeededRng& rng, int dim) {
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  }
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

// Violation of the Fuchs-van de Graaf sandwich for one (fidelity, trace
// distance) pair; zero when the pair sits inside the slackened bounds. The
// stored fidelity is the squared convention, so the theorem reads
// 1 - sqrt(F) <= T <= sqrt(1 - F).  The upper branch is checked in the
// algebraically equivalent form T^2 <= 1 - F: the root form loses all
// conditioning as F -> 1, where a few ulps of fidelity roundoff (computed F
// can land slightly above 1 for near-identical states) would register as a
// spurious violation of order T itself.
double sandwich_violation(double fidelity_value, double trace_distance_value) {
  const double root = std::sqrt(std::max(0.0, fidelity_value));
  const double lower = (1.0 - root) - trace_distance_value;
  const double upper =
      trace_distance_value * trace_distance_value - (1.0 - fidelity_value);
  return std::max(0.0, std::max(lower, upper));
}

struct CheckRunner {
  ValidationReport report;

  void add(const std::string& name, double max_error, double tolerance) {
    report.checks.push_back({name, max_error, tolerance, max_error <= tolerance});
  }
};

}  // namespace

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

ValidationReport validate_oracles(std::uint64_t seed) {
  CheckRunner runner;
  SeededRng rng(seed);

  // --- Thermal reduction: the target's subsystem-A state is the Gibbs
  // state of the subsystem Hamiltonian (Taylor-series oracle).
  {
    double err = 0.0;
    for (const double g : {0.5, 1.0, 2.0}) {
      const TfdModel model(g);
      for (const double beta : {0.1, 1.0, 10.0}) {
        const Matrix reduced = partial_trace_B(density_of(model.target_tfd(beta)));
        const Matrix thermal = oracles::gibbs_state(model.ops().h_A_sub, beta);
        err = std::max(err, (reduced - thermal).cwiseAbs().maxCoeff());
      }
    }
    runner.add("gibbs-reduction", err, 1e-10);
  }

  // --- Closed-form target elements against the brute-force density matrix.
  {
    double err = 0.0;
    for (const double g : {-0.5, 1.0, 2.0, 5.0}) {
      const TfdModel model(g);
      for (const double beta : {1e-3, 1e-1, 1.0, 10.0, 1e3}) {
        const Matrix rho = density_of(model.target_tfd(beta));
        const PrunedTriple r = target_pruned_elements({g, beta});
        err = std::max({err, std::abs(r.e05 - rho(0, 5).real()),
                        std::abs(r.e15 - rho(1, 5).real()),
                        std::abs(r.e55 - rho(5, 5).real())});
      }
    }
    runner.add("target-elements-closed-form", err, 1e-9);
  }

  // --- Closed-form generated elements against the dense density matrix,
  // with the inter-system angles pinned.
  {
    double err = 0.0;
    for (int k = 0; k < 50; ++k) {
      const VariationalAngles angles{rng.uniform(-kAngleBound, kAngleBound),
                                     rng.uniform(-kAngleBound, kAngleBound), kPinnedAlpha1,
                                     kPinnedAlpha2};
      const Vector state = evolve_ansatz(angles);
      const CorrelatorReadings readings = measure_correlators(state);
      if (std::abs(readings.x_A) <= 1e-6) continue;  // too close to the guard
      const PrunedTriple s = generated_pruned_elements(readings);
      const Matrix sigma = density_of(state);
      err = std::max({err, std::abs(s.e05 - sigma(0, 5).real()),
                      std::abs(s.e15 - sigma(1, 5).real()),
                      std::abs(s.e55 - sigma(5, 5).real())});
    }
    runner.add("generated-elements-closed-form", err, 1e-9);
  }

  // --- Equality pattern of the target density matrix (real symmetric,
  // 15 unique elements).
  {
    double err = 0.0;
    for (const double g : {-0.5, 1.0, 2.0}) {
      const TfdModel model(g);
      for (const double beta : {0.0, 0.1, 1.0, 10.0, 100.0}) {
        err = std::max(err, pattern_violation(density_of(model.target_tfd(beta)), true));
      }
    }
    runner.add("target-pattern", err, 1e-10);
  }

  // --- Equality pattern of the generated density matrix (Hermitian with
  // conjugate pairs across the diagonal) for random angles.
  {
    double err = 0.0;
    for (int k = 0; k < 100; ++k) {
      const VariationalAngles angles{
          rng.uniform(-kAngleBound, kAngleBound), rng.uniform(-kAngleBound, kAngleBound),
          rng.uniform(-kAngleBound, kAngleBound), rng.uniform(-kAngleBound, kAngleBound)};
      err = std::max(err, pattern_violation(density_of(evolve_ansatz(angles)), false));
    }
    runner.add("generated-pattern", err, 1e-10);
  }

  // --- Pinning the inter-system angles makes every unique element real and
  // identifies the (3,5) and (0,6) elements.
  {
    double err = 0.0;
    for (int k = 0; k < 50; ++k) {
      const VariationalAngles angles{rng.uniform(-kAngleBound, kAngleBound),
                                     rng.uniform(-kAngleBound, kAngleBound), kPinnedAlpha1,
                                     kPinnedAlpha2};
      const Matrix sigma = density_of(evolve_ansatz(angles));
      double imag_leak = 0.0;
      for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) imag_leak = std::max(imag_leak, std::abs(sigma(i, j).imag()));
      }
      err = std::max({err, imag_leak, std::abs(sigma(3, 5) - sigma(0, 6))});
    }
    runner.add("symmetrized-elements", err, 1e-10);
  }

  // --- Subsystem energy from three measurable correlators.
  {
    const Matrix x_a1 = PauliString{1.0, {{Qubit::A1, Axis::X}}}.to_matrix();
    const Matrix x_a2 = PauliString{1.0, {{Qubit::A2, Axis::X}}}.to_matrix();
    const Matrix zz_a = observable_catalog().at("ZZ_A");
    double err = 0.0;
    for (int k = 0; k < 100; ++k) {
      const double g = rng.uniform(-2.0, 2.0);
      const Vector state = random_state(rng);
      const Matrix h_sub = build_hamiltonians(g).h_A_sub;
      const double energy = (partial_trace_B(density_of(state)) * h_sub).trace().real();
      const double correlators = expectation(state, zz_a) +
                                 g * expectation(state, x_a1) + g * expectation(state, x_a2);
      err = std::max(err, std::abs(energy - correlators));
    }
    runner.add("three-correlator-energy", err, 1e-12);
  }

  // --- The correlator expansion and the dense operator agree for every
  // cost that has both paths, and c1 collapses onto c0 at its neutral
  // shape parameters.
  {
    double err = 0.0;
    for (int k = 0; k < 50; ++k) {
      const Vector state = random_state(rng);
      err = std::max(err, std::abs(cost_c0(state, {1.3, 0.7}) - cost_c0_dense(state, {1.3, 0.7})));
      err = std::max(err, std::abs(cost_c0(state, {-0.5, 3.0}) - cost_c0_dense(state, {-0.5, 3.0})));
      err = std::max(err, std::abs(cost_c1(state, {1.0, 0.7}, kDefaultZeta, kDefaultTau) -
                                   cost_c1_dense(state, {1.0, 0.7}, kDefaultZeta, kDefaultTau)));
      err = std::max(err, std::abs(cost_c1(state, {1.0, 5.0}, 0.7, 2.0) -
                                   cost_c1_dense(state, {1.0, 5.0}, 0.7, 2.0)));
      err = std::max(err, std::abs(cost_c1(state, {1.0, 0.7}, 1.0, 1.0) -
                                   cost_c0(state, {1.0, 0.7})));
    }
    runner.add("dual-path-costs", err, 1e-12);
  }

  // --- Fuchs-van de Graaf sandwich on random density pairs and on the
  // records of a small optimizer sweep.
  {
    double err = 0.0;
    for (int k = 0; k < 50; ++k) {
      const Matrix rho = random_density(rng, 4);
      const Matrix sigma = random_density(rng, 4);
      err = std::max(err, sandwich_violation(fidelity(rho, sigma), trace_distance(rho, sigma)));
    }
    DEConfig mini;
    mini.population_size = 24;
    mini.max_generations = 150;
    mini.stall_generations = 40;
    mini.seed = seed;
    const std::vector<double> all_betas = beta_grid();
    std::vector<double> betas;
    for (std::size_t i = 0; i < all_betas.size(); i += 5) betas.push_back(all_betas[i]);
    for (const SweepRecord& record :
         sweep_beta(CostKind::free_energy(), 1.0, betas, mini, 0)) {
      err = std::max(err, sandwich_violation(record.fidelity, record.trace_distance));
    }
    runner.add("fuchs-van-de-graaf", err, kFvgSlack);
  }

  // --- Optimizer: bit-identical reruns, and the standard benchmark
  // functions reach their known minima at the default budget.
  {
    DEConfig config;
    config.population_size = 20;
    config.max_generations = 60;
    config.stall_generations = 30;
    config.seed = 42;
    const ModelParams params{1.0, 1.3};
    const OptimizationResult first = optimize_tfd(CostKind::c1(), params, config);
    const OptimizationResult second = optimize_tfd(CostKind::c1(), params, config);
    bool identical = first.best_cost == second.best_cost &&
                     first.generations_run == second.generations_run &&
                     first.evaluations == second.evaluations &&
                     first.converged == second.converged &&
                     first.best_params == second.best_params;
    runner.add("de-determinism", identical ? 0.0 : 1.0, 0.0);
  }
  {
    DEConfig config;
    config.seed = 7;
    config.bounds.assign(4, {-5.0, 5.0});
    const OptimizationResult result = minimize(
        [](const std::vector<double>& x) {
          double sum = 0.0;
          for (const double v : x) sum += v * v;
          return sum;
        },
        config);
    runner.add("de-sphere", result.best_cost, 1e-10);
  }
  {
    DEConfig config;
    config.seed = 7;
    config.bounds.assign(2, {-5.12, 5.12});
    const OptimizationResult result = minimize(
        [](const std::vector<double>& x) {
          double sum = 10.0 * static_cast<double>(x.size());
          for (const double v : x) sum += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
          return sum;
        },
        config);
    runner.add("de-rastrigin", result.best_cost, 1e-6);
  }

  return runner.report;
}

void print_report(const ValidationReport& report, std::ostream& out) {
  for (const CheckResult& check : report.checks) {
    char line[160];
    std::snprintf(line, sizeof(line), "[%s] %-32s max_error=%.3e  tolerance=%.3e",
                  check.passed ? "PASS" : "FAIL", check.name.c_str(), check.max_error,
                  check.tolerance);
    out << line << "\n";
  }
  out << (report.all_passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
}

// ---------------------------------------------------------------------------
// CSV / SVG artifacts
// ---------------------------------------------------------------------------

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string csv_string(const std::vector<SweepRecord>& records) {
  std::string out = kCsvHeader;
  out += "\n";
  for (const SweepRecord& r : records) {
    out += format_double(r.beta);
    out += ",";
    out += format_double(r.g);
    out += ",";
    out += r.cost_kind.name();
    out += ",";
    out += format_double(r.angles.gamma1);
    out += ",";
    out += format_double(r.angles.gamma2);
    out += ",";
    out += format_double(r.angles.alpha1);
    out += ",";
    out += format_double(r.angles.alpha2);
    out += ",";
    out += format_double(r.cost_value);
    out += ",";
    out += format_double(r.fidelity);
    out += ",";
    out += format_double(r.trace_distance);
    out += ",";
    out += std::to_string(r.seed);
    out += "\n";
  }
  return out;
}

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error(path + ": cannot open for writing");
  file << content;
  file.flush();
  if (!file) throw std::runtime_error(path + ": write failed");
}

double parse_field_double(const std::string& field, const std::string& path, std::size_t line) {
  char* end = nullptr;
  const double value = std::strtod(field.c_str(), &end);
  if (end != field.c_str() + field.size() || field.empty()) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": bad numeric field '" + field +
                             "'");
  }
  return value;
}

}  // namespace

void emit_csv(const std::vector<SweepRecord>& records, const std::string& path) {
  write_file(path, csv_string(records));
}

std::vector<SweepRecord> parse_csv(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error(path + ": cannot open for reading");
  std::string line;
  if (!std::getline(file, line)) throw std::runtime_error(path + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw std::runtime_error(path + ": unexpected CSV header '" + line + "'");

  std::vector<SweepRecord> records;
  std::size_t line_number = 1;
  while (std::getline(file, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream stream(line);
    std::string field;
    while (std::getline(stream, field, ',')) fields.push_back(field);
    if (fields.size() != 11) {
      throw std::runtime_error(path + ":" + std::to_string(line_number) + ": expected 11 fields, got " +
                               std::to_string(fields.size()));
    }
    SweepRecord r;
    r.beta = parse_field_double(fields[0], path, line_number);
    r.g = parse_field_double(fields[1], path, line_number);
    const std::optional<CostKind> kind = CostKind::parse(fields[2]);
    if (!kind) {
      throw std::runtime_error(path + ":" + std::to_string(line_number) + ": unknown cost kind '" +
                               fields[2] + "'");
    }
    r.cost_kind = *kind;
    r.angles.gamma1 = parse_field_double(fields[3], path, line_number);
    r.angles.gamma2 = parse_field_double(fields[4], path, line_number);
    r.angles.alpha1 = parse_field_double(fields[5], path, line_number);
    r.angles.alpha2 = parse_field_double(fields[6], path, line_number);
    r.cost_value = parse_field_double(fields[7], path, line_number);
    r.fidelity = parse_field_double(fields[8], path, line_number);
    r.trace_distance = parse_field_double(fields[9], path, line_number);
    r.seed = std::strtoull(fields[10].c_str(), nullptr, 10);
    records.push_back(r);
  }
  return records;
}

std::string grid_csv_string(const std::vector<GridRecord>& records) {
  std::string out = "zeta,tau,xi_abs\n";
  for (const GridRecord& r : records) {
    out += format_double(r.zeta);
    out += ",";
    out += format_double(r.tau);
    out += ",";
    out += format_double(r.xi_abs);
    out += "\n";
  }
  return out;
}

void emit_grid_csv(const std::vector<GridRecord>& records, const std::string& path) {
  write_file(path, grid_csv_string(records));
}

std::string target_density_csv(const ModelParams& params) {
  const Matrix rho = density_of(target_tfd(params));
  std::string out = "row,col,re,im\n";
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      out += std::to_string(i);
      out += ",";
      out += std::to_string(j);
      out += ",";
      out += format_double(rho(i, j).real());
      out += ",";
      out += format_double(rho(i, j).imag());
      out += "\n";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// SVG rendering
// ---------------------------------------------------------------------------

namespace {

constexpr const char* kPalette[12] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                      "#ff7f0e", "#8c564b", "#17becf", "#e377c2",
                                      "#bcbd22", "#7f7f7f", "#393b79", "#ad494a"};

std::string fmt_coord(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

struct PanelGeometry {
  double x0, x1, y0, y1;  // plot box; y0 is the top edge
  double log_lo, log_hi;  // x-axis range in log10(beta)

  double x(double beta) const {
    return x0 + (std::log10(beta) - log_lo) / (log_hi - log_lo) * (x1 - x0);
  }
  double y(double value) const { return y1 - value * (y1 - y0); }
};

void render_panel(std::string& svg, const PanelGeometry& panel, const std::string& title) {
  svg += "<rect x='" + fmt_coord(panel.x0) + "' y='" + fmt_coord(panel.y0) + "' width='" +
         fmt_coord(panel.x1 - panel.x0) + "' height='" + fmt_coord(panel.y1 - panel.y0) +
         "' fill='none' stroke='#444444' stroke-width='1'/>\n";
  svg += "<text x='" + fmt_coord(panel.x0) + "' y='" + fmt_coord(panel.y0 - 8.0) +
         "' font-size='13' fill='#222222'>" + title + "</text>\n";
  // Decade ticks and vertical gridlines.
  for (int e = static_cast<int>(panel.log_lo); e <= static_cast<int>(panel.log_hi); ++e) {
    const double x = panel.x(std::pow(10.0, e));
    svg += "<line x1='" + fmt_coord(x) + "' y1='" + fmt_coord(panel.y0) + "' x2='" + fmt_coord(x) +
           "' y2='" + fmt_coord(panel.y1) + "' stroke='#dddddd' stroke-width='0.5'/>\n";
    svg += "<text x='" + fmt_coord(x) + "' y='" + fmt_coord(panel.y1 + 16.0) +
           "' font-size='11' fill='#222222' text-anchor='middle'>1e" + std::to_string(e) +
           "</text>\n";
  }
  // Horizontal ticks every 0.25.
  for (int k = 0; k <= 4; ++k) {
    const double v = 0.25 * k;
    const double y = panel.y(v);
    svg += "<line x1='" + fmt_coord(panel.x0) + "' y1='" + fmt_coord(y) + "' x2='" +
           fmt_coord(panel.x1) + "' y2='" + fmt_coord(y) +
           "' stroke='#dddddd' stroke-width='0.5'/>\n";
    svg += "<text x='" + fmt_coord(panel.x0 - 8.0) + "' y='" + fmt_coord(y + 4.0) +
           "' font-size='11' fill='#222222' text-anchor='end'>" + fmt_coord(v) + "</text>\n";
  }
  svg += "<text x='" + fmt_coord((panel.x0 + panel.x1) / 2.0) + "' y='" +
         fmt_coord(panel.y1 + 34.0) +
         "' font-size='12' fill='#222222' text-anchor='middle'>inverse temperature "
         "beta (log scale)</text>\n";
}

}  // namespace

std::string svg_string(const std::vector<SweepRecord>& records) {
  if (records.empty()) {
    throw std::runtime_error("svg_string: need at least one record");
  }

  struct Series {
    std::string label;
    std::vector<const SweepRecord*> points;
  };
  std::vector<Series> series;
  std::map<std::string, std::size_t> series_index;
  double beta_min = kInf, beta_max = -kInf;
  for (const SweepRecord& r : records) {
    const std::string label = r.cost_kind.name() + " g=" + format_double(r.g);
    const auto [it, inserted] = series_index.try_emplace(label, series.size());
    if (inserted) series.push_back({label, {}});
    series[it->second].points.push_back(&r);
    beta_min = std::min(beta_min, r.beta);
    beta_max = std::max(beta_max, r.beta);
  }
  for (Series& s : series) {
    std::sort(s.points.begin(), s.points.end(),
              [](const SweepRecord* a, const SweepRecord* b) { return a->beta < b->beta; });
  }

  double log_lo = std::floor(std::log10(beta_min));
  double log_hi = std::ceil(std::log10(beta_max));
  if (log_hi - log_lo < 1.0) {
    log_lo -= 1.0;
    log_hi += 1.0;
  }

  const double width = 760.0, height = 880.0;
  const double legend_rows = std::ceil(static_cast<double>(series.size()) / 3.0);
  const double top = 30.0 + legend_rows * 18.0;
  const PanelGeometry fidelity_panel{90.0, 710.0, top + 20.0, top + 330.0, log_lo, log_hi};
  const PanelGeometry distance_panel{90.0, 710.0, top + 410.0, top + 720.0, log_lo, log_hi};

  std::string svg;
  svg += "<svg xmlns='http://www.w3.org/2000/svg' viewBox='0 0 " + fmt_coord(width) + " " +
         fmt_coord(height) + "' font-family='Helvetica, Arial, sans-serif'>\n";
  svg += "<rect x='0' y='0' width='" + fmt_coord(width) + "' height='" + fmt_coord(height) +
         "' fill='#ffffff'/>\n";

  // Legend.
  for (std::size_t s = 0; s < series.size(); ++s) {
    const double lx = 90.0 + static_cast<double>(s % 3) * 210.0;
    const double ly = 24.0 + static_cast<double>(s / 3) * 18.0;
    const char* color = kPalette[s % 12];
    svg += "<line x1='" + fmt_coord(lx) + "' y1='" + fmt_coord(ly - 4.0) + "' x2='" +
           fmt_coord(lx + 24.0) + "' y2='" + fmt_coord(ly - 4.0) + "' stroke='" + color +
           "' stroke-width='2'/>\n";
    svg += "<text x='" + fmt_coord(lx + 30.0) + "' y='" + fmt_coord(ly) +
           "' font-size='12' fill='#222222'>" + series[s].label + "</text>\n";
  }

  render_panel(svg, fidelity_panel, "subsystem fidelity");
  render_panel(svg, distance_panel, "trace distance");

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % 12];
    for (const bool is_fidelity : {true, false}) {
      const PanelGeometry& panel = is_fidelity ? fidelity_panel : distance_panel;
      if (series[s].points.size() > 1) {
        std::string points;
        for (const SweepRecord* r : series[s].points) {
          points += fmt_coord(panel.x(r->beta)) + "," +
                    fmt_coord(panel.y(is_fidelity ? r->fidelity : r->trace_distance)) + " ";
        }
        svg += "<polyline fill='none' stroke='" + std::string(color) +
               "' stroke-width='1.5' points='" + points + "'/>\n";
      }
      for (const SweepRecord* r : series[s].points) {
        svg += "<circle cx='" + fmt_coord(panel.x(r->beta)) + "' cy='" +
               fmt_coord(panel.y(is_fidelity ? r->fidelity : r->trace_distance)) + "' r='3' fill='" +
               color + "'/>\n";
      }
    }
  }
  svg += "</svg>\n";
  return svg;
}

void emit_svg(const std::vector<SweepRecord>& records, const std::string& path) {
  write_file(path, svg_string(records));
}

}  // namespace tfdgen
