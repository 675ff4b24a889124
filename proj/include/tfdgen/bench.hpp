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

#ifndef TFDGEN_BENCH_HPP
#define TFDGEN_BENCH_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "tfdgen/deopt.hpp"
#include "tfdgen/metrics.hpp"

// ============================================================================
// bench: the sweep harness behind the CLI.  Runs the optimizer across
// inverse-temperature grids, the (zeta, tau) shape-parameter grid, and the
// field-strength sweep; validates the library against its independent
// oracles; reads and writes the flat CSV/SVG artifacts.
//
// Reproducibility: every sweep point derives its own seed from the master
// seed (DEConfig::seed) and the point's grid indices, so results are
// identical whether points run sequentially or on a worker pool, and
// re-runs are byte-identical.
// ============================================================================

namespace tfdgen {

// ---------------------------------------------------------------------------
// Grids
// ---------------------------------------------------------------------------

// The 55 inverse temperatures {1..9} x 10^{-3..2} plus 10^3, ascending.
// Values are inverse temperatures (natural units); the harness never
// evaluates the beta = 0 infinite-temperature point.
std::vector<double> beta_grid();

// Default field strengths of the g sweep.
std::vector<double> default_g_values();

// Default shape-parameter window and steps of the zeta-tau grid; the step
// choice places (kDefaultZeta, kDefaultTau) on the grid.
inline constexpr double kZetaMin = 1.4;
inline constexpr double kZetaMax = 1.9;
inline constexpr double kZetaStep = 0.025;
inline constexpr double kTauMin = 1.2;
inline constexpr double kTauMax = 1.7;
inline constexpr double kTauStep = 0.02;

// {lo, lo+step, ...} up to hi inclusive (within half a step of roundoff).
std::vector<double> linear_range(double lo, double hi, double step);

// ---------------------------------------------------------------------------
// Records
// ---------------------------------------------------------------------------

// One optimized sweep point.  A failed point (an optimizer or cost error,
// which no in-contract input produces) is flagged by cost_value = +infinity
// with zeroed angles.
struct SweepRecord {
  double beta = 0.0;
  double g = 0.0;
  CostKind cost_kind;
  VariationalAngles angles;
  double cost_value = 0.0;
  double fidelity = 0.0;
  double trace_distance = 0.0;
  std::uint64_t seed = 0;
};

// One zeta-tau grid point with its aggregate expectation disagreement.
struct GridRecord {
  double zeta = 0.0;
  double tau = 0.0;
  double xi_abs = 0.0;
};

// Full zeta-tau sweep output: all grid records (zeta-major, then tau) plus
// the location of the smallest xi_abs (first in scan order on ties).
struct ZetaTauSweep {
  std::vector<GridRecord> records;
  double argmin_zeta = 0.0;
  double argmin_tau = 0.0;
};

// ---------------------------------------------------------------------------
// Seed derivation and the worker pool
// ---------------------------------------------------------------------------

// Child seed for one sweep point, splitmix64-mixed from the master seed and
// the point's grid coordinates.  Deterministic and order-independent.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t beta_index, std::uint64_t g_index,
                          std::uint64_t cost_id, std::uint64_t extra = 0);

// Stable numeric id of a cost family (seed-derivation input).
std::uint64_t cost_id(const CostKind& kind);

// Runs body(0..count-1) on `workers` threads (0 = hardware concurrency).
// Jobs must be independent; the first exception, if any, is rethrown after
// all threads join.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body);

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

// One optimizer run per beta at fixed g; records in beta order.
// de.seed acts as the master seed.
std::vector<SweepRecord> sweep_beta(const CostKind& cost, double g,
                                    const std::vector<double>& betas, const DEConfig& de,
                                    int workers = 0);

// The full shape-parameter study at g=1: for every (zeta, tau) pair, the c1
// cost is optimized at every beta and the aggregate xi_metric over the
// (ideal, generated) pairs is recorded.
ZetaTauSweep sweep_zeta_tau(const std::vector<double>& zetas, const std::vector<double>& taus,
                            const std::vector<double>& betas, const DEConfig& de,
                            int workers = 0);

// Cartesian sweep over cost kinds, field strengths, and betas; records
// ordered cost-major, then g, then beta.  With a single cost and
// g_values = {1} this reduces exactly to sweep_beta's output.
std::vector<SweepRecord> sweep_g(const std::vector<CostKind>& costs,
                                 const std::vector<double>& g_values,
                                 const std::vector<double>& betas, const DEConfig& de,
                                 int workers = 0);

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// Runs every oracle cross-check: thermal reduction of the target state,
// closed-form elements against brute-force density matrices (both sides),
// the density-matrix equality patterns, the three-correlator energy
// identity, dual-path cost equality, the Fuchs-van de Graaf sandwich on
// random pairs and on a mini-sweep's outputs, and the optimizer benchmarks
// (determinism, sphere, Rastrigin).
ValidationReport validate_oracles(std::uint64_t seed = 1);

// One line per check: [PASS]/[FAIL], name, max error, tolerance.
void print_report(const ValidationReport& report, std::ostream& out);

// ---------------------------------------------------------------------------
// CSV / SVG artifacts
// ---------------------------------------------------------------------------

// Exact header of sweep-record CSVs.
inline constexpr const char* kCsvHeader =
    "beta,g,cost_kind,gamma1,gamma2,alpha1,alpha2,cost_value,fidelity,trace_distance,seed";

// Canonical float formatting used in all emitted artifacts: 12 significant
// digits.  Emitted text is a fixed point of parse -> re-format, so parsing
// a CSV and re-emitting it reproduces the bytes exactly.
std::string format_double(double value);

std::string csv_string(const std::vector<SweepRecord>& records);
void emit_csv(const std::vector<SweepRecord>& records, const std::string& path);
std::vector<SweepRecord> parse_csv(const std::string& path);

// Grid CSV (header: zeta,tau,xi_abs).
std::string grid_csv_string(const std::vector<GridRecord>& records);
void emit_grid_csv(const std::vector<GridRecord>& records, const std::string& path);

// Self-contained two-panel SVG (fidelity and trace distance against
// log-scale beta), one series per (cost, g) pair.  Requires at least one
// record.
std::string svg_string(const std::vector<SweepRecord>& records);
void emit_svg(const std::vector<SweepRecord>& records, const std::string& path);

// 16x16 density matrix of the exact target as long-format CSV
// (header row,col,re,im; one line per entry); the `target` subcommand's
// payload.
std::string target_density_csv(const ModelParams& params);

}  // namespace tfdgen

#endif  // TFDGEN_BENCH_HPP
