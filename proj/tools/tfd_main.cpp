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

// tfd: command-line harness around the tfdgen library.  Subcommands cover
// the single-point workflows (target, optimize), the three sweep studies
// (sweep-beta, sweep-zeta-tau, sweep-g), the oracle validation suite
// (validate), and CSV-to-SVG rendering (plot).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tfdgen/bench.hpp"

namespace {

constexpr const char* kFooter =
    "Conventions:\n"
    "  All beta values are inverse temperatures in natural units; the built-in\n"
    "  sweep grid spans beta = 1e-3 .. 1e3 (55 points) and never evaluates the\n"
    "  infinite-temperature point beta = 0.\n"
    "  The relative-error reduction quoted for engineered costs is the ratio of\n"
    "  subsystem infidelities (1 - F) between two optimized states at equal beta.\n"
    "  The configuration file is flat `key = value` text mirroring the global\n"
    "  flags (e.g. `seed = 7`); explicit command-line flags take precedence.\n";

struct CliOptions {
  double g = 1.0;
  double beta = 1.0;
  std::string cost = "free-energy";
  double zeta = tfdgen::kDefaultZeta;
  double tau = tfdgen::kDefaultTau;
  std::uint64_t seed = 1;
  int pop = 40;
  int max_gen = 1000;
  int workers = 0;
  std::string out;

  double zeta_min = tfdgen::kZetaMin;
  double zeta_max = tfdgen::kZetaMax;
  double zeta_step = tfdgen::kZetaStep;
  double tau_min = tfdgen::kTauMin;
  double tau_max = tfdgen::kTauMax;
  double tau_step = tfdgen::kTauStep;
  bool coarse = false;
  std::string in;
};

tfdgen::CostKind cost_from(const CliOptions& opt) {
  const std::optional<tfdgen::CostKind> kind = tfdgen::CostKind::parse(opt.cost);
  if (!kind) {
    throw CLI::ValidationError("--cost", "unknown cost kind '" + opt.cost + "'");
  }
  if (kind->family == tfdgen::CostFamily::C1) {
    return tfdgen::CostKind::c1(opt.zeta, opt.tau);
  }
  return *kind;
}

tfdgen::DEConfig de_from(const CliOptions& opt) {
  tfdgen::DEConfig config;
  config.population_size = opt.pop;
  config.max_generations = opt.max_gen;
  config.seed = opt.seed;
  return config;
}

void write_or_print(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error(out_path + ": cannot open for writing");
  file << content;
  if (!file.flush()) throw std::runtime_error(out_path + ": write failed");
}

int run_target(const CliOptions& opt) {
  write_or_print(tfdgen::target_density_csv({opt.g, opt.beta}), opt.out);
  return 0;
}

int run_optimize(const CliOptions& opt) {
  const tfdgen::CostKind cost = cost_from(opt);
  const tfdgen::ModelParams params{opt.g, opt.beta};
  const tfdgen::OptimizationResult result = tfdgen::optimize_tfd(cost, params, de_from(opt));
  const tfdgen::VariationalAngles angles = tfdgen::angles_from(cost, result.best_params);
  const tfdgen::Vector generated = tfdgen::evolve_ansatz(angles);
  const tfdgen::ProximityPair proximity =
      tfdgen::subsystem_proximity(tfdgen::target_tfd(params), generated);

  using tfdgen::format_double;
  std::cout << "cost           " << cost.name() << "\n"
            << "g              " << format_double(params.g) << "\n"
            << "beta           " << format_double(params.beta) << "\n"
            << "gamma1         " << format_double(angles.gamma1) << "\n"
            << "gamma2         " << format_double(angles.gamma2) << "\n"
            << "alpha1         " << format_double(angles.alpha1) << "\n"
            << "alpha2         " << format_double(angles.alpha2) << "\n"
            << "cost_value     " << format_double(result.best_cost) << "\n"
            << "fidelity       " << format_double(proximity.fidelity) << "\n"
            << "trace_distance " << format_double(proximity.trace_distance) << "\n"
            << "generations    " << result.generations_run << "\n"
            << "evaluations    " << result.evaluations << "\n"
            << "converged      " << (result.converged ? "true" : "false") << "\n";

  if (!opt.out.empty()) {
    tfdgen::SweepRecord record;
    record.beta = params.beta;
    record.g = params.g;
    record.cost_kind = cost;
    record.angles = angles;
    record.cost_value = result.best_cost;
    record.fidelity = proximity.fidelity;
    record.trace_distance = proximity.trace_distance;
    record.seed = opt.seed;
    tfdgen::emit_csv({record}, opt.out);
  }
  return 0;
}

int run_sweep_beta(const CliOptions& opt) {
  const tfdgen::CostKind cost = cost_from(opt);
  const std::vector<tfdgen::SweepRecord> records =
      tfdgen::sweep_beta(cost, opt.g, tfdgen::beta_grid(), de_from(opt), opt.workers);
  const std::string path = opt.out.empty() ? "sweep_beta.csv" : opt.out;
  tfdgen::emit_csv(records, path);
  std::cout << records.size() << " records (" << cost.name() << ", g=" << tfdgen::format_double(opt.g)
            << ") -> " << path << "\n";
  return 0;
}

int run_sweep_zeta_tau(const CliOptions& opt) {
  const double zeta_step = opt.coarse ? 0.1 : opt.zeta_step;
  const double tau_step = opt.coarse ? 0.1 : opt.tau_step;
  const std::vector<double> zetas = tfdgen::linear_range(opt.zeta_min, opt.zeta_max, zeta_step);
  const std::vector<double> taus = tfdgen::linear_range(opt.tau_min, opt.tau_max, tau_step);
  const tfdgen::ZetaTauSweep sweep =
      tfdgen::sweep_zeta_tau(zetas, taus, tfdgen::beta_grid(), de_from(opt), opt.workers);
  const std::string path = opt.out.empty() ? "sweep_zeta_tau.csv" : opt.out;
  tfdgen::emit_grid_csv(sweep.records, path);
  std::cout << sweep.records.size() << " grid points -> " << path << "\n"
            << "argmin zeta=" << tfdgen::format_double(sweep.argmin_zeta)
            << " tau=" << tfdgen::format_double(sweep.argmin_tau) << "\n";
  return 0;
}

int run_sweep_g(const CliOptions& opt, bool cost_given) {
  std::vector<tfdgen::CostKind> costs;
  if (cost_given) {
    costs.push_back(cost_from(opt));
  } else {
    costs = {tfdgen::CostKind::infidelity(), tfdgen::CostKind::free_energy(),
             tfdgen::CostKind::c0(), tfdgen::CostKind::c1(opt.zeta, opt.tau),
             tfdgen::CostKind::c2()};
  }
  const std::vector<tfdgen::SweepRecord> records = tfdgen::sweep_g(
      costs, tfdgen::default_g_values(), tfdgen::beta_grid(), de_from(opt), opt.workers);
  const std::string path = opt.out.empty() ? "sweep_g.csv" : opt.out;
  tfdgen::emit_csv(records, path);
  std::cout << records.size() << " records (" << costs.size() << " costs x "
            << tfdgen::default_g_values().size() << " g values) -> " << path << "\n";
  return 0;
}

int run_validate(const CliOptions& opt) {
  const tfdgen::ValidationReport report = tfdgen::validate_oracles(opt.seed);
  tfdgen::print_report(report, std::cout);
  return report.all_passed() ? 0 : 1;
}

int run_plot(const CliOptions& opt) {
  const std::vector<tfdgen::SweepRecord> records = tfdgen::parse_csv(opt.in);
  const std::string path = opt.out.empty() ? "sweep.svg" : opt.out;
  tfdgen::emit_svg(records, path);
  std::cout << records.size() << " records -> " << path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tfd: variational thermofield-double state preparation benchmark"};
  app.footer(kFooter);
  app.require_subcommand(1);

  CliOptions opt;
  app.add_option("--g", opt.g, "transverse field strength")->capture_default_str();
  app.add_option("--beta", opt.beta, "inverse temperature")->capture_default_str();
  app.add_option("--cost", opt.cost, "cost function: infidelity|free-energy|c0|c1|c2")
      ->capture_default_str();
  app.add_option("--zeta", opt.zeta, "c1 shape parameter zeta")->capture_default_str();
  app.add_option("--tau", opt.tau, "c1 shape parameter tau (temperature exponent)")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "master random seed")->capture_default_str();
  app.add_option("--pop", opt.pop, "optimizer population size")->capture_default_str();
  app.add_option("--max-gen", opt.max_gen, "optimizer generation cap")->capture_default_str();
  app.add_option("--out", opt.out, "output path (default: subcommand-specific)");
  app.add_option("--workers", opt.workers, "worker threads for sweeps (0 = all cores)")
      ->capture_default_str();
  app.set_config("--config", "", "flat key=value configuration file");

  CLI::App* target = app.add_subcommand("target", "dump the exact target density matrix as CSV");
  CLI::App* optimize = app.add_subcommand("optimize", "optimize a single (cost, g, beta) point");
  CLI::App* sweep_beta_cmd =
      app.add_subcommand("sweep-beta", "optimize one cost across the inverse-temperature grid");
  CLI::App* sweep_zt = app.add_subcommand(
      "sweep-zeta-tau", "map the c1 shape-parameter grid by aggregate expectation error");
  CLI::App* sweep_g_cmd = app.add_subcommand(
      "sweep-g", "compare cost functions across transverse field strengths");
  CLI::App* validate = app.add_subcommand("validate", "run the oracle cross-check suite");
  CLI::App* plot = app.add_subcommand("plot", "render a sweep CSV as a two-panel SVG");

  for (CLI::App* sub : {target, optimize, sweep_beta_cmd, sweep_zt, sweep_g_cmd, validate, plot}) {
    sub->fallthrough();
  }

  sweep_zt->add_option("--zeta-min", opt.zeta_min, "grid lower zeta")->capture_default_str();
  sweep_zt->add_option("--zeta-max", opt.zeta_max, "grid upper zeta")->capture_default_str();
  sweep_zt->add_option("--zeta-step", opt.zeta_step, "grid zeta step")->capture_default_str();
  sweep_zt->add_option("--tau-min", opt.tau_min, "grid lower tau")->capture_default_str();
  sweep_zt->add_option("--tau-max", opt.tau_max, "grid upper tau")->capture_default_str();
  sweep_zt->add_option("--tau-step", opt.tau_step, "grid tau step")->capture_default_str();
  sweep_zt->add_flag("--coarse", opt.coarse, "6x6 pre-check grid (both steps 0.1)");
  plot->add_option("--in", opt.in, "input sweep CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // 0 covers --help/--version
  }

  try {
    if (target->parsed()) return run_target(opt);
    if (optimize->parsed()) return run_optimize(opt);
    if (sweep_beta_cmd->parsed()) return run_sweep_beta(opt);
    if (sweep_zt->parsed()) return run_sweep_zeta_tau(opt);
    if (sweep_g_cmd->parsed()) return run_sweep_g(opt, app.count("--cost") > 0);
    if (validate->parsed()) return run_validate(opt);
    if (plot->parsed()) return run_plot(opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const tfdgen::InvalidBeta& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const tfdgen::InvalidConfig& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
