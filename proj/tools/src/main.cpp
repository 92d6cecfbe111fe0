#include <bit>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apqaoa/bench/aggregate.hpp"
#include "apqaoa/bench/experiment.hpp"
#include "apqaoa/bench/inspect.hpp"
#include "apqaoa/bench/records.hpp"
#include "apqaoa/dimacs.hpp"

namespace fs = std::filesystem;
using namespace apqaoa;
using namespace apqaoa::bench;

namespace {

constexpr const char* kOutDirEnv = "APQAOA_OUT_DIR";

// String-valued mirror of ExperimentConfig so every field round-trips
// through the config file.
struct CliConfig {
  std::string model = "Fs";
  int k = 3;
  std::vector<int> n = {10};
  std::string m_rule = "m_star";
  int m = 0;
  int suite_size = 100;
  std::uint64_t seed = 1;
  std::vector<std::string> strategies = {"ap"};
  std::string depth_rule = "n";
  int depth = 0;
  std::string normalization = "estimated";
  double c0 = kDefaultC0;
  double fd_step = 1e-6;
  double grad_tol = 1e-5;
  double f_tol = 1e-8;
  int max_iters = 200;
  std::string fd_scheme = "forward";
  bool raw_hamiltonian = false;
  bool ap_rescale_2pi = true;
  int tqa_samples = 100;
  std::string tqa_prior_dir;
  std::string out_dir;
  int jobs = 1;

  ExperimentConfig resolve() const {
    ExperimentConfig c;
    c.model = model_kind_from_string(model);
    c.k = k;
    c.n_values = n;
    c.m_rule = m_rule;
    c.m_fixed = m;
    c.suite_size = suite_size;
    c.base_seed = seed;
    c.strategies.clear();
    for (const std::string& s : strategies) c.strategies.push_back(strategy_from_string(s));
    c.depth_rule = depth_rule;
    c.depth_fixed = depth;
    c.normalization = normalization_from_string(normalization);
    c.c0 = c0;
    OptimizerConfig& o = c.strategy.optimizer;
    o.fd_step = fd_step;
    o.grad_tol = grad_tol;
    o.f_tol = f_tol;
    o.max_iters = max_iters;
    if (fd_scheme == "forward") {
      o.fd_scheme = FiniteDifference::Forward;
    } else if (fd_scheme == "central") {
      o.fd_scheme = FiniteDifference::Central;
    } else {
      throw std::invalid_argument("fd-scheme must be forward or central");
    }
    c.strategy.raw_hamiltonian = raw_hamiltonian;
    c.strategy.ap_rescale_2pi = ap_rescale_2pi;
    c.tqa_samples = tqa_samples;
    c.tqa_prior_dir = tqa_prior_dir;
    c.out_dir = out_dir;
    c.jobs = jobs;
    c.validate();
    return c;
  }
};

std::string default_out_dir() {
  const char* env = std::getenv(kOutDirEnv);
  return env && *env ? env : "results";
}

void add_experiment_options(CLI::App& app, CliConfig& c) {
  app.add_option("--model", c.model, "Random model: F, Fs or Ff")->capture_default_str();
  app.add_option("--k", c.k, "Literals per clause")->capture_default_str();
  app.add_option("--n", c.n, "Variable counts")->delimiter(',')->capture_default_str();
  app.add_option("--m-rule", c.m_rule, "Clause count rule: m_star or fixed")->capture_default_str();
  app.add_option("--m", c.m, "Clause count when m-rule is fixed")->capture_default_str();
  app.add_option("--suite-size", c.suite_size, "Instances per n")->capture_default_str();
  app.add_option("--seed", c.seed, "Base seed")->capture_default_str();
  app.add_option("--strategies", c.strategies, "qaa_init, qaa_setting, tqa, interp, fourier, ap")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--depth-rule", c.depth_rule, "Depth rule: n (p = n) or fixed")->capture_default_str();
  app.add_option("--depth", c.depth, "Depth when depth-rule is fixed")->capture_default_str();
  app.add_option("--normalization", c.normalization, "estimated or exact")->capture_default_str();
  app.add_option("--c0", c.c0, "Spread estimate constant")->capture_default_str();
  app.add_option("--fd-step", c.fd_step, "Relative finite-difference step")->capture_default_str();
  app.add_option("--grad-tol", c.grad_tol, "Gradient infinity-norm tolerance")->capture_default_str();
  app.add_option("--f-tol", c.f_tol, "Relative improvement tolerance")->capture_default_str();
  app.add_option("--max-iters", c.max_iters, "Iteration cap per optimization")->capture_default_str();
  app.add_option("--fd-scheme", c.fd_scheme, "forward or central")->capture_default_str();
  app.add_option("--raw-hamiltonian", c.raw_hamiltonian, "INTERP/FOURIER on unnormalized Hamiltonians")
      ->capture_default_str();
  app.add_option("--ap-rescale-2pi", c.ap_rescale_2pi, "Carry 2*pi into the AP rescale")->capture_default_str();
  app.add_option("--tqa-samples", c.tqa_samples, "Instances averaged for the TQA prior")->capture_default_str();
  app.add_option("--tqa-prior-dir", c.tqa_prior_dir, "Directory of precomputed TQA priors")->capture_default_str();
  app.add_option("--out-dir", c.out_dir, std::string("Output directory (default $") + kOutDirEnv + " or results)")
      ->capture_default_str();
  app.add_option("--jobs,-j", c.jobs, "Parallel runs")->capture_default_str();
}

void hint_depths(const ExperimentConfig& config) {
  bool ap = false;
  for (StrategyKind s : config.strategies) ap = ap || s == StrategyKind::ApBased;
  if (!ap) return;
  for (int n : config.n_values) {
    const int p = config.depth_for(n);
    if (!std::has_single_bit(static_cast<unsigned>(p))) {
      std::cerr << "hint: p = " << p << " is not a power of two; the AP stages resample unevenly and tend to cost more\n";
    }
  }
}

int cmd_gen(const ExperimentConfig& config) {
  const auto stems = write_suite(config, config.out_dir);
  std::cout << "wrote " << stems.size() << " instances under " << (fs::path(config.out_dir) / "instances").string()
            << '\n';
  return 0;
}

int cmd_spectrum(const std::string& path, const ExperimentConfig& config) {
  const CnfFormula formula = read_dimacs_file(path);
  std::cout << spectrum_summary(formula, config.c0).dump(2) << '\n';
  return 0;
}

int cmd_run(const ExperimentConfig& config, std::string output) {
  hint_depths(config);
  if (output.empty()) output = (fs::path(config.out_dir) / "results.jsonl").string();
  if (fs::path(output).has_parent_path()) fs::create_directories(fs::path(output).parent_path());
  std::ofstream out(output);
  if (!out) throw std::runtime_error("cannot write " + output);
  const SuiteSummary summary = run_suite(config, [&](const RunRecord& r) {
    out << to_json(r).dump() << '\n';
    out.flush();
    if (!r.ok()) {
      std::cerr << "run failed: n=" << r.n << " instance=" << r.instance << " strategy=" << r.strategy << ": "
                << r.error << '\n';
    }
  });
  std::cout << summary.runs << " runs, " << summary.failures << " failed -> " << output << '\n';
  return summary.failures == 0 ? 0 : 2;
}

struct ScanArgs {
  std::string instance;
  int index = 0;
  int p = 0;
  std::string mode = "probability";
  double theta_min = 0.0;
  double theta_max = std::numbers::pi / 2;
  int theta_points = 21;
  double rho_min = 0.0;
  double rho_max = 2.0 * std::numbers::sqrt2;
  int rho_points = 21;
  std::string output;
};

int cmd_scan(const ExperimentConfig& config, const ScanArgs& a) {
  CnfFormula formula = a.instance.empty() ? make_instance(config, config.n_values.front(), a.index).generated.formula
                                          : read_dimacs_file(a.instance);
  const int p = a.p > 0 ? a.p : config.depth_for(formula.num_vars());
  ScanMode mode;
  if (a.mode == "probability") {
    mode = ScanMode::Probability;
  } else if (a.mode == "expectation") {
    mode = ScanMode::Expectation;
  } else {
    throw std::invalid_argument("scan mode must be probability or expectation");
  }
  const GridScanResult scan = scan_linear(formula, p, GridAxis{a.theta_min, a.theta_max, a.theta_points},
                                          GridAxis{a.rho_min, a.rho_max, a.rho_points}, mode, config.normalization,
                                          config.c0);
  std::string output = a.output;
  if (output.empty()) {
    output = (fs::path(config.out_dir) / ("scan_n" + std::to_string(formula.num_vars()) + "_p" + std::to_string(p) +
                                          "_" + a.mode + ".csv"))
                 .string();
  }
  if (fs::path(output).has_parent_path()) fs::create_directories(fs::path(output).parent_path());
  std::ofstream out(output);
  if (!out) throw std::runtime_error("cannot write " + output);
  write_scan_csv(out, scan);
  std::cout << "best " << a.mode << ' ' << scan.best_value << " at theta=" << scan.best_theta()
            << " rho=" << scan.best_rho() << " -> " << output << '\n';
  return 0;
}

int cmd_precompute(ExperimentConfig config) {
  const std::string dir =
      config.tqa_prior_dir.empty() ? (fs::path(config.out_dir) / "priors").string() : config.tqa_prior_dir;
  fs::create_directories(dir);
  for (int n : config.n_values) {
    const TqaPrior prior = compute_tqa_prior(config, n);
    const std::string path = tqa_prior_path(dir, n);
    write_tqa_prior(path, config, n, prior);
    std::cout << "n=" << n << " theta_bar=" << prior.theta_bar << " rho_bar=" << prior.rho_bar << " ("
              << prior.samples_used << " samples, " << prior.evals << " evals) -> " << path << '\n';
  }
  return 0;
}

int cmd_aggregate(const std::vector<std::string>& inputs, std::string out_dir, const ExperimentConfig& config) {
  std::vector<RunRecord> records;
  for (const std::string& path : inputs) {
    auto part = read_records_file(path);
    records.insert(records.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  if (out_dir.empty()) out_dir = (fs::path(config.out_dir) / "figures").string();
  write_figure_data(out_dir, records);
  write_aggregate_csv(std::cout, aggregate(records));
  std::cerr << "figure data -> " << out_dir << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameter setting for QAOA on random k-SAT"};
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.require_subcommand(1);

  CliConfig cli;
  add_experiment_options(app, cli);

  auto* gen = app.add_subcommand("gen", "Write the instance suite as DIMACS files with metadata");
  auto* spectrum = app.add_subcommand("spectrum", "Summarize the spectrum of a DIMACS instance");
  std::string spectrum_file;
  spectrum->add_option("file", spectrum_file, "DIMACS CNF file")->required()->check(CLI::ExistingFile);

  auto* run = app.add_subcommand("run", "Run every strategy on every instance");
  std::string run_output;
  run->add_option("--output,-o", run_output, "Results file (default <out-dir>/results.jsonl)");

  auto* scan = app.add_subcommand("scan", "Linear-schedule landscape over (theta, rho)");
  ScanArgs scan_args;
  scan->add_option("--instance", scan_args.instance, "DIMACS file (default: suite instance at the first n)")
      ->check(CLI::ExistingFile);
  scan->add_option("--index", scan_args.index, "Suite index when no file is given")->capture_default_str();
  scan->add_option("--p", scan_args.p, "Depth (default from the depth rule)");
  scan->add_option("--mode", scan_args.mode, "probability or expectation")->capture_default_str();
  scan->add_option("--theta-min", scan_args.theta_min)->capture_default_str();
  scan->add_option("--theta-max", scan_args.theta_max)->capture_default_str();
  scan->add_option("--theta-points", scan_args.theta_points)->capture_default_str();
  scan->add_option("--rho-min", scan_args.rho_min)->capture_default_str();
  scan->add_option("--rho-max", scan_args.rho_max)->capture_default_str();
  scan->add_option("--rho-points", scan_args.rho_points)->capture_default_str();
  scan->add_option("--output,-o", scan_args.output, "CSV file");

  auto* precompute = app.add_subcommand("precompute-tqa", "Average linear-schedule optima into TQA priors");

  auto* agg = app.add_subcommand("aggregate", "Summaries and figure data from results files");
  std::vector<std::string> agg_inputs;
  std::string agg_out;
  agg->add_option("results", agg_inputs, "JSON-lines results files")->required()->check(CLI::ExistingFile);
  agg->add_option("--output-dir", agg_out, "Directory for CSV exports (default <out-dir>/figures)");

  auto* config = app.add_subcommand("config", "Show the effective configuration");
  bool dump = false;
  config->add_flag("--dump", dump, "Print the configuration file with defaults");

  for (CLI::App* sub : {gen, spectrum, run, scan, precompute, agg, config}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (cli.out_dir.empty()) cli.out_dir = default_out_dir();
    if (*config) {
      if (!dump) {
        std::cerr << config->help();
        return 1;
      }
      // A fresh app captures the effective values as defaults, so the dump
      // reflects the config file and flags without the subcommand options.
      CLI::App dumper{app.get_description()};
      add_experiment_options(dumper, cli);
      std::cout << dumper.config_to_str(true, true);
      return 0;
    }
    const ExperimentConfig exp = cli.resolve();
    if (*gen) return cmd_gen(exp);
    if (*spectrum) return cmd_spectrum(spectrum_file, exp);
    if (*run) return cmd_run(exp, run_output);
    if (*scan) return cmd_scan(exp, scan_args);
    if (*precompute) return cmd_precompute(exp);
    if (*agg) return cmd_aggregate(agg_inputs, agg_out, exp);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
