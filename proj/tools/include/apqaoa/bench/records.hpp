#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "apqaoa/bench/experiment.hpp"

namespace apqaoa::bench {

/// One (instance, strategy) run as written to the results file.
struct RunRecord {
  int schema_version = kSchemaVersion;
  std::string artifact_version;
  std::string config_hash;

  int n = 0;
  int m = 0;
  int k = 0;
  int instance = 0;
  std::uint64_t seed = 0;
  std::string model;
  bool satisfiable = false;
  std::uint64_t interpretations = 0;

  std::string strategy;
  int p = 0;
  std::string normalization;
  double G_E = 0.0;
  std::optional<double> G_0;

  /// "ok" or "error".
  std::string status = "ok";
  std::string error;

  double expectation = 0.0;
  double target_prob = 0.0;
  double baseline_prob = 0.0;
  std::uint64_t cost_evals = 0;
  double wall_time_s = 0.0;
  bool converged = true;
  std::string native_space;
  std::vector<double> native_params;
  std::vector<double> gamma;
  std::vector<double> beta;
  std::vector<StageReport> stages;

  bool ok() const { return status == "ok"; }
};

nlohmann::json to_json(const RunRecord& record);
RunRecord record_from_json(const nlohmann::json& j);

/// Reads a JSON-lines results file; blank lines are skipped.
std::vector<RunRecord> read_records(std::istream& in);
std::vector<RunRecord> read_records_file(const std::string& path);

/// Index of a run in canonical order: (n, instance, strategy position).
struct RunKey {
  int n = 0;
  int instance = 0;
  int strategy_slot = 0;
};

/// Canonical ordering of every run in the experiment.
std::vector<RunKey> canonical_runs(const ExperimentConfig& config);

/// Executes one run. Never throws: failures become records with
/// status "error".
RunRecord execute_run(const ExperimentConfig& config, const SuiteInstance& instance, StrategyKind strategy,
                      const std::optional<TqaPrior>& prior);

struct SuiteSummary {
  std::size_t runs = 0;
  std::size_t failures = 0;
};

/// Runs the whole suite with up to config.jobs worker threads. Records are
/// handed to `sink` one at a time, in canonical order, from a single thread
/// at a time.
SuiteSummary run_suite(const ExperimentConfig& config, const std::function<void(const RunRecord&)>& sink);

/// TQA prior for size n: loaded from config.tqa_prior_dir when a matching
/// file exists, computed otherwise.
TqaPrior tqa_prior_for(const ExperimentConfig& config, int n);
TqaPrior compute_tqa_prior(const ExperimentConfig& config, int n);
std::string tqa_prior_path(const std::string& dir, int n);
void write_tqa_prior(const std::string& path, const ExperimentConfig& config, int n, const TqaPrior& prior);
std::optional<TqaPrior> read_tqa_prior(const std::string& path, const ExperimentConfig& config, int n);

}  // namespace apqaoa::bench
