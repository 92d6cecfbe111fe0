#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apqaoa/random_models.hpp"
#include "apqaoa/spectrum.hpp"
#include "apqaoa/strategies.hpp"

namespace apqaoa::bench {

inline constexpr int kSchemaVersion = 1;
std::string artifact_version();

/// Everything that determines the contents of a results file.
struct ExperimentConfig {
  ModelKind model = ModelKind::Satisfiable;
  int k = 3;
  std::vector<int> n_values = {10};
  /// "m_star" or "fixed".
  std::string m_rule = "m_star";
  int m_fixed = 0;
  int suite_size = 100;
  std::uint64_t base_seed = 1;
  std::vector<StrategyKind> strategies = {StrategyKind::ApBased};
  /// "n" (p = n) or "fixed" (p = depth_fixed).
  std::string depth_rule = "n";
  int depth_fixed = 0;
  NormalizationMode normalization = NormalizationMode::Estimated;
  double c0 = kDefaultC0;
  StrategyConfig strategy;
  int tqa_samples = 100;
  /// Directory holding precomputed TQA priors; empty to compute on demand.
  std::string tqa_prior_dir;
  std::string out_dir = "results";
  int jobs = 1;

  void validate() const;
  int clauses_for(int n) const;
  int depth_for(int n) const;
  ModelSpec model_for(int n, std::uint64_t seed) const;
};

/// FNV-1a 64 over the canonical serialization of the outcome-relevant fields
/// (output directory and job count excluded), as 16 hex digits.
std::string config_hash(const ExperimentConfig& config);

/// Canonical single-line serialization used for hashing and provenance.
std::string canonical_string(const ExperimentConfig& config);

std::uint64_t instance_seed(std::uint64_t base_seed, int n, int index);
/// Seed of the instance template used for TQA pre-computation at size n.
/// Disjoint from the suite streams.
std::uint64_t tqa_template_seed(std::uint64_t base_seed, int n);
/// Seed for a stochastic strategy's initial point on one instance.
std::uint64_t strategy_seed(std::uint64_t instance_seed, StrategyKind kind);

struct SuiteInstance {
  int n;
  int index;
  ModelSpec spec;
  GenerationResult generated;
};

SuiteInstance make_instance(const ExperimentConfig& config, int n, int index);

std::string normalization_name(NormalizationMode mode);
NormalizationMode normalization_from_string(const std::string& name);

}  // namespace apqaoa::bench
