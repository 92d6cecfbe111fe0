#include "apqaoa/bench/experiment.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace apqaoa::bench {

std::string artifact_version() { return "apqaoa-0.1.0"; }

namespace {

constexpr std::uint64_t kTqaStream = 0x7471612d7072696full;

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string normalization_name(NormalizationMode mode) {
  return mode == NormalizationMode::Exact ? "exact" : "estimated";
}

NormalizationMode normalization_from_string(const std::string& name) {
  if (name == "estimated") return NormalizationMode::Estimated;
  if (name == "exact") return NormalizationMode::Exact;
  throw std::invalid_argument("unknown normalization '" + name + "' (expected estimated or exact)");
}

void ExperimentConfig::validate() const {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (n_values.empty()) throw std::invalid_argument("at least one n is required");
  for (int n : n_values) {
    if (n < k || n > kMaxVariables) {
      throw std::invalid_argument("n = " + std::to_string(n) + " outside [k, " + std::to_string(kMaxVariables) + "]");
    }
  }
  if (m_rule != "m_star" && m_rule != "fixed") throw std::invalid_argument("m_rule must be m_star or fixed");
  if (m_rule == "fixed" && m_fixed < 0) throw std::invalid_argument("m must be >= 0");
  if (suite_size < 1) throw std::invalid_argument("suite size must be >= 1");
  if (strategies.empty()) throw std::invalid_argument("at least one strategy is required");
  if (depth_rule != "n" && depth_rule != "fixed") throw std::invalid_argument("depth_rule must be n or fixed");
  if (depth_rule == "fixed" && depth_fixed < 1) throw std::invalid_argument("fixed depth must be >= 1");
  if (!(c0 > 0)) throw std::invalid_argument("c0 must be positive");
  if (tqa_samples < 1) throw std::invalid_argument("tqa samples must be >= 1");
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  strategy.optimizer.validate();
}

int ExperimentConfig::clauses_for(int n) const { return m_rule == "fixed" ? m_fixed : m_star(n); }

int ExperimentConfig::depth_for(int n) const { return depth_rule == "fixed" ? depth_fixed : n; }

ModelSpec ExperimentConfig::model_for(int n, std::uint64_t seed) const {
  ModelSpec spec;
  spec.kind = model;
  spec.n = n;
  spec.m = clauses_for(n);
  spec.k = k;
  spec.seed = seed;
  return spec;
}

std::string canonical_string(const ExperimentConfig& c) {
  const OptimizerConfig& o = c.strategy.optimizer;
  std::ostringstream s;
  s << "model=" << to_string(c.model) << ";k=" << c.k << ";n=" << join_ints(c.n_values) << ";m_rule=" << c.m_rule;
  if (c.m_rule == "fixed") s << ";m=" << c.m_fixed;
  s << ";suite=" << c.suite_size << ";seed=" << c.base_seed << ";strategies=";
  for (std::size_t i = 0; i < c.strategies.size(); ++i) s << (i ? "," : "") << to_string(c.strategies[i]);
  s << ";depth=" << c.depth_rule;
  if (c.depth_rule == "fixed") s << ":" << c.depth_fixed;
  s << ";norm=" << normalization_name(c.normalization) << ";c0=" << fmt_double(c.c0)
    << ";fd_step=" << fmt_double(o.fd_step) << ";grad_tol=" << fmt_double(o.grad_tol)
    << ";f_tol=" << fmt_double(o.f_tol) << ";max_iters=" << o.max_iters
    << ";fd=" << (o.fd_scheme == FiniteDifference::Central ? "central" : "forward")
    << ";c1=" << fmt_double(o.line_search.sufficient_decrease) << ";shrink=" << fmt_double(o.line_search.shrink)
    << ";backtracks=" << o.line_search.max_backtracks << ";raw=" << c.strategy.raw_hamiltonian
    << ";rescale_2pi=" << c.strategy.ap_rescale_2pi << ";tqa_samples=" << c.tqa_samples;
  return s.str();
}

std::string config_hash(const ExperimentConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : canonical_string(config)) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t instance_seed(std::uint64_t base_seed, int n, int index) {
  return derive_seed(derive_seed(base_seed, static_cast<std::uint64_t>(n)), static_cast<std::uint64_t>(index));
}

std::uint64_t tqa_template_seed(std::uint64_t base_seed, int n) {
  return derive_seed(derive_seed(base_seed ^ kTqaStream, static_cast<std::uint64_t>(n)), 0);
}

std::uint64_t strategy_seed(std::uint64_t inst_seed, StrategyKind kind) {
  return derive_seed(inst_seed, 1 + static_cast<std::uint64_t>(kind));
}

SuiteInstance make_instance(const ExperimentConfig& config, int n, int index) {
  const ModelSpec spec = config.model_for(n, instance_seed(config.base_seed, n, index));
  return SuiteInstance{n, index, spec, generate(spec)};
}

}  // namespace apqaoa::bench
