// Acceptance gate. Usage: apqaoa_acceptance [--out DIR] [criterion ...]
// Prints one "criterion N: PASS|FAIL" line per criterion and exits non-zero
// if any selected criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "apqaoa/bench/experiment.hpp"
#include "apqaoa/bench/records.hpp"
#include "apqaoa/random_models.hpp"
#include "apqaoa/schedules.hpp"
#include "apqaoa/simulator.hpp"
#include "apqaoa/spectrum.hpp"
#include "apqaoa/strategies.hpp"
#include "oracles.hpp"

namespace {

using namespace apqaoa;
namespace bench = apqaoa::bench;
constexpr double pi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string out_dir;

double mean(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Runs a suite through the benchmark harness and groups successful records
// by (n, strategy). Errors are counted and fail the criterion.
struct SuiteResult {
  std::map<std::pair<int, std::string>, std::vector<bench::RunRecord>> runs;
  std::size_t failures = 0;

  const std::vector<bench::RunRecord>& at(int n, const std::string& strategy) const {
    static const std::vector<bench::RunRecord> none;
    const auto it = runs.find({n, strategy});
    return it == runs.end() ? none : it->second;
  }

  std::vector<double> costs(int n, const std::string& strategy) const {
    std::vector<double> out;
    for (const auto& r : at(n, strategy)) out.push_back(static_cast<double>(r.cost_evals));
    return out;
  }

  std::vector<double> probs(int n, const std::string& strategy) const {
    std::vector<double> out;
    for (const auto& r : at(n, strategy)) out.push_back(r.target_prob);
    return out;
  }
};

SuiteResult run(const bench::ExperimentConfig& config, const std::string& tag) {
  SuiteResult result;
  std::ofstream sink;
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    sink.open(std::filesystem::path(out_dir) / (tag + ".jsonl"));
  }
  const bench::SuiteSummary summary = bench::run_suite(config, [&](const bench::RunRecord& r) {
    if (sink.is_open()) sink << bench::to_json(r).dump() << '\n' << std::flush;
    if (r.ok()) result.runs[{r.n, r.strategy}].push_back(r);
  });
  result.failures = summary.failures;
  return result;
}

bench::ExperimentConfig suite_config(std::vector<int> ns, int size, std::uint64_t seed,
                                     std::vector<StrategyKind> strategies) {
  bench::ExperimentConfig c;
  c.model = ModelKind::Satisfiable;
  c.n_values = std::move(ns);
  c.suite_size = size;
  c.base_seed = seed;
  c.strategies = std::move(strategies);
  c.jobs = 1;
  return c;
}

Outcome criterion1() {
  Outcome o;
  Rng rng(0xA11CE);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_below(4));
    const int k = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(std::min(n, 3))));
    const int m = static_cast<int>(rng.uniform_below(9));
    const CnfFormula f = generate(ModelSpec{ModelKind::Uniform, n, m, k, rng.next_u64()}).formula;
    const SpectrumTable table = SpectrumTable::build(f);
    NormalizationInfo norm;
    norm.phase_scale = rng.uniform(0.05, 2.0);
    norm.mixer_scale = rng.uniform(0.05, 2.0);
    GammaBetaParams params;
    const int p = static_cast<int>(rng.uniform_below(3));
    for (int d = 0; d < p; ++d) {
      params.gamma.push_back(rng.uniform(-2 * pi, 2 * pi));
      params.beta.push_back(rng.uniform(-2 * pi, 2 * pi));
    }
    const StateVector s = run_circuit(table, norm, params);
    const oracle::Vector ref = oracle::evolve(f, norm.phase_scale, norm.mixer_scale, params.gamma, params.beta);
    for (std::size_t x = 0; x < ref.size(); ++x) worst = std::max(worst, std::abs(s.amplitude(x) - ref[x]));
  }
  o.detail << "max amplitude error " << worst << " over 50 cases";
  o.require(worst <= 1e-9, "error <= 1e-9");
  return o;
}

Outcome criterion2() {
  Outcome o;
  double worst = 0.0;
  int count = 0;
  for (ModelKind kind : {ModelKind::Uniform, ModelKind::Satisfiable, ModelKind::Planted}) {
    for (int n = 3; n <= 14; ++n) {
      for (int index = 0; index < 10; ++index) {
        const int m = index == 0 ? 0 : m_star(n) * index / 5;
        const GenerationResult g = generate(ModelSpec{kind, n, m, 3, derive_seed(n * 31 + index, 2)});
        const SpectrumTable table = SpectrumTable::build(g.formula);
        const double value = expectation(StateVector::plus(n), table, 1.0);
        worst = std::max(worst, std::abs(value - 7.0 * m / 8.0));
        ++count;
      }
    }
  }
  o.detail << "max |<C> - 7m/8| " << worst << " over " << count << " instances";
  o.require(worst <= 1e-9, "deviation <= 1e-9");
  return o;
}

Outcome criterion3() {
  Outcome o;
  constexpr int n = 10, k = 3, formulas = 100, per_formula = 1000;
  constexpr double samples = formulas * per_formula;
  for (int d : {0, 1, 3, 5}) {
    Rng rng(derive_seed(303, d));
    double sum = 0.0, sum_sq = 0.0;
    for (int j = 0; j < formulas; ++j) {
      const GenerationResult g = generate(ModelSpec{ModelKind::Planted, n, per_formula, k, rng.next_u64()});
      std::uint32_t mask = 0;
      while (std::popcount(mask) < d) mask |= std::uint32_t{1} << rng.uniform_below(n);
      const Assignment x(g.hidden_t0->bits() ^ mask, n);
      for (const Clause& c : g.formula.clauses()) {
        const double v = eval_clause(c, x) ? 1.0 : 0.0;
        sum += v;
        sum_sq += v * v;
      }
    }
    const double m_hat = sum / samples;
    const double v_hat = (sum_sq - samples * m_hat * m_hat) / (samples - 1);
    // The closed forms take the number of agreeing variables, n - d.
    const double mu = mu_kx(n, k, n - d), s2 = sigma2_kx(n, k, n - d);
    // Fourth central moment of a Bernoulli(mu) variable gives the standard
    // error of the sample variance.
    const double m4 = mu * (1 - mu) * (std::pow(1 - mu, 3) + std::pow(mu, 3));
    const double se_mean = std::sqrt(s2 / samples);
    const double se_var = std::sqrt(std::max(m4 - s2 * s2, 0.0) / samples);
    o.detail << "d=" << d << " mean " << m_hat << "/" << mu << " var " << v_hat << "/" << s2 << "; ";
    if (s2 == 0.0) {
      o.require(m_hat == mu && v_hat == 0.0, "d=" + std::to_string(d) + " degenerate");
    } else {
      o.require(std::abs(m_hat - mu) <= 3 * se_mean, "d=" + std::to_string(d) + " mean");
      o.require(std::abs(v_hat - s2) <= 3 * se_var, "d=" + std::to_string(d) + " variance");
    }
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  constexpr int n = 12, instances = 200;
  const int m = m_star(n);
  int below = 0;
  std::vector<double> ratios;
  double lo = 1e9, hi = 0.0;
  for (int i = 0; i < instances; ++i) {
    const GenerationResult g = generate(ModelSpec{ModelKind::Satisfiable, n, m, 3, derive_seed(404, i)});
    const SpectrumTable table = SpectrumTable::build(g.formula);
    const double g0 = exact_G0(table), ge = estimate_GE(n, 3, m, kDefaultC0);
    below += ge <= g0 ? 1 : 0;
    ratios.push_back(ge / g0);
    lo = std::min(lo, ge / g0);
    hi = std::max(hi, ge / g0);
  }
  const double frac = static_cast<double>(below) / instances;
  o.detail << "G_E<=G_0 fraction " << frac << ", mean G_E/G_0 " << mean(ratios) << " (range " << lo << ".."
           << hi << ")";
  o.require(frac >= 0.7, "fraction >= 0.7");
  o.require(mean(ratios) >= 0.7 && mean(ratios) <= 1.05, "mean ratio in [0.7, 1.05]");
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::vector<double> counts;
  for (int seed = 0; seed < 500; ++seed) {
    const GenerationResult g = generate(ModelSpec{ModelKind::Satisfiable, 12, m_star(12), 3, derive_seed(505, seed)});
    counts.push_back(static_cast<double>(g.interpretations.size()));
  }
  o.detail << "mean interpretations " << mean(counts) << " over 500 seeds";
  o.require(mean(counts) >= 1.0 && mean(counts) <= 1.8, "mean in [1.0, 1.8]");
  return o;
}

Outcome criterion6() {
  Outcome o;
  const SuiteResult r = run(suite_config({10, 12, 14}, 50, 606, {StrategyKind::QaaSetting, StrategyKind::Interp}), "c6");
  o.require(r.failures == 0, "no failed runs");
  std::map<int, double> qaa_cost, interp_cost;
  for (int n : {10, 12, 14}) {
    qaa_cost[n] = mean(r.costs(n, "qaa_setting"));
    interp_cost[n] = mean(r.costs(n, "interp"));
    const double qp = mean(r.probs(n, "qaa_setting")), ip = mean(r.probs(n, "interp"));
    o.detail << "n=" << n << " qaa cost " << qaa_cost[n] << " prob " << qp << ", interp cost " << interp_cost[n]
             << " prob " << ip << "; ";
    o.require(qp >= ip, "(a) qaa prob >= interp prob at n=" + std::to_string(n));
  }
  o.require(qaa_cost[14] / qaa_cost[10] <= 1.3, "(b) qaa cost ratio <= 1.3");
  o.require(interp_cost[10] < interp_cost[12] && interp_cost[12] < interp_cost[14], "(c) interp increasing");
  o.require(interp_cost[14] / interp_cost[10] >= 1.2, "(c) interp ratio >= 1.2");
  o.detail << "qaa ratio " << qaa_cost[14] / qaa_cost[10] << ", interp ratio " << interp_cost[14] / interp_cost[10];
  return o;
}

Outcome criterion7() {
  Outcome o;
  const SuiteResult r =
      run(suite_config({12}, 30, 707, {StrategyKind::ApBased, StrategyKind::Tqa, StrategyKind::Fourier}), "c7");
  o.require(r.failures == 0, "no failed runs");
  const double ap = mean(r.costs(12, "ap")), tqa = mean(r.costs(12, "tqa")), fourier = mean(r.costs(12, "fourier"));
  o.detail << "mean cost ap " << ap << ", tqa " << tqa << ", fourier " << fourier << " (fourier/ap "
           << fourier / ap << "); mean prob ap " << mean(r.probs(12, "ap")) << ", tqa " << mean(r.probs(12, "tqa"))
           << ", fourier " << mean(r.probs(12, "fourier"));
  o.require(ap < tqa && tqa < fourier, "ap < tqa < fourier");
  o.require(fourier / ap >= 3, "fourier/ap >= 3");
  return o;
}

Outcome criterion8() {
  Outcome o;
  bench::ExperimentConfig c = suite_config({4, 8, 16}, 100, 808, {StrategyKind::ApBased});
  c.strategy.optimizer.f_tol = 1e-4;
  const SuiteResult r = run(c, "c8");
  o.require(r.failures == 0, "no failed runs");
  const double c4 = mean(r.costs(4, "ap")), c8 = mean(r.costs(8, "ap")), c16 = mean(r.costs(16, "ap"));
  const std::map<int, double> table = {{4, 300.5}, {8, 430.4}, {16, 524.9}};
  o.detail << "f_tol " << c.strategy.optimizer.f_tol << "; mean cost n=4 " << c4 << ", n=8 " << c8 << ", n=16 "
           << c16 << "; ratio " << c16 / c4 << "; vs reference 300.5/430.4/524.9: " << c4 / table.at(4) << "x, "
           << c8 / table.at(8) << "x, " << c16 / table.at(16) << "x; mean prob " << mean(r.probs(4, "ap")) << "/"
           << mean(r.probs(8, "ap")) << "/" << mean(r.probs(16, "ap"));
  o.require(c4 < c8 && c8 < c16, "increasing");
  o.require(c16 - c8 <= 1.2 * (c8 - c4), "diminishing increments (20% slack)");
  o.require(c16 / c4 <= 2, "cost(16)/cost(4) <= 2");
  return o;
}

Outcome criterion9() {
  Outcome o;
  const SuiteResult r = run(suite_config({12}, 50, 909, {StrategyKind::ApBased}), "c9");
  o.require(r.failures == 0, "no failed runs");
  int smooth = 0;
  std::vector<double> deviations;
  const auto& runs = r.at(12, "ap");
  for (const auto& rec : runs) {
    const std::size_t p = rec.native_params.size() / 2;
    const std::vector<double> theta(rec.native_params.begin(), rec.native_params.begin() + p);
    const std::vector<double> tau(rec.native_params.begin() + p, rec.native_params.end());
    const auto [lo, hi] = std::minmax_element(tau.begin(), tau.end());
    smooth += (*lo > 0 && *hi / *lo <= 2) ? 1 : 0;
    for (double t : theta) deviations.push_back(std::abs(t - pi / 4));
  }
  const double frac = runs.empty() ? 0.0 : static_cast<double>(smooth) / runs.size();
  o.detail << "tau spread <= 2 on " << frac << " of " << runs.size() << " instances, mean |theta - pi/4| "
           << mean(deviations);
  o.require(runs.size() == 50, "50 runs");
  o.require(frac >= 0.9, "tau spread fraction >= 0.9");
  o.require(mean(deviations) <= 0.3, "mean theta deviation <= 0.3");
  return o;
}

Outcome criterion10() {
  Outcome o;
  const bench::ExperimentConfig c = suite_config({10}, 50, 1010, {StrategyKind::ApBased});
  double worst = 0.0;
  for (int i = 0; i < c.suite_size; ++i) {
    const bench::SuiteInstance inst = bench::make_instance(c, 10, i);
    const Problem prob = Problem::from_formula(inst.generated.formula);
    const int p = c.depth_for(10);
    EvalCounter counter;
    const RunReport stage0 = qaa_setting(prob, p, c.strategy, counter);
    const double theta0 = stage0.native_params[0], tau0 = stage0.native_params[1];
    QaoaEvaluator base(prob, counter);
    const double f0 = base.negative_expectation(linear_to_gamma_beta({theta0, tau0}, p));
    QaoaEvaluator rescaled(prob, ap_rescale(prob.norm, theta0, tau0, true), counter);
    const ThetaTauParams start{std::vector<double>(p, pi / 4), std::vector<double>(p, 1.0)};
    worst = std::max(worst, std::abs(rescaled.negative_expectation(thetatau_to_gamma_beta(start)) - f0));
  }
  o.detail << "max objective gap " << worst << " over 50 instances";
  o.require(worst <= 1e-10, "gap <= 1e-10");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                          criterion6, criterion7, criterion8, criterion9, criterion10};
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--out" && i + 1 < argc) {
      out_dir = argv[++i];
      continue;
    }
    try {
      const int id = std::stoi(arg);
      if (id < 1 || id > static_cast<int>(criteria.size())) throw std::out_of_range(arg);
      selected.insert(id);
    } catch (const std::exception&) {
      std::cerr << "usage: apqaoa_acceptance [--out DIR] [criterion ...]\n";
      return 64;
    }
  }
  if (selected.empty())
    for (int id = 1; id <= static_cast<int>(criteria.size()); ++id) selected.insert(id);

  int failed = 0;
  for (int id : selected) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[id - 1]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail.str() << "  ("
              << secs << " s)" << std::endl;
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
