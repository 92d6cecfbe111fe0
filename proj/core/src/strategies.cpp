#include "apqaoa/strategies.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace apqaoa {

std::string to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::QaaInit: return "qaa_init";
    case StrategyKind::QaaSetting: return "qaa_setting";
    case StrategyKind::Tqa: return "tqa";
    case StrategyKind::Interp: return "interp";
    case StrategyKind::Fourier: return "fourier";
    case StrategyKind::ApBased: return "ap";
  }
  return "?";
}

StrategyKind strategy_from_string(const std::string& name) {
  for (StrategyKind k : kAllStrategies) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown strategy '" + name +
                              "' (expected qaa_init, qaa_setting, tqa, interp, fourier or ap)");
}

Problem Problem::from_formula(const CnfFormula& formula, NormalizationMode mode, double c0) {
  SpectrumTable table = SpectrumTable::build(formula);
  NormalizationInfo norm = normalize(table, mode, c0);
  return Problem{std::move(table), norm};
}

QaoaEvaluator::QaoaEvaluator(const Problem& problem, EvalCounter& counter)
    : QaoaEvaluator(problem, problem.norm, counter) {}

QaoaEvaluator::QaoaEvaluator(const Problem& problem, const NormalizationInfo& scales, EvalCounter& counter)
    : problem_(problem), scales_(scales), counter_(counter), scratch_(StateVector::plus(problem.table.num_vars())) {}

double QaoaEvaluator::negative_expectation(const GammaBetaParams& params) {
  run_circuit_into(scratch_, problem_.table, scales_, params);
  return -expectation(scratch_, problem_.table, scales_.energy_scale, &counter_);
}

void QaoaEvaluator::observe(const GammaBetaParams& params, double& expect, double& target_prob) {
  run_circuit_into(scratch_, problem_.table, scales_, params);
  expect = expectation(scratch_, problem_.table, problem_.norm.energy_scale);
  target_prob = target_probability(scratch_, problem_.table);
}

GammaBetaParams qaa_init(int p) {
  return linear_to_gamma_beta(LinearSchedule{std::numbers::pi / 4, std::numbers::sqrt2}, p);
}

NormalizationInfo raw_scales(const NormalizationInfo& norm) {
  NormalizationInfo raw = norm;
  raw.phase_scale = 1.0;
  raw.mixer_scale = 1.0;
  raw.energy_scale = 1.0;
  return raw;
}

NormalizationInfo ap_rescale(const NormalizationInfo& norm, double theta0, double tau0, bool with_2pi) {
  const double factor = (with_2pi ? 2.0 * std::numbers::pi : 1.0) * std::numbers::sqrt2 * tau0;
  NormalizationInfo out = norm;
  out.phase_scale = norm.phase_scale * factor * std::sin(theta0);
  out.mixer_scale = norm.mixer_scale * factor * std::cos(theta0);
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

StageReport stage_from(const std::string& label, const OptimizationReport& opt) {
  StageReport s;
  s.label = label;
  s.num_params = static_cast<int>(opt.x_star.size());
  s.evals = opt.evals;
  s.iterations = opt.iterations;
  s.best_value = opt.f_star;
  s.stop_reason = to_string(opt.reason);
  s.converged = opt.converged;
  return s;
}

void add_stage(RunReport& report, StageReport stage) {
  report.cost_evals += stage.evals;
  report.converged = report.converged && stage.converged;
  report.stages.push_back(std::move(stage));
}

// Rescales gamma/beta optimized under `from` so they produce the same circuit
// under the instance's base scales.
GammaBetaParams to_base_scales(const GammaBetaParams& params, const NormalizationInfo& from,
                               const NormalizationInfo& base) {
  GammaBetaParams out = params;
  const double g = from.phase_scale / base.phase_scale;
  const double b = from.mixer_scale / base.mixer_scale;
  for (double& v : out.gamma) v *= g;
  for (double& v : out.beta) v *= b;
  return out;
}

void finalize(RunReport& report, const Problem& problem, Clock::time_point start) {
  EvalCounter unused;
  QaoaEvaluator eval(problem, unused);
  eval.observe(report.final_params, report.expectation, report.target_prob);
  report.wall_time_s = seconds_since(start);
}

// Keeps the polar form canonical: rho >= 0 and theta in (-pi, pi].
LinearSchedule canonical(double theta, double rho) {
  if (rho < 0) {
    rho = -rho;
    theta += std::numbers::pi;
  }
  theta = std::remainder(theta, 2.0 * std::numbers::pi);
  return LinearSchedule{theta, rho};
}

std::vector<double> flatten(const GammaBetaParams& gb) {
  std::vector<double> flat = gb.gamma;
  flat.insert(flat.end(), gb.beta.begin(), gb.beta.end());
  return flat;
}

GammaBetaParams unflatten(std::span<const double> x) {
  const std::size_t p = x.size() / 2;
  return GammaBetaParams{std::vector<double>(x.begin(), x.begin() + p), std::vector<double>(x.begin() + p, x.end())};
}

struct LinearOptimum {
  LinearSchedule schedule;
  OptimizationReport report;
};

LinearOptimum optimize_linear(QaoaEvaluator& eval, int p, LinearSchedule start, const OptimizerConfig& config) {
  const Objective objective = [&](std::span<const double> x) {
    return eval.negative_expectation(linear_to_gamma_beta(LinearSchedule{x[0], x[1]}, p));
  };
  OptimizationReport opt = minimize(objective, {start.theta, start.rho}, config);
  return LinearOptimum{canonical(opt.x_star[0], opt.x_star[1]), std::move(opt)};
}

}  // namespace

RunReport run_qaa_init(const Problem& problem, int p) {
  const auto start = Clock::now();
  RunReport report;
  report.strategy = StrategyKind::QaaInit;
  report.p = p;
  report.final_params = qaa_init(p);
  report.native_space = ParamSpace::Linear;
  report.native_params = {std::numbers::pi / 4, std::numbers::sqrt2};
  finalize(report, problem, start);
  return report;
}

RunReport qaa_setting(const Problem& problem, int p, const StrategyConfig& config, EvalCounter& counter) {
  const auto start = Clock::now();
  QaoaEvaluator eval(problem, counter);
  LinearOptimum best =
      optimize_linear(eval, p, LinearSchedule{std::numbers::pi / 4, std::numbers::sqrt2}, config.optimizer);

  RunReport report;
  report.strategy = StrategyKind::QaaSetting;
  report.p = p;
  add_stage(report, stage_from("linear", best.report));
  report.final_params = linear_to_gamma_beta(best.schedule, p);
  report.native_space = ParamSpace::Linear;
  report.native_params = {best.schedule.theta, best.schedule.rho};
  finalize(report, problem, start);
  return report;
}

TqaPrior tqa_precompute(const ModelSpec& model_template, int samples, int p, NormalizationMode mode,
                        double c0, const StrategyConfig& config) {
  if (samples < 1) throw std::invalid_argument("tqa_precompute needs at least one sample");
  TqaPrior prior;
  double theta_sum = 0.0;
  double rho_sum = 0.0;
  for (int i = 0; i < samples; ++i) {
    ModelSpec spec = model_template;
    spec.seed = derive_seed(model_template.seed, static_cast<std::uint64_t>(i));
    const Problem problem = Problem::from_formula(generate(spec).formula, mode, c0);
    EvalCounter counter;
    const RunReport r = qaa_setting(problem, p, config, counter);
    theta_sum += r.native_params[0];
    rho_sum += r.native_params[1];
    prior.evals += r.cost_evals;
  }
  prior.samples_used = samples;
  prior.theta_bar = theta_sum / samples;
  prior.rho_bar = rho_sum / samples;
  return prior;
}

RunReport tqa_run(const Problem& problem, int p, const TqaPrior& prior, const StrategyConfig& config,
                  EvalCounter& counter) {
  const auto start = Clock::now();
  QaoaEvaluator eval(problem, counter);
  const Objective objective = [&](std::span<const double> x) { return eval.negative_expectation(unflatten(x)); };
  const GammaBetaParams init = linear_to_gamma_beta(LinearSchedule{prior.theta_bar, prior.rho_bar}, p);
  const OptimizationReport opt = minimize(objective, flatten(init), config.optimizer);

  RunReport report;
  report.strategy = StrategyKind::Tqa;
  report.p = p;
  add_stage(report, stage_from("full", opt));
  report.final_params = unflatten(opt.x_star);
  report.native_space = ParamSpace::GammaBeta;
  report.native_params = opt.x_star;
  finalize(report, problem, start);
  return report;
}

RunReport interp_heuristic(const Problem& problem, int p, Rng& rng, const StrategyConfig& config,
                           EvalCounter& counter) {
  if (p < 1) throw std::invalid_argument("interp_heuristic requires p >= 1");
  const auto start = Clock::now();
  const NormalizationInfo scales = config.raw_hamiltonian ? raw_scales(problem.norm) : problem.norm;
  QaoaEvaluator eval(problem, scales, counter);

  auto ramp = [](double g0, double b0, int q) {
    GammaBetaParams gb;
    gb.gamma.resize(q);
    gb.beta.resize(q);
    for (int d = 1; d <= q; ++d) {
      gb.gamma[d - 1] = d * g0 / (q + 1);
      gb.beta[d - 1] = (q + 1 - d) * b0 / (q + 1);
    }
    return gb;
  };

  std::vector<double> x = {rng.uniform(0.0, 2.0 * std::numbers::pi), rng.uniform(0.0, 2.0 * std::numbers::pi)};
  RunReport report;
  report.strategy = StrategyKind::Interp;
  report.p = p;
  for (int q = 1; q <= p; ++q) {
    const Objective objective = [&](std::span<const double> v) { return eval.negative_expectation(ramp(v[0], v[1], q)); };
    const OptimizationReport opt = minimize(objective, x, config.optimizer);
    x = opt.x_star;
    add_stage(report, stage_from("q=" + std::to_string(q), opt));
  }
  report.final_params = to_base_scales(ramp(x[0], x[1], p), scales, problem.norm);
  report.native_space = ParamSpace::Linear;
  report.native_params = x;
  finalize(report, problem, start);
  return report;
}

RunReport fourier_heuristic(const Problem& problem, int p, Rng& rng, const StrategyConfig& config,
                            EvalCounter& counter) {
  if (p < 1) throw std::invalid_argument("fourier_heuristic requires p >= 1");
  const auto start = Clock::now();
  const NormalizationInfo scales = config.raw_hamiltonian ? raw_scales(problem.norm) : problem.norm;
  QaoaEvaluator eval(problem, scales, counter);

  FourierParams uv{{rng.uniform(0.0, 2.0 * std::numbers::pi)}, {rng.uniform(0.0, 2.0 * std::numbers::pi)}};
  RunReport report;
  report.strategy = StrategyKind::Fourier;
  report.p = p;
  for (int q = 1; q <= p; ++q) {
    if (q > 1) {
      uv.u.push_back(0.0);
      uv.v.push_back(0.0);
    }
    const Objective objective = [&](std::span<const double> x) {
      FourierParams f{std::vector<double>(x.begin(), x.begin() + q), std::vector<double>(x.begin() + q, x.end())};
      return eval.negative_expectation(fourier_to_gamma_beta(f, q));
    };
    std::vector<double> x0 = uv.u;
    x0.insert(x0.end(), uv.v.begin(), uv.v.end());
    const OptimizationReport opt = minimize(objective, std::move(x0), config.optimizer);
    uv.u.assign(opt.x_star.begin(), opt.x_star.begin() + q);
    uv.v.assign(opt.x_star.begin() + q, opt.x_star.end());
    add_stage(report, stage_from("q=" + std::to_string(q), opt));
  }
  report.final_params = to_base_scales(fourier_to_gamma_beta(uv, p), scales, problem.norm);
  report.native_space = ParamSpace::Fourier;
  report.native_params = uv.u;
  report.native_params.insert(report.native_params.end(), uv.v.begin(), uv.v.end());
  finalize(report, problem, start);
  return report;
}

RunReport ap_setting(const Problem& problem, int p, const StrategyConfig& config, EvalCounter& counter) {
  if (p < 1) throw std::invalid_argument("ap_setting requires p >= 1");
  const auto start = Clock::now();
  RunReport report;
  report.strategy = StrategyKind::ApBased;
  report.p = p;

  QaoaEvaluator base_eval(problem, counter);
  const LinearOptimum stage0 =
      optimize_linear(base_eval, p, LinearSchedule{std::numbers::pi / 4, std::numbers::sqrt2}, config.optimizer);
  add_stage(report, stage_from("L=1", stage0.report));

  const NormalizationInfo scales =
      ap_rescale(problem.norm, stage0.schedule.theta, stage0.schedule.rho, config.ap_rescale_2pi);
  QaoaEvaluator eval(problem, scales, counter);

  auto full_depth = [p](std::span<const double> theta, std::span<const double> tau) {
    ThetaTauParams tt{interp_resize(std::vector<double>(theta.begin(), theta.end()), p),
                      interp_resize(std::vector<double>(tau.begin(), tau.end()), p)};
    return thetatau_to_gamma_beta(tt);
  };

  std::vector<double> theta = {std::numbers::pi / 4};
  std::vector<double> tau = {1.0};
  int levels = std::bit_width(static_cast<unsigned>(p)) - 1;  // floor(log2 p)
  while (levels > 0) {
    --levels;
    const int len = (p + (1 << levels) - 1) >> levels;  // ceil(p / 2^levels)
    theta = interp_resize(theta, len);
    tau = interp_resize(tau, len);
    const Objective objective = [&](std::span<const double> x) {
      return eval.negative_expectation(full_depth(x.subspan(0, len), x.subspan(len)));
    };
    std::vector<double> x0 = theta;
    x0.insert(x0.end(), tau.begin(), tau.end());
    const OptimizationReport opt = minimize(objective, std::move(x0), config.optimizer);
    theta.assign(opt.x_star.begin(), opt.x_star.begin() + len);
    tau.assign(opt.x_star.begin() + len, opt.x_star.end());
    add_stage(report, stage_from("L=" + std::to_string(len), opt));
  }

  report.final_params = to_base_scales(full_depth(theta, tau), scales, problem.norm);
  report.native_space = ParamSpace::ThetaTau;
  report.native_params = theta;
  report.native_params.insert(report.native_params.end(), tau.begin(), tau.end());
  finalize(report, problem, start);
  return report;
}

}  // namespace apqaoa
