#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apqaoa/optimize.hpp"
#include "apqaoa/random_models.hpp"
#include "apqaoa/schedules.hpp"
#include "apqaoa/simulator.hpp"
#include "apqaoa/spectrum.hpp"

namespace apqaoa {

enum class StrategyKind { QaaInit, QaaSetting, Tqa, Interp, Fourier, ApBased };

std::string to_string(StrategyKind kind);
StrategyKind strategy_from_string(const std::string& name);
inline constexpr StrategyKind kAllStrategies[] = {StrategyKind::QaaInit, StrategyKind::QaaSetting,
                                                  StrategyKind::Tqa,     StrategyKind::Interp,
                                                  StrategyKind::Fourier, StrategyKind::ApBased};

/// A problem instance ready for simulation: its spectrum and Hamiltonian
/// scales.
struct Problem {
  SpectrumTable table;
  NormalizationInfo norm;

  static Problem from_formula(const CnfFormula& formula, NormalizationMode mode = NormalizationMode::Estimated,
                              double c0 = kDefaultC0);
};

struct StrategyConfig {
  OptimizerConfig optimizer;
  /// INTERP and FOURIER optimize the unnormalized Hamiltonians when set.
  bool raw_hamiltonian = false;
  /// Carry the 2*pi of the linear ramp into the AP rescale.
  bool ap_rescale_2pi = true;
};

struct StageReport {
  std::string label;
  int num_params = 0;
  std::uint64_t evals = 0;
  int iterations = 0;
  /// Objective value (negated normalized expectation) at the stage optimum.
  double best_value = 0.0;
  std::string stop_reason;
  bool converged = true;
};

struct RunReport {
  StrategyKind strategy = StrategyKind::QaaInit;
  int p = 0;
  /// Angles in the instance's base normalization.
  GammaBetaParams final_params;
  /// Optimum in the strategy's own parameter space, flattened.
  ParamSpace native_space = ParamSpace::GammaBeta;
  std::vector<double> native_params;
  double expectation = 0.0;
  double target_prob = 0.0;
  std::uint64_t cost_evals = 0;
  double wall_time_s = 0.0;
  std::vector<StageReport> stages;
  bool converged = true;
};

struct TqaPrior {
  double theta_bar = 0.0;
  double rho_bar = 0.0;
  int samples_used = 0;
  /// Evaluations spent on the pre-computation, never charged to runs.
  std::uint64_t evals = 0;
};

/// Wraps a Problem as a counted objective: each evaluation runs the circuit
/// and returns -<H_C> under the energy scale, ticking the counter once.
class QaoaEvaluator {
 public:
  QaoaEvaluator(const Problem& problem, EvalCounter& counter);
  QaoaEvaluator(const Problem& problem, const NormalizationInfo& scales, EvalCounter& counter);

  double negative_expectation(const GammaBetaParams& params);
  /// Final-state observables; does not tick the counter.
  void observe(const GammaBetaParams& params, double& expectation, double& target_prob);

  const NormalizationInfo& scales() const { return scales_; }
  int num_qubits() const { return problem_.table.num_vars(); }

 private:
  const Problem& problem_;
  NormalizationInfo scales_;
  EvalCounter& counter_;
  StateVector scratch_;
};

/// Linear ramp at theta = pi/4, rho = sqrt(2). Costs no evaluations.
GammaBetaParams qaa_init(int p);

/// Scales with H_C and H_B left unnormalized (phase, mixer and energy scale 1).
NormalizationInfo raw_scales(const NormalizationInfo& norm);

/// Folds a stage-0 optimum (theta0, tau0) into the evolution scales so that
/// the (theta, tau) = (pi/4, 1) schedule reproduces the stage-0 circuit. The
/// energy scale is left unchanged.
NormalizationInfo ap_rescale(const NormalizationInfo& norm, double theta0, double tau0,
                             bool with_2pi = true);

RunReport run_qaa_init(const Problem& problem, int p);

/// Optimizes (theta, rho) of the linear ramp from (pi/4, sqrt(2)).
RunReport qaa_setting(const Problem& problem, int p, const StrategyConfig& config,
                      EvalCounter& counter);

/// Averages qaa_setting optima over `samples` instances drawn from
/// `model_template` (seed i is derive_seed(template.seed, i)).
TqaPrior tqa_precompute(const ModelSpec& model_template, int samples, int p,
                        NormalizationMode mode, double c0, const StrategyConfig& config);

/// Full 2p-parameter optimization initialized from the prior's linear ramp.
RunReport tqa_run(const Problem& problem, int p, const TqaPrior& prior, const StrategyConfig& config,
                  EvalCounter& counter);

RunReport interp_heuristic(const Problem& problem, int p, Rng& rng, const StrategyConfig& config,
                           EvalCounter& counter);

RunReport fourier_heuristic(const Problem& problem, int p, Rng& rng, const StrategyConfig& config,
                            EvalCounter& counter);

/// Adiabatic-passage-based setting: stage-0 linear optimum, rescale, then
/// (theta, tau) optimization at lengths ceil(p / 2^T) for T = floor(log2 p)-1
/// down to 0, each stage initialized by resampling the previous optimum.
RunReport ap_setting(const Problem& problem, int p, const StrategyConfig& config, EvalCounter& counter);

}  // namespace apqaoa
