#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace apqaoa {

/// Scalar objective over a real vector. Must be deterministic within a run.
using Objective = std::function<double(std::span<const double>)>;

enum class FiniteDifference { Forward, Central };

struct LineSearchConfig {
  double sufficient_decrease = 1e-4;  // Armijo c1
  double shrink = 0.5;
  int max_backtracks = 30;
};

struct OptimizerConfig {
  /// Relative step: h_i = fd_step * (1 + |x_i|).
  double fd_step = 1e-6;
  /// Stop when the infinity norm of the gradient drops below this.
  double grad_tol = 1e-5;
  /// Stop when an accepted step improves f by at most f_tol * max(|f|, 1).
  double f_tol = 1e-8;
  int max_iters = 200;
  LineSearchConfig line_search;
  FiniteDifference fd_scheme = FiniteDifference::Forward;

  void validate() const;
};

enum class StopReason { GradientTolerance, FunctionTolerance, MaxIterations, LineSearchFailure, NonFinite };
std::string to_string(StopReason reason);

struct OptimizationReport {
  std::vector<double> x_star;
  double f_star = 0.0;
  double f_initial = 0.0;
  /// Objective calls made by the optimizer.
  std::uint64_t evals = 0;
  int iterations = 0;
  bool converged = false;
  StopReason reason = StopReason::MaxIterations;
};

/// Gradient estimate at `x` together with f(x). Forward differences cost
/// |x| + 1 calls, central differences 2|x| + 1.
struct GradientSample {
  double f = 0.0;
  std::vector<double> grad;
  std::uint64_t evals = 0;
};

GradientSample finite_difference_gradient(const Objective& f, std::span<const double> x,
                                          const OptimizerConfig& config);

/// BFGS minimization with finite-difference gradients and a backtracking
/// Armijo line search. Throws std::invalid_argument if f(x0) is not finite.
OptimizationReport minimize(const Objective& f, std::vector<double> x0,
                            const OptimizerConfig& config = {});

/// Inclusive evenly spaced grid axis.
struct GridAxis {
  double lo = 0.0;
  double hi = 1.0;
  int points = 2;

  double at(int i) const { return points == 1 ? lo : lo + (hi - lo) * i / (points - 1); }
};

struct GridScanResult {
  GridAxis theta;
  GridAxis rho;
  /// Row-major: values[i * rho.points + j] = f(theta.at(i), rho.at(j)).
  std::vector<double> values;
  int best_theta_index = 0;
  int best_rho_index = 0;
  double best_value = 0.0;
  std::uint64_t evals = 0;

  double best_theta() const { return theta.at(best_theta_index); }
  double best_rho() const { return rho.at(best_rho_index); }
};

/// Evaluates `f` on the full theta x rho grid and returns the largest value.
GridScanResult grid_scan(const std::function<double(double, double)>& f, const GridAxis& theta,
                         const GridAxis& rho);

}  // namespace apqaoa
