#include "apqaoa/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace apqaoa {

void OptimizerConfig::validate() const {
  if (!(fd_step > 0 && grad_tol > 0 && f_tol > 0)) {
    throw std::invalid_argument("optimizer tolerances and fd_step must be positive");
  }
  if (max_iters < 1) throw std::invalid_argument("optimizer max_iters must be >= 1");
  if (!(line_search.sufficient_decrease > 0 && line_search.sufficient_decrease < 1)) {
    throw std::invalid_argument("line search sufficient_decrease must lie in (0, 1)");
  }
  if (!(line_search.shrink > 0 && line_search.shrink < 1)) {
    throw std::invalid_argument("line search shrink must lie in (0, 1)");
  }
  if (line_search.max_backtracks < 1) throw std::invalid_argument("line search max_backtracks must be >= 1");
}

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::GradientTolerance: return "grad_tol";
    case StopReason::FunctionTolerance: return "f_tol";
    case StopReason::MaxIterations: return "max_iters";
    case StopReason::LineSearchFailure: return "line_search";
    case StopReason::NonFinite: return "non_finite";
  }
  return "?";
}

GradientSample finite_difference_gradient(const Objective& f, std::span<const double> x,
                                          const OptimizerConfig& config) {
  GradientSample out;
  out.grad.resize(x.size());
  std::vector<double> probe(x.begin(), x.end());
  out.f = f(probe);
  ++out.evals;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double h = config.fd_step * (1.0 + std::abs(x[i]));
    if (config.fd_scheme == FiniteDifference::Forward) {
      probe[i] = x[i] + h;
      const double fp = f(probe);
      out.grad[i] = (fp - out.f) / h;
      out.evals += 1;
    } else {
      probe[i] = x[i] + h;
      const double fp = f(probe);
      probe[i] = x[i] - h;
      const double fm = f(probe);
      out.grad[i] = (fp - fm) / (2.0 * h);
      out.evals += 2;
    }
    probe[i] = x[i];
  }
  return out;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double inf_norm(const std::vector<double>& v) {
  double r = 0.0;
  for (double e : v) r = std::max(r, std::abs(e));
  return r;
}

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double e) { return std::isfinite(e); });
}

// Dense inverse-Hessian approximation, row-major.
class InverseHessian {
 public:
  explicit InverseHessian(std::size_t n) : n_(n), h_(n * n, 0.0) { reset(1.0); }

  void reset(double scale) {
    std::fill(h_.begin(), h_.end(), 0.0);
    for (std::size_t i = 0; i < n_; ++i) h_[i * n_ + i] = scale;
  }

  std::vector<double> apply(const std::vector<double>& v) const {
    std::vector<double> out(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n_; ++j) acc += h_[i * n_ + j] * v[j];
      out[i] = acc;
    }
    return out;
  }

  // H <- (I - r s y^T) H (I - r y s^T) + r s s^T, r = 1 / (y^T s).
  void update(const std::vector<double>& s, const std::vector<double>& y, double ys) {
    const double r = 1.0 / ys;
    const std::vector<double> hy = apply(y);
    const double yhy = dot(y, hy);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        h_[i * n_ + j] += -r * (s[i] * hy[j] + hy[i] * s[j]) + (r * r * yhy + r) * s[i] * s[j];
      }
    }
  }

 private:
  std::size_t n_;
  std::vector<double> h_;
};

}  // namespace

OptimizationReport minimize(const Objective& f, std::vector<double> x0, const OptimizerConfig& config) {
  config.validate();
  OptimizationReport report;
  const std::size_t n = x0.size();

  GradientSample cur = finite_difference_gradient(f, x0, config);
  report.evals += cur.evals;
  if (!std::isfinite(cur.f)) throw std::invalid_argument("minimize: objective is not finite at x0");
  report.f_initial = cur.f;

  std::vector<double> x = std::move(x0);
  InverseHessian hinv(n);
  bool scaled = false;

  auto finish = [&](StopReason reason, bool converged) {
    report.x_star = x;
    report.f_star = cur.f;
    report.reason = reason;
    report.converged = converged;
    return report;
  };

  for (;;) {
    if (!all_finite(cur.grad)) return finish(StopReason::NonFinite, false);
    if (inf_norm(cur.grad) < config.grad_tol) return finish(StopReason::GradientTolerance, true);
    if (report.iterations >= config.max_iters) return finish(StopReason::MaxIterations, false);

    std::vector<double> dir = hinv.apply(cur.grad);
    for (double& e : dir) e = -e;
    double slope = dot(cur.grad, dir);
    if (!(slope < 0)) {
      hinv.reset(1.0);
      scaled = false;
      dir = cur.grad;
      for (double& e : dir) e = -e;
      slope = dot(cur.grad, dir);
    }

    std::vector<double> xn(n);
    double fn = 0.0;
    double alpha = 1.0;
    bool accepted = false;
    for (int t = 0; t < config.line_search.max_backtracks; ++t) {
      for (std::size_t i = 0; i < n; ++i) xn[i] = x[i] + alpha * dir[i];
      fn = f(xn);
      ++report.evals;
      if (std::isfinite(fn) && fn <= cur.f + config.line_search.sufficient_decrease * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= config.line_search.shrink;
    }
    if (!accepted) return finish(StopReason::LineSearchFailure, false);
    ++report.iterations;

    const double improvement = cur.f - fn;
    if (improvement <= config.f_tol * std::max({std::abs(cur.f), std::abs(fn), 1.0})) {
      x = std::move(xn);
      cur.f = fn;
      return finish(StopReason::FunctionTolerance, true);
    }

    GradientSample next = finite_difference_gradient(f, xn, config);
    report.evals += next.evals;

    std::vector<double> s(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = xn[i] - x[i];
      y[i] = next.grad[i] - cur.grad[i];
    }
    const double ys = dot(y, s);
    if (ys > 1e-12 * std::sqrt(dot(y, y) * dot(s, s))) {
      if (!scaled) {
        hinv.reset(ys / dot(y, y));
        scaled = true;
      }
      hinv.update(s, y, ys);
    }
    x = std::move(xn);
    cur = std::move(next);
  }
}

GridScanResult grid_scan(const std::function<double(double, double)>& f, const GridAxis& theta,
                         const GridAxis& rho) {
  if (theta.points < 2 || rho.points < 2) throw std::invalid_argument("grid_scan needs >= 2 points per axis");
  GridScanResult out;
  out.theta = theta;
  out.rho = rho;
  out.values.resize(static_cast<std::size_t>(theta.points) * rho.points);
  bool have_best = false;
  for (int i = 0; i < theta.points; ++i) {
    for (int j = 0; j < rho.points; ++j) {
      const double v = f(theta.at(i), rho.at(j));
      ++out.evals;
      out.values[static_cast<std::size_t>(i) * rho.points + j] = v;
      if (!have_best || v > out.best_value) {
        have_best = true;
        out.best_value = v;
        out.best_theta_index = i;
        out.best_rho_index = j;
      }
    }
  }
  return out;
}

}  // namespace apqaoa
