#include "apqaoa/schedules.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "apqaoa/spline.hpp"

namespace apqaoa {

std::string to_string(ParamSpace space) {
  switch (space) {
    case ParamSpace::GammaBeta: return "gamma_beta";
    case ParamSpace::Linear: return "linear";
    case ParamSpace::ThetaTau: return "theta_tau";
    case ParamSpace::Fourier: return "fourier";
  }
  return "?";
}

GammaBetaParams linear_to_gamma_beta(const LinearSchedule& sched, int p) {
  if (p < 1) throw std::invalid_argument("linear_to_gamma_beta requires p >= 1");
  const double fg = sched.rho * std::sin(sched.theta);
  const double fb = sched.rho * std::cos(sched.theta);
  const double unit = 2.0 * std::numbers::pi / (p + 1);
  GammaBetaParams out;
  out.gamma.resize(p);
  out.beta.resize(p);
  for (int d = 1; d <= p; ++d) {
    out.gamma[d - 1] = unit * d * fg;
    out.beta[d - 1] = unit * (p - d + 1) * fb;
  }
  return out;
}

GammaBetaParams thetatau_to_gamma_beta(const ThetaTauParams& params) {
  if (params.theta.size() != params.tau.size()) {
    throw std::invalid_argument("theta and tau lengths differ");
  }
  const auto p = static_cast<int>(params.size());
  GammaBetaParams out;
  out.gamma.resize(p);
  out.beta.resize(p);
  for (int d = 1; d <= p; ++d) {
    const double th = params.theta[d - 1];
    const double tau = params.tau[d - 1];
    out.gamma[d - 1] = static_cast<double>(d) / (p + 1) * tau * std::sin(th);
    out.beta[d - 1] = static_cast<double>(p + 1 - d) / (p + 1) * tau * std::cos(th);
  }
  return out;
}

ThetaTauParams gamma_beta_to_thetatau(const GammaBetaParams& params) {
  const auto p = static_cast<int>(params.depth());
  ThetaTauParams out;
  out.theta.resize(p);
  out.tau.resize(p);
  for (int d = 1; d <= p; ++d) {
    const double fg = params.gamma[d - 1] * (p + 1) / d;
    const double fb = params.beta[d - 1] * (p + 1) / (p + 1 - d);
    out.theta[d - 1] = std::atan2(fg, fb);
    out.tau[d - 1] = std::hypot(fg, fb);
  }
  return out;
}

GammaBetaParams fourier_to_gamma_beta(const FourierParams& params, int q) {
  if (q < 1) throw std::invalid_argument("fourier_to_gamma_beta requires q >= 1");
  if (params.u.size() != params.v.size()) throw std::invalid_argument("u and v lengths differ");
  GammaBetaParams out;
  out.gamma.assign(q, 0.0);
  out.beta.assign(q, 0.0);
  for (int j = 1; j <= q; ++j) {
    for (std::size_t k = 1; k <= params.size(); ++k) {
      const double arg = (k - 0.5) * (j - 0.5) * std::numbers::pi / q;
      out.gamma[j - 1] += params.u[k - 1] * std::sin(arg);
      out.beta[j - 1] += params.v[k - 1] * std::cos(arg);
    }
  }
  return out;
}

std::vector<double> interp_resize(const std::vector<double>& values, int new_length) {
  const auto len = static_cast<int>(values.size());
  if (len < 1 || new_length < 1) throw std::invalid_argument("interp_resize needs non-empty lengths");
  if (new_length == len) return values;
  if (len == 1) return std::vector<double>(new_length, values.front());

  std::vector<double> nodes(len);
  for (int d = 1; d <= len; ++d) nodes[d - 1] = static_cast<double>(d) / (len + 1);
  std::vector<double> out(new_length);

  if (len == 2) {
    for (int d = 1; d <= new_length; ++d) {
      const double s = static_cast<double>(d) / (new_length + 1);
      const double w = std::clamp((s - nodes[0]) / (nodes[1] - nodes[0]), 0.0, 1.0);
      out[d - 1] = (1.0 - w) * values[0] + w * values[1];
    }
    return out;
  }

  const NaturalCubicSpline spline(std::move(nodes), values);
  for (int d = 1; d <= new_length; ++d) out[d - 1] = spline(static_cast<double>(d) / (new_length + 1));
  return out;
}

}  // namespace apqaoa
