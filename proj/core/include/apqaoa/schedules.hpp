#pragma once

#include <string>
#include <vector>

#include "apqaoa/simulator.hpp"

namespace apqaoa {

/// Linear ramp parameterized by intensity angle theta and per-layer time
/// scale rho: f_gamma = rho*sin(theta), f_beta = rho*cos(theta).
struct LinearSchedule {
  double theta = 0.0;
  double rho = 1.0;
};

/// Per-layer adiabatic-passage coordinates.
struct ThetaTauParams {
  std::vector<double> theta;
  std::vector<double> tau;

  std::size_t size() const { return theta.size(); }
};

/// Sin/cos spectral coefficients of a depth-q schedule.
struct FourierParams {
  std::vector<double> u;
  std::vector<double> v;

  std::size_t size() const { return u.size(); }
};

/// Tag identifying a parameter space in serialized reports.
enum class ParamSpace { GammaBeta, Linear, ThetaTau, Fourier };
std::string to_string(ParamSpace space);

/// gamma_d = 2 d pi/(p+1) rho sin(theta), beta_d = 2 (p-d+1) pi/(p+1) rho cos(theta).
GammaBetaParams linear_to_gamma_beta(const LinearSchedule& sched, int p);

/// gamma_d = d/(p+1) tau_d sin(theta_d), beta_d = (p+1-d)/(p+1) tau_d cos(theta_d),
/// with p the length of `params`.
GammaBetaParams thetatau_to_gamma_beta(const ThetaTauParams& params);

/// Inverse of thetatau_to_gamma_beta for angles with a well-defined polar
/// form (tau_d > 0).
ThetaTauParams gamma_beta_to_thetatau(const GammaBetaParams& params);

/// gamma_j = sum_k u_k sin((k-1/2)(j-1/2) pi/q), beta_j = sum_k v_k cos(...),
/// j = 1..q.
GammaBetaParams fourier_to_gamma_beta(const FourierParams& params, int q);

/// Resamples `values` (nodes at d/(L+1), d = 1..L) onto L' nodes at
/// d'/(L'+1). Natural cubic spline for L >= 3, linear for L = 2, constant for
/// L = 1; samples outside the source node span take the nearest end value.
std::vector<double> interp_resize(const std::vector<double>& values, int new_length);

}  // namespace apqaoa
