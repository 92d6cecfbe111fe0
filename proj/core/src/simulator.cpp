#include "apqaoa/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace apqaoa {

namespace {

void check_width(int n) {
  if (n < 1 || n > kMaxVariables) {
    throw std::length_error("state vector: n=" + std::to_string(n) + " outside [1, " +
                            std::to_string(kMaxVariables) + "]");
  }
}

void check_dims(const StateVector& state, const SpectrumTable& table) {
  if (state.num_qubits() != table.num_vars()) {
    throw std::invalid_argument("state has " + std::to_string(state.num_qubits()) +
                                " qubits but spectrum has " + std::to_string(table.num_vars()));
  }
}

// One qubit of the mixer over a contiguous range of `len` amplitudes.
void rotate_qubit(double* __restrict re, double* __restrict im, std::size_t len, std::size_t stride,
                  double c, double s) {
  for (std::size_t base = 0; base < len; base += 2 * stride) {
    double* __restrict lr = re + base;
    double* __restrict li = im + base;
    double* __restrict hr = re + base + stride;
    double* __restrict hi = im + base + stride;
    for (std::size_t j = 0; j < stride; ++j) {
      const double xr = lr[j], xi = li[j];
      const double yr = hr[j], yi = hi[j];
      lr[j] = c * xr + s * yi;
      li[j] = c * xi - s * yr;
      hr[j] = c * yr + s * xi;
      hi[j] = c * yi - s * xr;
    }
  }
}

}  // namespace

StateVector StateVector::plus(int n) {
  check_width(n);
  const std::size_t dim = std::size_t{1} << n;
  return StateVector(n, std::vector<double>(dim, 1.0 / std::sqrt(static_cast<double>(dim))),
                     std::vector<double>(dim, 0.0));
}

StateVector StateVector::from_amplitudes(int n, std::span<const Amplitude> amps) {
  check_width(n);
  if (amps.size() != (std::size_t{1} << n)) throw std::invalid_argument("amplitude count must be 2^n");
  std::vector<double> re(amps.size()), im(amps.size());
  for (std::size_t x = 0; x < amps.size(); ++x) {
    re[x] = amps[x].real();
    im[x] = amps[x].imag();
  }
  return StateVector(n, std::move(re), std::move(im));
}

std::vector<Amplitude> StateVector::amplitudes() const {
  std::vector<Amplitude> out(size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = amplitude(x);
  return out;
}

void StateVector::reset_plus() {
  std::fill(re_.begin(), re_.end(), 1.0 / std::sqrt(static_cast<double>(re_.size())));
  std::fill(im_.begin(), im_.end(), 0.0);
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (std::size_t x = 0; x < size(); ++x) s += probability(x);
  return s;
}

void apply_phase(StateVector& state, const SpectrumTable& table, double scale, double gamma) {
  check_dims(state, table);
  const double angle = gamma * scale;
  if (angle == 0.0) return;
  // C(x) takes at most m+1 distinct values; tabulate the phases once.
  std::vector<double> pr(table.num_clauses() + 1), pi(table.num_clauses() + 1);
  for (int c = table.c_min(); c <= table.c_max(); ++c) {
    pr[c] = std::cos(angle * c);
    pi[c] = -std::sin(angle * c);
  }
  double* re = state.real().data();
  double* im = state.imag().data();
  const std::uint16_t* cx = table.values().data();
  const std::size_t dim = state.size();
  for (std::size_t x = 0; x < dim; ++x) {
    const double c = pr[cx[x]];
    const double s = pi[cx[x]];
    const double ar = re[x];
    const double ai = im[x];
    re[x] = ar * c - ai * s;
    im[x] = ar * s + ai * c;
  }
}

void apply_mixer(StateVector& state, double scale, double beta) {
  const double theta = beta * scale;
  if (theta == 0.0) return;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  // [a0; a1] <- [c, -is; -is, c] [a0; a1] for each pair differing in bit q.
  for (int q = 0; q < state.num_qubits(); ++q) {
    rotate_qubit(state.real().data(), state.imag().data(), state.size(), std::size_t{1} << q, c, s);
  }
}

void run_circuit_into(StateVector& state, const SpectrumTable& table,
                      const NormalizationInfo& norm, const GammaBetaParams& params) {
  check_dims(state, table);
  if (params.gamma.size() != params.beta.size()) {
    throw std::invalid_argument("gamma and beta lengths differ");
  }
  state.reset_plus();
  for (std::size_t d = 0; d < params.depth(); ++d) {
    apply_phase(state, table, norm.phase_scale, params.gamma[d]);
    apply_mixer(state, norm.mixer_scale, params.beta[d]);
  }
}

StateVector run_circuit(const SpectrumTable& table, const NormalizationInfo& norm,
                        const GammaBetaParams& params) {
  StateVector state = StateVector::plus(table.num_vars());
  run_circuit_into(state, table, norm, params);
  return state;
}

double expectation(const StateVector& state, const SpectrumTable& table, double scale,
                   EvalCounter* counter) {
  check_dims(state, table);
  if (counter != nullptr) counter->tick();
  const double* re = state.real().data();
  const double* im = state.imag().data();
  const std::uint16_t* cx = table.values().data();
  double acc = 0.0;
  for (std::size_t x = 0; x < state.size(); ++x) acc += cx[x] * (re[x] * re[x] + im[x] * im[x]);
  return scale * acc;
}

double target_probability(const StateVector& state, const SpectrumTable& table) {
  check_dims(state, table);
  double p = 0.0;
  for (std::uint32_t x : table.maximizers()) p += state.probability(x);
  return p;
}

}  // namespace apqaoa
