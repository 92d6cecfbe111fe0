#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "apqaoa/spectrum.hpp"

namespace apqaoa {

using Amplitude = std::complex<double>;

/// 2^n complex amplitudes, basis index x encoded as in Assignment. Real and
/// imaginary parts are stored in separate arrays so the layer kernels
/// vectorize without shuffles.
class StateVector {
 public:
  /// Uniform superposition |+>^n.
  static StateVector plus(int n);
  static StateVector from_amplitudes(int n, std::span<const Amplitude> amps);

  int num_qubits() const { return n_; }
  std::size_t size() const { return re_.size(); }

  Amplitude amplitude(std::size_t x) const { return {re_[x], im_[x]}; }
  void set_amplitude(std::size_t x, Amplitude a) {
    re_[x] = a.real();
    im_[x] = a.imag();
  }
  double probability(std::size_t x) const { return re_[x] * re_[x] + im_[x] * im_[x]; }
  std::vector<Amplitude> amplitudes() const;

  std::span<double> real() { return re_; }
  std::span<double> imag() { return im_; }
  std::span<const double> real() const { return re_; }
  std::span<const double> imag() const { return im_; }

  double norm_squared() const;

  /// Overwrites the amplitudes with |+>^n without reallocating.
  void reset_plus();

 private:
  StateVector(int n, std::vector<double> re, std::vector<double> im)
      : n_(n), re_(std::move(re)), im_(std::move(im)) {}

  int n_;
  std::vector<double> re_;
  std::vector<double> im_;
};

inline StateVector init_plus(int n) { return StateVector::plus(n); }

/// Per-layer angles. gamma[d] drives the phase layer, beta[d] the mixer.
struct GammaBetaParams {
  std::vector<double> gamma;
  std::vector<double> beta;

  std::size_t depth() const { return gamma.size(); }
};

/// Counts expectation evaluations: the unit of optimization cost.
class EvalCounter {
 public:
  std::uint64_t count() const { return count_; }
  void tick() { ++count_; }

 private:
  std::uint64_t count_ = 0;
};

/// psi_x <- psi_x * exp(-i * gamma * scale * C(x)).
void apply_phase(StateVector& state, const SpectrumTable& table, double scale, double gamma);

/// exp(-i * beta * scale * sum_j X_j), applied as one cos/sin butterfly per
/// qubit.
void apply_mixer(StateVector& state, double scale, double beta);

/// Prepares |+>^n and applies, for d = 1..p, the phase layer gamma_d then the
/// mixer layer beta_d, with the scales taken from `norm`.
StateVector run_circuit(const SpectrumTable& table, const NormalizationInfo& norm,
                        const GammaBetaParams& params);

/// Same as run_circuit, reusing `state`'s storage.
void run_circuit_into(StateVector& state, const SpectrumTable& table,
                      const NormalizationInfo& norm, const GammaBetaParams& params);

/// sum_x scale * C(x) * |psi_x|^2. Ticks `counter` once when given.
double expectation(const StateVector& state, const SpectrumTable& table, double scale,
                   EvalCounter* counter = nullptr);

/// Probability mass on the maximizers of C.
double target_probability(const StateVector& state, const SpectrumTable& table);

}  // namespace apqaoa
