#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "apqaoa/cnf.hpp"

namespace apqaoa {

/// Diagonal of the problem Hamiltonian: the satisfied-clause count C(x) for
/// every x in [0, 2^n). The constant -m shift of the clause-projector form is
/// dropped, so all energies here are C(x) itself.
class SpectrumTable {
 public:
  static SpectrumTable build(const CnfFormula& formula);

  int num_vars() const { return n_; }
  int num_clauses() const { return m_; }
  int k() const { return k_; }
  std::size_t size() const { return values_.size(); }

  const std::vector<std::uint16_t>& values() const { return values_; }
  int operator[](std::uint32_t x) const { return values_[x]; }

  int c_max() const { return c_max_; }
  int c_min() const { return c_min_; }
  /// Every x with C(x) == c_max, ascending. Never empty.
  const std::vector<std::uint32_t>& maximizers() const { return maximizers_; }

  bool satisfiable() const { return c_max_ == m_; }

 private:
  SpectrumTable() = default;

  int n_ = 0;
  int m_ = 0;
  int k_ = 0;
  std::vector<std::uint16_t> values_;
  int c_max_ = 0;
  int c_min_ = 0;
  std::vector<std::uint32_t> maximizers_;
};

inline SpectrumTable build_spectrum(const CnfFormula& formula) { return SpectrumTable::build(formula); }

/// Mean of one F_f clause's satisfaction indicator at an assignment agreeing
/// with the planted interpretation on `l` of the n variables.
double mu_kx(int n, int k, int l);
/// Variance matching mu_kx.
double sigma2_kx(int n, int k, int l);

/// Estimated spectral spread G_E = m * (1/(2^k-1) + c0/sqrt(m*(2^k-1))).
double estimate_GE(int n, int k, int m, double c0);

/// Exact spread c_max - c_min.
double exact_G0(const SpectrumTable& table);

enum class NormalizationMode { Estimated, Exact };

struct NormalizationInfo {
  double G_E = 0.0;
  std::optional<double> G_0;
  double c0 = 3.0;
  /// Multiplier on C(x) inside the phase layer exp(-i gamma s_C C(x)).
  double phase_scale = 1.0;
  /// Per-qubit multiplier on beta inside the mixer layer.
  double mixer_scale = 1.0;
  /// Multiplier on C(x) when reporting <H_C>. Equals the initial phase scale;
  /// rescaling the evolution (AP setting) leaves it untouched.
  double energy_scale = 1.0;
};

inline constexpr double kDefaultC0 = 3.0;

/// Normalizes H_C by G_E (estimated) or G_0 (exact) and H_B by 2n.
NormalizationInfo normalize(const SpectrumTable& table, NormalizationMode mode,
                            double c0 = kDefaultC0);

/// Binomial coefficient as a double; zero when k > n.
double binomial(int n, int k);

}  // namespace apqaoa
