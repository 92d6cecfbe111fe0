#include "apqaoa/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "apqaoa/random_models.hpp"

namespace apqaoa {

SpectrumTable SpectrumTable::build(const CnfFormula& formula) {
  const int n = formula.num_vars();
  const int m = formula.num_clauses();
  if (n < 1 || n > kMaxVariables) {
    throw std::length_error("spectrum: n=" + std::to_string(n) + " outside [1, " +
                            std::to_string(kMaxVariables) + "]");
  }
  if (m > std::numeric_limits<std::uint16_t>::max()) {
    throw std::length_error("spectrum: too many clauses for 16-bit table");
  }

  SpectrumTable t;
  t.n_ = n;
  t.m_ = m;
  t.k_ = formula.k();
  t.values_.assign(std::size_t{1} << n, static_cast<std::uint16_t>(m));
  for (const Clause& c : formula.clauses()) {
    for_each_falsifying(n, c, [&](std::uint32_t x) { --t.values_[x]; });
  }
  const auto [lo, hi] = std::minmax_element(t.values_.begin(), t.values_.end());
  t.c_min_ = *lo;
  t.c_max_ = *hi;
  for (std::uint32_t x = 0; x < t.values_.size(); ++x) {
    if (t.values_[x] == t.c_max_) t.maximizers_.push_back(x);
  }
  return t;
}

double binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

namespace {

void check_l(int n, int k, int l) {
  if (k < 1 || k > n) throw std::invalid_argument("mu_kx: need 1 <= k <= n");
  if (l < 0 || l > n) {
    throw std::invalid_argument("mu_kx: l=" + std::to_string(l) + " outside [0, " + std::to_string(n) + "]");
  }
}

}  // namespace

double mu_kx(int n, int k, int l) {
  check_l(n, k, l);
  const double q = std::ldexp(1.0, k) - 1.0;
  return (q - 1.0) / q + binomial(l, k) / (q * binomial(n, k));
}

double sigma2_kx(int n, int k, int l) {
  check_l(n, k, l);
  const double q = std::ldexp(1.0, k) - 1.0;
  const double mu = mu_kx(n, k, l);
  const double cn = binomial(n, k);
  return (1.0 - mu) * (1.0 - mu) * mu + mu * mu * (cn - binomial(l, k)) / (q * cn);
}

double estimate_GE(int /*n*/, int k, int m, double c0) {
  if (m < 1) throw std::invalid_argument("estimate_GE requires m >= 1");
  const double q = std::ldexp(1.0, k) - 1.0;
  return m * (1.0 / q + c0 / std::sqrt(m * q));
}

double exact_G0(const SpectrumTable& table) {
  return static_cast<double>(table.c_max() - table.c_min());
}

NormalizationInfo normalize(const SpectrumTable& table, NormalizationMode mode, double c0) {
  NormalizationInfo info;
  info.c0 = c0;
  info.G_0 = exact_G0(table);
  if (table.num_clauses() < 1) {
    throw std::domain_error("normalize: empty formula has zero spectral spread");
  }
  info.G_E = estimate_GE(table.num_vars(), table.k(), table.num_clauses(), c0);
  double spread = info.G_E;
  if (mode == NormalizationMode::Exact) {
    if (*info.G_0 <= 0.0) throw std::domain_error("normalize: exact spread G_0 is zero");
    spread = *info.G_0;
  }
  info.phase_scale = 1.0 / spread;
  info.energy_scale = info.phase_scale;
  info.mixer_scale = 1.0 / (2.0 * table.num_vars());
  return info;
}

}  // namespace apqaoa
