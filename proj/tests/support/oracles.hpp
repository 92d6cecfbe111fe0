#pragma once

// Reference implementations used as test oracles. Deliberately naive: no
// shared code with the library beyond the formula containers.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "apqaoa/cnf.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Matrix = std::vector<std::vector<cplx>>;
using Vector = std::vector<cplx>;

// Satisfied-clause count, literal by literal.
inline int satisfied(const apqaoa::CnfFormula& f, std::uint32_t x) {
  int count = 0;
  for (const apqaoa::Clause& c : f.clauses()) {
    bool sat = false;
    for (const apqaoa::Literal& lit : c.literals()) {
      const bool v = (x >> (lit.var - 1)) & 1u;
      if (v != lit.negated) sat = true;
    }
    count += sat ? 1 : 0;
  }
  return count;
}

inline Matrix identity(std::size_t d) {
  Matrix m(d, Vector(d, 0.0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1.0;
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t d = a.size();
  Matrix out(d, Vector(d, 0.0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline Vector matvec(const Matrix& m, const Vector& v) {
  Vector out(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

// a (x) b with a acting on the more significant bits.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t da = a.size(), db = b.size();
  Matrix out(da * db, Vector(da * db, 0.0));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out[i * db + k][j * db + l] = a[i][j] * b[k][l];
  return out;
}

// exp(-i angle X) = cos(angle) I - i sin(angle) X.
inline Matrix rx(double angle) {
  const cplx c = std::cos(angle), s = cplx(0, -std::sin(angle));
  return {{c, s}, {s, c}};
}

inline Matrix mixer(int n, double angle) {
  Matrix m = {{1.0}};
  for (int q = 0; q < n; ++q) m = kron(m, rx(angle));
  return m;
}

inline Matrix phase(const apqaoa::CnfFormula& f, double angle) {
  const std::size_t d = std::size_t{1} << f.num_vars();
  Matrix m(d, Vector(d, 0.0));
  for (std::size_t x = 0; x < d; ++x) m[x][x] = std::exp(cplx(0, -angle * satisfied(f, static_cast<std::uint32_t>(x))));
  return m;
}

inline Vector plus(int n) {
  const std::size_t d = std::size_t{1} << n;
  return Vector(d, 1.0 / std::sqrt(static_cast<double>(d)));
}

// Full QAOA circuit with explicit scales.
inline Vector evolve(const apqaoa::CnfFormula& f, double s_c, double s_b, const std::vector<double>& gamma,
                     const std::vector<double>& beta) {
  Vector psi = plus(f.num_vars());
  for (std::size_t d = 0; d < gamma.size(); ++d) {
    psi = matvec(phase(f, gamma[d] * s_c), psi);
    psi = matvec(mixer(f.num_vars(), beta[d] * s_b), psi);
  }
  return psi;
}

inline double expectation(const apqaoa::CnfFormula& f, const Vector& psi, double scale) {
  double acc = 0.0;
  for (std::size_t x = 0; x < psi.size(); ++x) acc += scale * satisfied(f, static_cast<std::uint32_t>(x)) * std::norm(psi[x]);
  return acc;
}

inline double chi_square_statistic(const std::vector<double>& observed, const std::vector<double>& expected) {
  double s = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) s += (observed[i] - expected[i]) * (observed[i] - expected[i]) / expected[i];
  return s;
}

inline double chi_square_critical(double dof, double alpha) {
  return boost::math::quantile(boost::math::complement(boost::math::chi_squared(dof), alpha));
}

inline double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
