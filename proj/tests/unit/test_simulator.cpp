#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"

#include "apqaoa/random_models.hpp"
#include "apqaoa/simulator.hpp"
#include "apqaoa/spectrum.hpp"

using namespace apqaoa;

namespace {

double max_abs_diff(const StateVector& s, const oracle::Vector& v) {
  double d = 0.0;
  for (std::size_t x = 0; x < v.size(); ++x) d = std::max(d, std::abs(s.amplitude(x) - v[x]));
  return d;
}

oracle::Vector random_state(int n, Rng& rng) {
  oracle::Vector v(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& a : v) {
    a = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    norm += std::norm(a);
  }
  for (auto& a : v) a /= std::sqrt(norm);
  return v;
}

CnfFormula formula(int n, int m, std::uint64_t seed) {
  return generate(ModelSpec{ModelKind::Satisfiable, n, m, 3, seed}).formula;
}

}  // namespace

TEST_SUITE("simulator") {
  TEST_CASE("uniform superposition") {
    const StateVector one = StateVector::plus(1);
    CHECK(one.amplitude(0).real() == doctest::Approx(std::sqrt(0.5)));
    CHECK(one.amplitude(1).real() == doctest::Approx(std::sqrt(0.5)));
    const StateVector ten = StateVector::plus(10);
    for (std::size_t x = 0; x < ten.size(); ++x) CHECK(ten.amplitude(x) == Amplitude(1.0 / 32, 0.0));
    CHECK(ten.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));

    const GenerationResult r = generate(ModelSpec{ModelKind::Satisfiable, 10, 59, 3, 2});
    const SpectrumTable t = SpectrumTable::build(r.formula);
    CHECK(target_probability(ten, t) == doctest::Approx(r.interpretations.size() / 1024.0).epsilon(1e-14));
  }

  TEST_CASE("phase layer") {
    const CnfFormula f = formula(3, 4, 5);
    const SpectrumTable t = SpectrumTable::build(f);
    Rng rng(1);
    const oracle::Vector psi = random_state(3, rng);

    StateVector s = StateVector::from_amplitudes(3, psi);
    apply_phase(s, t, 1.0, 0.0);
    CHECK(max_abs_diff(s, psi) == 0.0);

    s = StateVector::from_amplitudes(3, psi);
    apply_phase(s, t, 0.8, 0.37);
    CHECK(max_abs_diff(s, oracle::matvec(oracle::phase(f, 0.8 * 0.37), psi)) <= 1e-12);

    CnfFormula single(3, 3);
    single.add_clause(Clause({Literal::from_int(-1), Literal::from_int(2), Literal::from_int(3)}));
    StateVector u = StateVector::plus(3);
    apply_phase(u, SpectrumTable::build(single), 1.0, std::numbers::pi);
    for (std::uint32_t x = 0; x < 8; ++x) {
      const double expected = (x == 0b001 ? 1.0 : -1.0) / std::sqrt(8.0);
      CHECK(u.amplitude(x).real() == doctest::Approx(expected).epsilon(1e-12));
      CHECK(std::abs(u.amplitude(x).imag()) <= 1e-12);
    }
  }

  TEST_CASE("phase covariance is exact") {
    const SpectrumTable t = SpectrumTable::build(formula(6, 20, 9));
    StateVector a = StateVector::plus(6), b = StateVector::plus(6);
    apply_phase(a, t, 0.125, 2.5);
    apply_phase(b, t, 1.0, 0.125 * 2.5);
    for (std::size_t x = 0; x < a.size(); ++x) CHECK(a.amplitude(x) == b.amplitude(x));
  }

  TEST_CASE("mixer layer") {
    Rng rng(4);
    const oracle::Vector psi = random_state(3, rng);
    StateVector s = StateVector::from_amplitudes(3, psi);
    apply_mixer(s, 0.5, 0.0);
    CHECK(max_abs_diff(s, psi) == 0.0);

    s = StateVector::from_amplitudes(3, psi);
    apply_mixer(s, 1.0 / 6, 0.81);
    CHECK(max_abs_diff(s, oracle::matvec(oracle::mixer(3, 0.81 / 6), psi)) <= 1e-12);

    // s_B = 1/2, beta = pi: -i X on one qubit.
    StateVector q = StateVector::from_amplitudes(1, std::vector<Amplitude>{{0.6, 0.0}, {0.0, 0.8}});
    apply_mixer(q, 0.5, std::numbers::pi);
    CHECK(std::abs(q.amplitude(0) - Amplitude(0.8, 0.0)) <= 1e-12);
    CHECK(std::abs(q.amplitude(1) - Amplitude(0.0, -0.6)) <= 1e-12);
    StateVector p = StateVector::plus(1);
    apply_mixer(p, 0.5, std::numbers::pi);
    CHECK(std::abs(p.amplitude(0) - Amplitude(0.0, -std::sqrt(0.5))) <= 1e-12);
  }

  TEST_CASE("circuit matches the dense oracle") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 1 + trial % 4;
      const int k = std::min(n, 3);
      const CnfFormula f = generate(ModelSpec{ModelKind::Uniform, n, 3 + trial % 5, k, rng.next_u64()}).formula;
      const SpectrumTable t = SpectrumTable::build(f);
      NormalizationInfo norm;
      norm.phase_scale = rng.uniform(0.1, 1.0);
      norm.mixer_scale = rng.uniform(0.1, 1.0);
      GammaBetaParams params;
      const int p = trial % 3;
      for (int d = 0; d < p; ++d) {
        params.gamma.push_back(rng.uniform(-3, 3));
        params.beta.push_back(rng.uniform(-3, 3));
      }
      const StateVector s = run_circuit(t, norm, params);
      const oracle::Vector ref = oracle::evolve(f, norm.phase_scale, norm.mixer_scale, params.gamma, params.beta);
      CHECK(max_abs_diff(s, ref) <= 1e-12);
      CHECK(expectation(s, t, 0.3) == doctest::Approx(oracle::expectation(f, ref, 0.3)).epsilon(1e-12));
    }
  }

  TEST_CASE("p = 0 gives the uniform state and unitarity holds at depth n") {
    const SpectrumTable t = SpectrumTable::build(formula(10, 59, 1));
    const NormalizationInfo norm = normalize(t, NormalizationMode::Estimated);
    const StateVector zero = run_circuit(t, norm, GammaBetaParams{});
    for (std::size_t x = 0; x < zero.size(); ++x) CHECK(zero.amplitude(x) == Amplitude(1.0 / 32, 0.0));

    Rng rng(6);
    GammaBetaParams params;
    for (int d = 0; d < 10; ++d) {
      params.gamma.push_back(rng.uniform(-10, 10));
      params.beta.push_back(rng.uniform(-10, 10));
    }
    CHECK(std::abs(run_circuit(t, norm, params).norm_squared() - 1.0) <= 1e-10);
  }

  TEST_CASE("expectation") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const GenerationResult r = generate(ModelSpec{ModelKind::Satisfiable, 9, 40, 3, seed});
      const SpectrumTable t = SpectrumTable::build(r.formula);
      EvalCounter counter;
      CHECK(expectation(StateVector::plus(9), t, 1.0, &counter) == doctest::Approx(7.0 * 40 / 8).epsilon(1e-13));
      CHECK(counter.count() == 1);

      std::vector<Amplitude> basis(512, 0.0);
      basis[r.interpretations.front()] = 1.0;
      const StateVector b = StateVector::from_amplitudes(9, basis);
      CHECK(expectation(b, t, 1.0) == 40.0);
      CHECK(target_probability(b, t) == 1.0);

      // Global phase invariance.
      Rng rng(seed);
      const oracle::Vector psi = random_state(9, rng);
      std::vector<Amplitude> rotated(psi.size());
      for (std::size_t x = 0; x < psi.size(); ++x) rotated[x] = psi[x] * std::polar(1.0, 0.9);
      CHECK(expectation(StateVector::from_amplitudes(9, psi), t, 1.0) ==
            doctest::Approx(expectation(StateVector::from_amplitudes(9, rotated), t, 1.0)).epsilon(1e-13));
    }
  }

  TEST_CASE("no-op layers keep the target probability") {
    const SpectrumTable t = SpectrumTable::build(formula(8, 47, 3));
    const NormalizationInfo norm = normalize(t, NormalizationMode::Estimated);
    const double before = target_probability(StateVector::plus(8), t);
    const StateVector after = run_circuit(t, norm, GammaBetaParams{{0, 0, 0}, {0, 0, 0}});
    CHECK(target_probability(after, t) == doctest::Approx(before).epsilon(1e-14));
  }

  TEST_CASE("state size mismatch is rejected") {
    CHECK_THROWS(StateVector::from_amplitudes(2, std::vector<Amplitude>(3)));
  }
}
