#include <benchmark/benchmark.h>

#include "apqaoa/random_models.hpp"
#include "apqaoa/simulator.hpp"
#include "apqaoa/spectrum.hpp"
#include "apqaoa/strategies.hpp"

namespace {

apqaoa::CnfFormula instance(int n) {
  apqaoa::ModelSpec spec{apqaoa::ModelKind::Satisfiable, n, apqaoa::m_star(n), 3, 42};
  return apqaoa::generate(spec).formula;
}

void BM_Mixer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  apqaoa::StateVector psi = apqaoa::StateVector::plus(n);
  for (auto _ : state) {
    apqaoa::apply_mixer(psi, 1.0 / (2 * n), 0.3);
    benchmark::DoNotOptimize(psi.real().data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_Mixer)->DenseRange(10, 20, 2);

void BM_Phase(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const apqaoa::SpectrumTable table = apqaoa::SpectrumTable::build(instance(n));
  apqaoa::StateVector psi = apqaoa::StateVector::plus(n);
  for (auto _ : state) {
    apqaoa::apply_phase(psi, table, 0.03, 0.7);
    benchmark::DoNotOptimize(psi.real().data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_Phase)->DenseRange(10, 20, 2);

void BM_Expectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const apqaoa::Problem problem = apqaoa::Problem::from_formula(instance(n));
  apqaoa::EvalCounter counter;
  apqaoa::QaoaEvaluator eval(problem, counter);
  const apqaoa::GammaBetaParams params = apqaoa::qaa_init(n);
  for (auto _ : state) benchmark::DoNotOptimize(eval.negative_expectation(params));
}
BENCHMARK(BM_Expectation)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SpectrumBuild(benchmark::State& state) {
  const apqaoa::CnfFormula formula = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apqaoa::SpectrumTable::build(formula).c_max());
}
BENCHMARK(BM_SpectrumBuild)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_GenerateSatisfiable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    apqaoa::ModelSpec spec{apqaoa::ModelKind::Satisfiable, n, apqaoa::m_star(n), 3, ++seed};
    benchmark::DoNotOptimize(apqaoa::generate(spec).interpretations.size());
  }
}
BENCHMARK(BM_GenerateSatisfiable)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
