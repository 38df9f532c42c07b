#include <cmath>

#include <benchmark/benchmark.h>

#include "dhist/gaussian_analysis.hpp"
#include "dhist/oracle.hpp"
#include "dhist/quadrature.hpp"

using namespace dhist;

namespace {

OscillatorParams base_params() {
  OscillatorParams p;
  p.m = 1.0;
  p.omega = 1.0;
  p.T = M_PI / 2.0;
  p.f = TimeFunction::constant(1.0);
  return p;
}

void BM_Integrate1D(benchmark::State& state) {
  const QuadratureSpec spec{1e-10, 1e-13, 40, 8.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(
        [](double x) { return std::exp(-x * x) * std::cos(3.0 * x); }, -8.0,
        8.0, spec));
  }
}
BENCHMARK(BM_Integrate1D);

void BM_ParticleFactors(benchmark::State& state) {
  double beta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(particle_factors(beta));
    beta += 1e-6;  // defeat value caching by the optimiser
  }
}
BENCHMARK(BM_ParticleFactors);

void BM_PointerFactors(benchmark::State& state) {
  double gamma = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pointer_factors(gamma));
    gamma += 1e-6;
  }
}
BENCHMARK(BM_PointerFactors);

void BM_OracleFactorI(benchmark::State& state) {
  const QuadratureSpec spec{1e-6, 1e-9, 40, 8.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_factor(FactorKind::I, 1.0, spec));
  }
}
BENCHMARK(BM_OracleFactorI);

void BM_OracleFactorG(benchmark::State& state) {
  const QuadratureSpec spec{1e-6, 1e-9, 40, 8.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_factor(FactorKind::G, 1.0, spec));
  }
}
BENCHMARK(BM_OracleFactorG);

void BM_GeneralFunctionalModulus(benchmark::State& state) {
  const auto p = base_params();
  const Partition part{1.0, 0.0};
  const ProductState st{GaussianSpec{0.0, 0.25}, GaussianSpec{0.0, 0.3}};
  const QuadratureSpec spec{1e-5, 1e-8, 40, 8.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oracle_general_functional(0, 1, st, p, part, spec));
  }
}
BENCHMARK(BM_GeneralFunctionalModulus);

}  // namespace

BENCHMARK_MAIN();
