#include <benchmark/benchmark.h>

#include "peierls/algebra.hpp"
#include "peierls/landau.hpp"
#include "peierls/representations.hpp"
#include "peierls/spectral.hpp"

using namespace peierls;

static void BM_BlochEigenvalues(benchmark::State& state) {
  const auto q = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigenvalues(bloch_matrix(1, q, 0.3, 0.7)));
  }
}
BENCHMARK(BM_BlochEigenvalues)->Arg(3)->Arg(11)->Arg(30);

static void BM_Spectrum(benchmark::State& state) {
  const Flux flux = Flux::rational(2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(flux, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Spectrum)->Arg(16)->Arg(64);

static void BM_Butterfly(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(butterfly(static_cast<int>(state.range(0)), 16));
}
BENCHMARK(BM_Butterfly)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_AlgebraMultiply(benchmark::State& state) {
  const Flux flux = Flux::golden();
  const auto basis = derive_invariant_basis(static_cast<int>(state.range(0)), flux);
  AlgebraElement x;
  for (const auto& b : basis) x += b;
  for (auto _ : state) benchmark::DoNotOptimize(multiply(x, x, flux));
}
BENCHMARK(BM_AlgebraMultiply)->Arg(1)->Arg(2)->Arg(3);

static void BM_VerifyRelations(benchmark::State& state) {
  const Flux flux = Flux::sqrt2();
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations(build_wavefunction(flux, 5)));
}
BENCHMARK(BM_VerifyRelations);

static void BM_LandauBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_landau(1.0, 1.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LandauBuild)->Arg(10)->Arg(30);

BENCHMARK_MAIN();
