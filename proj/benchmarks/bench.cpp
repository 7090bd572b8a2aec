#include <benchmark/benchmark.h>

#include <random>

#include "symtoep/builtins.hpp"
#include "symtoep/precond.hpp"
#include "symtoep/spectral.hpp"
#include "symtoep/structured.hpp"
#include "symtoep/transforms.hpp"

using namespace symtoep;

namespace {

ScalarSymbol scalar(const std::string& name) {
  return std::get<ScalarSymbol>(builtin_symbol(name));
}

ComplexVector random_signal(Index n) {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexVector v(n);
  for (Index i = 0; i < n; ++i) v[i] = {dist(rng), dist(rng)};
  return v;
}

void BM_dft(benchmark::State& state) {
  const ComplexVector x = random_signal(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dft(x));
}
// 1024 exercises the radix-2 path, 157/589/1000 the Bluestein reduction
BENCHMARK(BM_dft)->Arg(157)->Arg(589)->Arg(1000)->Arg(1024);

void BM_build_toeplitz_theta2(benchmark::State& state) {
  const ScalarSymbol f = scalar("ex4.3");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_toeplitz(f, n));
}
BENCHMARK(BM_build_toeplitz_theta2)->Arg(200)->Arg(500)->Arg(1000);

void BM_sym_eigs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DenseMatrix yt = flip_left(build_toeplitz(scalar("ex4.2"), n));
  for (auto _ : state) benchmark::DoNotOptimize(sym_eigs(yt));
}
BENCHMARK(BM_sym_eigs)->Arg(128)->Arg(256)->Arg(512);

void BM_preconditioned_spectrum(benchmark::State& state) {
  const ScalarSymbol f = scalar("ex4.7");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        preconditioned_spectrum(f, n, CirculantKind::strang));
}
BENCHMARK(BM_preconditioned_spectrum)->Arg(157)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
