#include <benchmark/benchmark.h>

#include "cvspec/catalog.hpp"
#include "cvspec/oracle.hpp"
#include "cvspec/yamabe.hpp"

using namespace cvspec;

static void BM_FdSolve(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fd_lambda1({N, 2.0}));
}
BENCHMARK(BM_FdSolve)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_HopfEnumeration(benchmark::State& state) {
  const int k_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hopf_joint_spectrum(2, k_max));
}
BENCHMARK(BM_HopfEnumeration)->Arg(30)->Arg(100)->Arg(300);

static void BM_TorusEnumeration(benchmark::State& state) {
  const int r2 = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(torus_joint_spectrum(3, {r2}));
}
BENCHMARK(BM_TorusEnumeration)->Arg(16)->Arg(64)->Arg(256);

static void BM_Lambda1OfT(benchmark::State& state) {
  const auto spec = hopf_joint_spectrum(2, static_cast<int>(state.range(0)));
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda1_of_t(spec, t));
    t = t < 10.0 ? t * 1.01 : 0.1;
  }
}
BENCHMARK(BM_Lambda1OfT)->Arg(30)->Arg(300);

static void BM_ExactStabilityRegion(benchmark::State& state) {
  const auto e = make_entry("sphere4n3", 3);
  for (auto _ : state) benchmark::DoNotOptimize(exact_stability_region(e.geometry, e.exact_lambda1));
}
BENCHMARK(BM_ExactStabilityRegion);
BENCHMARK_MAIN();
