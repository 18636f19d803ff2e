#include <benchmark/benchmark.h>

#include <vector>

#include "frobcov/bridge.hpp"
#include "frobcov/covering.hpp"
#include "frobcov/frobenius.hpp"
#include "frobcov/intvec.hpp"
#include "frobcov/randlat.hpp"
#include "frobcov/stats.hpp"

using namespace frobcov;

namespace {

std::vector<IntVec> random_vectors(int d, Int hi, std::size_t n) {
  CounterRng rng(17, 0);
  std::vector<IntVec> out;
  while (out.size() < n) {
    IntVec a(static_cast<std::size_t>(d));
    for (auto& x : a) x = rng.uniform_int(2, hi);
    if (gcd_of(a) == 1) out.push_back(a);
  }
  return out;
}

std::vector<FloatBasis> haar_bases(std::size_t n) {
  CounterRng rng(18, 0);
  std::vector<FloatBasis> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(sample_haar_2d(rng).basis);
  return out;
}

void BM_Frobenius(benchmark::State& state) {
  const auto vs = random_vectors(static_cast<int>(state.range(0)), state.range(1), 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(frobenius(vs[i++ % vs.size()]).F);
}
BENCHMARK(BM_Frobenius)->Args({3, 150})->Args({3, 1000})->Args({5, 1000});

void BM_FrobeniusBruteforce(benchmark::State& state) {
  const auto vs = random_vectors(3, state.range(0), 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_bruteforce(vs[i++ % vs.size()]));
}
BENCHMARK(BM_FrobeniusBruteforce)->Arg(40)->Arg(150);

void BM_CoveringExactFloat(benchmark::State& state) {
  const auto bs = haar_bases(256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(covering_radius_exact_2d(bs[i++ % bs.size()]).rho);
}
BENCHMARK(BM_CoveringExactFloat);

void BM_BridgeExact(benchmark::State& state) {
  const auto vs = random_vectors(3, state.range(0), 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bridge(vs[i++ % vs.size()]).rho_w);
}
BENCHMARK(BM_BridgeExact)->Arg(60)->Arg(1000);

void BM_CoveringGrid(benchmark::State& state) {
  const auto bs = haar_bases(16);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(covering_radius_grid(bs[i++ % bs.size()], static_cast<int>(state.range(0))).value);
  }
}
BENCHMARK(BM_CoveringGrid)->Arg(32)->Arg(256);

void BM_SampleHaar(benchmark::State& state) {
  CounterRng rng(19, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_haar_2d(rng).y);
}
BENCHMARK(BM_SampleHaar);

void BM_SampleSchmidt(benchmark::State& state) {
  CounterRng rng(20, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_schmidt(3, state.range(0), rng).a[0]);
}
BENCHMARK(BM_SampleSchmidt)->Arg(1000)->Arg(100000);

void BM_PsiFrobenius(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi_from_frobenius(3, state.range(0), Box::unit_cube(3)).count);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PsiFrobenius)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
