#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "freqcnn/conv.hpp"
#include "freqcnn/dft.hpp"

namespace {

using namespace freqcnn;

std::vector<double> random_samples(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = 2.0 * static_cast<double>(engine() >> 11) * 0x1.0p-53 - 1.0;
  return v;
}

void BM_ConvDirect1D(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RealSignal1D f(random_samples(n, 1)), g(random_samples(n, 2));
  for (auto _ : state) benchmark::DoNotOptimize(conv_direct_1d(f, g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvDirect1D)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oNSquared);

void BM_ConvSpectral1D(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RealSignal1D f(random_samples(n, 1)), g(random_samples(n, 2));
  const auto plan = ConvPlan::make(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(conv_spectral_1d(f, g, plan));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvSpectral1D)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oNLogN);

void BM_ConvSpectral2D(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RealSignal2D f(n, n, random_samples(n * n, 3)), g(3, 3, random_samples(9, 4));
  const auto plan = ConvPlan::make_2d(n, n, 3, 3, ConvMode::Same);
  for (auto _ : state) benchmark::DoNotOptimize(conv_spectral_2d(f, g, plan));
}
BENCHMARK(BM_ConvSpectral2D)->Arg(16)->Arg(64)->Arg(128);

void BM_Fft(benchmark::State& state) {
  const RealSignal1D s(random_samples(static_cast<std::size_t>(state.range(0)), 5));
  for (auto _ : state) benchmark::DoNotOptimize(fft_1d(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Fft)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oNLogN);

void BM_DftNaive(benchmark::State& state) {
  const RealSignal1D s(random_samples(static_cast<std::size_t>(state.range(0)), 5));
  for (auto _ : state) benchmark::DoNotOptimize(dft_naive_1d(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DftNaive)->RangeMultiplier(4)->Range(64, 1024)->Complexity(benchmark::oNSquared);

}  // namespace

BENCHMARK_MAIN();
