#include <benchmark/benchmark.h>

#include "lfw/arithmetic.hpp"
#include "lfw/characters.hpp"
#include "lfw/lfunc.hpp"
#include "lfw/zeros.hpp"

namespace {

void BM_L_critical_line(benchmark::State& state) {
  const auto chi = lfw::character({5, 2});
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lfw::L(lfw::cplx(0.5, t), chi));
}
BENCHMARK(BM_L_critical_line)->Arg(10)->Arg(100)->Arg(1000);

void BM_L_derivative(benchmark::State& state) {
  const auto chi = lfw::character({4, 1});
  for (auto _ : state) benchmark::DoNotOptimize(lfw::L_derivative(lfw::cplx(0.5, 50.0), chi, 1));
}
BENCHMARK(BM_L_derivative);

void BM_ell_sieve(benchmark::State& state) {
  for (auto _ : state) {
    lfw::EllTable t(static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(t[static_cast<std::size_t>(state.range(0))]);
  }
}
BENCHMARK(BM_ell_sieve)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_gauss_sum(benchmark::State& state) {
  const auto chars = lfw::enumerate_characters(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& c : chars) benchmark::DoNotOptimize(lfw::gauss_sum(c));
  }
}
BENCHMARK(BM_gauss_sum)->Arg(24)->Arg(97);

void BM_zero_scan(benchmark::State& state) {
  const auto chi = lfw::character({static_cast<std::uint32_t>(state.range(0)), 1});
  for (auto _ : state) benchmark::DoNotOptimize(lfw::scan_zeros(chi, 0.01, 100.0));
}
BENCHMARK(BM_zero_scan)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
