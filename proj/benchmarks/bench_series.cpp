#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qseries/partitions.hpp"
#include "qseries/products.hpp"
#include "qseries/series.hpp"

namespace {

using qs::CoefficientRing;
using qs::PowerSeries;

PowerSeries random_modular(std::uint64_t seed, std::uint32_t modulus,
                           long long trunc) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> any(0, modulus - 1);
  std::vector<long long> coeffs(static_cast<std::size_t>(trunc) + 1);
  for (auto& c : coeffs) c = any(rng);
  return PowerSeries(CoefficientRing::modular(modulus), coeffs);
}

PowerSeries random_exact(std::uint64_t seed, long long trunc) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> any(-1000, 1000);
  std::vector<long long> coeffs(static_cast<std::size_t>(trunc) + 1);
  for (auto& c : coeffs) c = any(rng);
  return PowerSeries(CoefficientRing::exact(), coeffs);
}

void BM_MulSchoolbookMod7(benchmark::State& state) {
  const long long n = state.range(0);
  const PowerSeries a = random_modular(1, 7, n);
  const PowerSeries b = random_modular(2, 7, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul_schoolbook(a, b));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_MulSchoolbookMod7)->RangeMultiplier(4)->Range(256, 16384)
    ->Complexity(benchmark::oNSquared);

void BM_MulNttMod7(benchmark::State& state) {
  const long long n = state.range(0);
  const PowerSeries a = random_modular(1, 7, n);
  const PowerSeries b = random_modular(2, 7, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul_ntt(a, b));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_MulNttMod7)->RangeMultiplier(4)->Range(256, 16384)
    ->Complexity(benchmark::oNLogN);

void BM_MulExact(benchmark::State& state) {
  const long long n = state.range(0);
  const PowerSeries a = random_exact(3, n);
  const PowerSeries b = random_exact(4, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(a, b));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_MulExact)->RangeMultiplier(4)->Range(256, 4096)
    ->Complexity(benchmark::oNSquared);

// Sparse-support gathering: an Euler product against a dense series.
void BM_MulSparseByDense(benchmark::State& state) {
  const long long n = state.range(0);
  const PowerSeries f1 = qs::euler_f(1, n, CoefficientRing::modular(7));
  const PowerSeries dense = random_modular(5, 7, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(f1, dense));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_MulSparseByDense)->RangeMultiplier(4)->Range(1024, 65536);

void BM_EulerProduct(benchmark::State& state) {
  const long long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qs::euler_f(1, n, CoefficientRing::exact()));
  }
}
BENCHMARK(BM_EulerProduct)->RangeMultiplier(8)->Range(1024, 524288);

void BM_PartitionNumbersExact(benchmark::State& state) {
  const long long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qs::a_c_series(1, n, CoefficientRing::exact()));
  }
}
BENCHMARK(BM_PartitionNumbersExact)->RangeMultiplier(4)->Range(256, 4096);

void BM_PartitionNumbersMod7(benchmark::State& state) {
  const long long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qs::a_c_series(1, n, CoefficientRing::modular(7)));
  }
}
BENCHMARK(BM_PartitionNumbersMod7)->RangeMultiplier(4)->Range(1024, 16384);

// The series the proof replay spends its time on.
void BM_BaseQuotientMod7(benchmark::State& state) {
  const long long n = state.range(0);
  const qs::EtaQuotient quotient = qs::EtaQuotient::parse("f1^-1 * f2^-53");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qs::expand(quotient, n, CoefficientRing::modular(7)));
  }
}
BENCHMARK(BM_BaseQuotientMod7)->RangeMultiplier(2)->Range(512, 4096);

}  // namespace

BENCHMARK_MAIN();
