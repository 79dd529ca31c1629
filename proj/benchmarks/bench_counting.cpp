#include <benchmark/benchmark.h>

#include "qcubic/constant.hpp"
#include "qcubic/counting.hpp"
#include "qcubic/field.hpp"
#include "qcubic/primes.hpp"

using namespace qcubic;

static void BM_CountTorsor9(benchmark::State& state) {
  const Field F = make_field(-1);
  const long double B = static_cast<long double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_torsor9(F, B, 1));
}
BENCHMARK(BM_CountTorsor9)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_CountDivisorOracle(benchmark::State& state) {
  const Field F = make_field(-1);
  const long double B = static_cast<long double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_divisor_oracle(F, B, 1));
}
BENCHMARK(BM_CountDivisorOracle)->Arg(100)->Arg(500);

static void BM_Gcd(benchmark::State& state) {
  const Field F = make_field(-163);
  const QuadInt x{5241, -872}, y{1234, 987};
  for (auto _ : state) benchmark::DoNotOptimize(gcd(F, x, y));
}
BENCHMARK(BM_Gcd);

static void BM_CoprimeTest(benchmark::State& state) {
  const Field F = make_field(-1);
  const QuadInt x{512, 37}, y{14, -99};
  for (auto _ : state) benchmark::DoNotOptimize(coprime(F, x, y));
}
BENCHMARK(BM_CoprimeTest);

static void BM_CircleCount(benchmark::State& state) {
  const Field F = make_field(-7);
  for (auto _ : state)
    benchmark::DoNotOptimize(circle_count(F, static_cast<long double>(state.range(0))));
}
BENCHMARK(BM_CircleCount)->Arg(1'000'000);

static void BM_EulerProduct(benchmark::State& state) {
  const Field F = make_field(-3);
  for (auto _ : state)
    benchmark::DoNotOptimize(euler_product(F, static_cast<std::uint64_t>(state.range(0))).partial);
}
BENCHMARK(BM_EulerProduct)->Arg(10'000)->Arg(100'000);

BENCHMARK_MAIN();
