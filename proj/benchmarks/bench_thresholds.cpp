#include <benchmark/benchmark.h>

#include "ct3/thresholds.hpp"
#include "ct3/verifier.hpp"
#include "ct3/witness.hpp"

using namespace ct3;

static void BM_c_member_hit(benchmark::State& state) {
  const Rational q(7, 19);
  for (auto _ : state) benchmark::DoNotOptimize(c_member(q, 19));
}
BENCHMARK(BM_c_member_hit);

static void BM_c_member_exhausted(benchmark::State& state) {
  const Rational q(4, 5);
  for (auto _ : state) benchmark::DoNotOptimize(c_member(q, state.range(0)));
}
BENCHMARK(BM_c_member_exhausted)->Arg(5)->Arg(60)->Arg(240);

static void BM_ht2_member_hit(benchmark::State& state) {
  const Rational q(7, 19);
  for (auto _ : state) benchmark::DoNotOptimize(ht2_member(q, 19));
}
BENCHMARK(BM_ht2_member_hit);

static void BM_represent(benchmark::State& state) {
  i64 m = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(represent(m, 37, 53));
    m = m % 5000 + 1;
  }
}
BENCHMARK(BM_represent);

static void BM_enumerate_table_interval(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_interval(Rational(1, 3), Rational(1, 2), 44, 10));
}
BENCHMARK(BM_enumerate_table_interval);

static void BM_certify_witness(benchmark::State& state) {
  const CParams p{3, 4, 1, 4};
  for (auto _ : state) benchmark::DoNotOptimize(certify_witness(p));
}
BENCHMARK(BM_certify_witness);

static void BM_sweep_smooth(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_smooth(8, state.range(0)));
}
BENCHMARK(BM_sweep_smooth)->Arg(200)->Arg(500);

static void BM_sweep_ca(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_ca(20, state.range(0)));
}
BENCHMARK(BM_sweep_ca)->Arg(500)->Arg(2000);
