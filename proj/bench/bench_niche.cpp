// Serial vs OpenMP trial loops, and reference vs staircase derivation.

#include <benchmark/benchmark.h>

#include "niche/derive.hpp"
#include "niche/harness.hpp"
#include "niche/witness.hpp"

namespace {

using niche::harness::Execution;

niche::harness::GeneratorConfig bench_config(std::int64_t trials) {
  niche::harness::GeneratorConfig cfg;
  cfg.seed = 1;
  cfg.trials = static_cast<std::uint64_t>(trials);
  cfg.third_offsets = true;
  return cfg;
}

void BM_SuiteSerial(benchmark::State& state) {
  const auto cfg = bench_config(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(niche::harness::run_suite(cfg, Execution::Serial));
}

void BM_SuiteParallel(benchmark::State& state) {
  const auto cfg = bench_config(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(niche::harness::run_suite(cfg, Execution::Parallel));
}

void BM_SearchSerial(benchmark::State& state) {
  const auto cfg = bench_config(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(niche::harness::search_open_question(cfg, Execution::Serial));
}

void BM_SearchParallel(benchmark::State& state) {
  const auto cfg = bench_config(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(niche::harness::search_open_question(cfg, Execution::Parallel));
}

niche::Dpo large_instance(std::int64_t points) {
  niche::harness::GeneratorConfig cfg;
  cfg.seed = 99;
  cfg.min_points = cfg.max_points = static_cast<std::size_t>(points);
  cfg.box_hi = 200;
  cfg.third_offsets = false;
  return niche::harness::random_dpo(cfg, 0);
}

void BM_DeriveReference(benchmark::State& state) {
  const auto d = large_instance(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(niche::derive_graph(d, niche::GraphKind::Niche, niche::DeriveMethod::Reference));
  }
}

void BM_DeriveStaircase(benchmark::State& state) {
  const auto d = large_instance(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(niche::derive_graph(d, niche::GraphKind::Niche, niche::DeriveMethod::Staircase));
  }
}

void BM_CertifyWitness(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(niche::certify_witness(n));
}

}  // namespace

BENCHMARK(BM_SuiteSerial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteParallel)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchSerial)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeriveReference)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeriveStaircase)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyWitness)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
