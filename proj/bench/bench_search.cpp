// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "mpat/constructions.hpp"
#include "mpat/search.hpp"

namespace {

using namespace mpat;

const Family& identity3() {
  static const Family f{identity_equivalents(3, 2)[0]};
  return f;
}

const Family& all_ones2() {
  static const Family f{Tensor01::ones_like({2, 2})};
  return f;
}

template <class Fn>
void run_search(benchmark::State& state, Fn fn, const Family& fam) {
  SearchLimits lim;
  lim.max_cells = 40;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fn(fam, n, lim).value);
}

void BM_ExSerial(benchmark::State& s) { run_search(s, reference::ex_exact, identity3()); }
void BM_ExParallel(benchmark::State& s) { run_search(s, ex_exact, identity3()); }
void BM_SatSerial(benchmark::State& s) { run_search(s, reference::sat_exact, identity3()); }
void BM_SatParallel(benchmark::State& s) { run_search(s, sat_exact, identity3()); }
void BM_SsatSerial(benchmark::State& s) { run_search(s, reference::ssat_exact, all_ones2()); }
void BM_SsatParallel(benchmark::State& s) { run_search(s, ssat_exact, all_ones2()); }

void BM_SemisatSerial(benchmark::State& state) {
  const Tensor01 w = ssat_witness(all_ones2(), 1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::is_semisaturated(w, all_ones2()));
}
void BM_SemisatParallel(benchmark::State& state) {
  const Tensor01 w = ssat_witness(all_ones2(), 1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_semisaturated(w, all_ones2()));
}

}  // namespace

BENCHMARK(BM_ExSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExParallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SatSerial)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SatParallel)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SsatSerial)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SsatParallel)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SemisatSerial)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SemisatParallel)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
