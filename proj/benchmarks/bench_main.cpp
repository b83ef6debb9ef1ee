// Microbenchmarks for the hot paths: exact statistics, sandwich checking,
// the unit-fraction solver, walk generation, and a small sweep.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "cgeom/bounds.hpp"
#include "cgeom/experiments.hpp"
#include "cgeom/stats.hpp"
#include "cgeom/sweep.hpp"
#include "cgeom/tuple.hpp"
#include "cgeom/walk.hpp"

namespace {

cgeom::RatTuple run_tuple(long n) {
  std::vector<long> coords;
  for (long c = 2; c < 2 + n; ++c) coords.push_back(c);
  return cgeom::NatTuple(coords).to_rat();
}

void BM_compress(benchmark::State& state) {
  cgeom::RatTuple x = run_tuple(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cgeom::compress(x, cgeom::Scale(1)));
}
BENCHMARK(BM_compress)->Arg(2)->Arg(6)->Arg(10);

void BM_mass(benchmark::State& state) {
  cgeom::RatTuple x = run_tuple(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cgeom::mass(x, cgeom::Scale(1)));
}
BENCHMARK(BM_mass)->Arg(2)->Arg(6)->Arg(10);

void BM_gap_sq(benchmark::State& state) {
  cgeom::RatTuple x = run_tuple(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cgeom::gap_sq(x, cgeom::Scale(1)));
}
BENCHMARK(BM_gap_sq)->Arg(2)->Arg(6)->Arg(10);

void BM_check_sandwich(benchmark::State& state) {
  std::vector<long> coords;
  for (long c = 5; c < 5 + state.range(0); ++c) coords.push_back(c);
  cgeom::NatTuple x(coords);
  for (auto _ : state)
    benchmark::DoNotOptimize(cgeom::check_sandwich(x, cgeom::Scale(1), "mass_harmonic"));
}
BENCHMARK(BM_check_sandwich)->Arg(3)->Arg(8);

void BM_erdos_straus(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(cgeom::erdos_straus_solve(state.range(0), 10000));
}
BENCHMARK(BM_erdos_straus)->Arg(4)->Arg(193)->Arg(997);

void BM_generate_walk(benchmark::State& state) {
  cgeom::RatTuple start({cgeom::Rat(2), cgeom::Rat(3)});
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cgeom::generate_walk(start, cgeom::Scale(1), static_cast<int>(state.range(0)), seed++));
  }
}
BENCHMARK(BM_generate_walk)->Arg(4)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_run_sweep(benchmark::State& state) {
  cgeom::SweepConfig cfg;
  cfg.seed = 1;
  cfg.samples = state.range(0);
  cfg.inequalities = {"mass_harmonic", "mass_supinf", "gap_log"};
  for (auto _ : state) benchmark::DoNotOptimize(cgeom::run_sweep(cfg));
}
BENCHMARK(BM_run_sweep)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
