#include <benchmark/benchmark.h>

#include "hforest/arith.hpp"
#include "hforest/forest.hpp"
#include "hforest/matrixlab.hpp"
#include "hforest/search.hpp"

namespace {

void BM_GcdGrid(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<hf::Natural> xs, ys;
  for (std::size_t i = 0; i < n; ++i) {
    xs.emplace_back(129963314UL + i);
    ys.emplace_back(184785885UL + i);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(hf::gcd_grid_of(xs, ys));
  }
}
BENCHMARK(BM_GcdGrid)->Arg(2)->Arg(5)->Arg(16);

void BM_OmegaSieve(benchmark::State& state) {
  const std::uint64_t width = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hf::omega_sieve(129000000, 129000000 + width - 1));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(width));
}
BENCHMARK(BM_OmegaSieve)->Arg(1 << 16)->Arg(1 << 20);

void BM_ScanClosest(benchmark::State& state) {
  const std::uint64_t side = static_cast<std::uint64_t>(state.range(0));
  hf::ScanRegion region{1, side, 1, side, true};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hf::scan_closest_forest(2, region));
  }
}
BENCHMARK(BM_ScanClosest)->Arg(100)->Arg(400);

void BM_CrtSolve(benchmark::State& state) {
  auto m = hf::prime_matrix(static_cast<std::size_t>(state.range(0)));
  auto qp = hf::QuasiprimeMatrix::checked(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hf::forest_from_matrix(qp));
  }
}
BENCHMARK(BM_CrtSolve)->Arg(2)->Arg(4)->Arg(8);

void BM_PatternEnumeration(benchmark::State& state) {
  std::vector<hf::Natural> xs;
  for (unsigned long v = 129963314; v <= 129963318; ++v) xs.emplace_back(v);
  auto pattern = hf::make_five_run_pattern(xs);
  for (auto _ : state) {
    hf::PatternEnumerator en(pattern);
    hf::EntryMatrix m;
    std::size_t count = 0;
    while (count < 1000 && en.next(m)) ++count;
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_PatternEnumeration);

}  // namespace

BENCHMARK_MAIN();
