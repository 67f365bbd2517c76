#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "satex/berge.hpp"
#include "satex/bounds.hpp"
#include "satex/enumerate.hpp"
#include "satex/search.hpp"

using namespace satex;

namespace {

void BM_CountOverCatalog(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  graph_catalog(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(count_over_catalog(n, PatternSpec::path(3), PatternSpec::clique(3)));
}

void BM_CountOverCatalogSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  graph_catalog(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(count_over_catalog_serial(n, PatternSpec::path(3), PatternSpec::clique(3)));
}

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_nonisomorphic_graphs(static_cast<int>(state.range(0))));
}

void BM_EnumerateSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_nonisomorphic_graphs_serial(static_cast<int>(state.range(0))));
}

std::vector<std::uint64_t> random_family(int count) {
  std::mt19937_64 rng(11);
  std::vector<std::uint64_t> sets(count);
  for (auto& s : sets) s = rng() & rng() & rng();
  return sets;
}

void BM_DisjointPairs(benchmark::State& state) {
  const auto sets = random_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(disjoint_pairs(sets));
}

void BM_DisjointPairsSerial(benchmark::State& state) {
  const auto sets = random_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(disjoint_pairs_serial(sets));
}

void BM_BergeCounts(benchmark::State& state) {
  const Hypergraph h = complete_uniform_hypergraph(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(berge_counts(h, PatternSpec::path(4)));
}

void BM_BergeCountsSerial(benchmark::State& state) {
  const Hypergraph h = complete_uniform_hypergraph(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(berge_counts_serial(h, PatternSpec::path(4)));
}

}  // namespace

BENCHMARK(BM_CountOverCatalog)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountOverCatalogSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DisjointPairs)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DisjointPairsSerial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BergeCounts)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BergeCountsSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
