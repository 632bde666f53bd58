#include <benchmark/benchmark.h>

#include <random>

#include "erlab/canonical.hpp"
#include "erlab/constructions.hpp"
#include "erlab/enumeration.hpp"
#include "erlab/formulas.hpp"
#include "erlab/oracle.hpp"

using namespace erlab;

namespace {

Graph random_graph(int n, std::uint64_t seed, double p = 0.5) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

void BM_CountCliquesTuran(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  const Graph g = complete_multipartite(turan_part_sizes(8, n)).graph();
  for (auto _ : state) benchmark::DoNotOptimize(count_cliques(g, r));
}
BENCHMARK(BM_CountCliquesTuran)
    ->Args({16, 4})
    ->Args({32, 4})
    ->Args({64, 4})
    ->Args({64, 8});

void BM_CountCliquesRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 99);
  for (auto _ : state) benchmark::DoNotOptimize(count_cliques(g, 5));
}
BENCHMARK(BM_CountCliquesRandom)->Arg(16)->Arg(32)->Arg(64);

void BM_CanonicalFormRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormRandom)->Arg(8)->Arg(10)->Arg(12)->Arg(16);

void BM_CanonicalFormMultipartite(benchmark::State& state) {
  // Highly symmetric inputs exercise the automorphism pruning.
  const Graph g = build_h_star(14, 70).graph.graph();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormMultipartite);

void BM_EnumerateCell(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::uint64_t e = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) {
    std::size_t count = 0;
    enumerate_graphs(n, e,
                     [&](const Graph&, const CanonicalResult&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateCell)->Args({7, 10})->Args({8, 14})->Args({8, 24});

void BM_TriangleFreeLevel(benchmark::State& state) {
  const int v = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TriangleFreeCatalog catalog;
    benchmark::DoNotOptimize(catalog.graphs(v, turan_edges(2, v) / 2).size());
  }
}
BENCHMARK(BM_TriangleFreeLevel)->Arg(7)->Arg(8)->Arg(9);

void BM_Profile(benchmark::State& state) {
  for (auto _ : state)
    for (int n = 4; n <= 40; ++n)
      benchmark::DoNotOptimize(profile(n, binom2(n) / 2, 4).h_star);
}
BENCHMARK(BM_Profile);

}  // namespace

BENCHMARK_MAIN();
