#include <benchmark/benchmark.h>

#include <random>

#include "peo/certificate.hpp"
#include "peo/classes.hpp"
#include "peo/graph.hpp"
#include "peo/oracle.hpp"
#include "peo/order.hpp"

namespace {

peo::SymmetricMatrix random_matrix(std::size_t n, int values, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(0, values - 1);
  peo::SymmetricMatrix a(n, 0);
  for (peo::Index x = 0; x < n; ++x)
    for (peo::Index y = x + 1; y < n; ++y) a.set(x, y, entry(rng));
  return a;
}

// -D of a random tree: always has a PEO, so greedy runs to completion
peo::SymmetricMatrix tree_metric(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  peo::Graph g(n);
  for (peo::Index v = 1; v < n; ++v) {
    std::uniform_int_distribution<peo::Index> parent(0, v - 1);
    g.add_edge(parent(rng), v);
  }
  return peo::negated(peo::graph_distance_matrix(g));
}

void BM_GreedyPeoTree(benchmark::State& state) {
  auto a = tree_metric(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(peo::greedy_peo(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreedyPeoTree)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_ExtractCertificate(benchmark::State& state) {
  auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(peo::extract_certificate(a));
}
BENCHMARK(BM_ExtractCertificate)->DenseRange(6, 24, 6);

void BM_IsChordal(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::bernoulli_distribution edge(0.3);
  const auto n = static_cast<std::size_t>(state.range(0));
  peo::Graph g(n);
  for (peo::Index u = 0; u < n; ++u)
    for (peo::Index v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  for (auto _ : state) benchmark::DoNotOptimize(peo::is_chordal(g));
}
BENCHMARK(BM_IsChordal)->RangeMultiplier(4)->Range(16, 1024);

void BM_PairOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto a = random_matrix(n, 3, 11);
  for (auto _ : state) benchmark::DoNotOptimize(peo::find_self_contained_pair_bruteforce(a));
}
BENCHMARK(BM_PairOracle)->DenseRange(4, 7);

}  // namespace

BENCHMARK_MAIN();
