#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "peo/graph.hpp"
#include "peo/matrix.hpp"
#include "peo/order.hpp"
#include "peo/walk.hpp"

namespace peo::test {

using Pair = std::pair<Index, Index>;

// Pairs and walks in the tests are written 1-based, as in the data files.
inline Walk walk1(std::initializer_list<Index> seq) {
  std::vector<Index> v;
  for (Index i : seq) v.push_back(i - 1);
  return Walk(v);
}

inline LinearOrder order1(std::initializer_list<Index> seq) {
  std::vector<Index> v;
  for (Index i : seq) v.push_back(i - 1);
  return LinearOrder(v);
}

struct Weighted {
  int value;
  std::initializer_list<Pair> pairs;
};

inline SymmetricMatrix build1(std::size_t n, int fill, std::initializer_list<Weighted> groups) {
  SymmetricMatrix a(n, fill);
  for (const auto& g : groups) {
    for (auto [x, y] : g.pairs) a.set(x - 1, y - 1, g.value);
  }
  return a;
}

inline SymmetricMatrix stuck5() {
  return build1(5, 0, {{2, {{1, 2}, {1, 3}, {3, 5}, {4, 5}}},
                       {1, {{1, 4}, {2, 4}, {2, 3}, {3, 4}, {2, 5}}}});
}

inline SymmetricMatrix cycle5() {
  return build1(5, 0, {{2, {{1, 2}, {2, 3}, {4, 5}, {1, 5}}}, {1, {{1, 3}, {1, 4}, {3, 4}}}});
}

inline SymmetricMatrix pair6() {
  return build1(6, 1, {{2, {{1, 2}, {1, 3}, {4, 6}, {5, 6}}}, {0, {{1, 6}}}});
}

inline SymmetricMatrix unique4() {
  return build1(4, 0, {{2, {{1, 2}, {1, 3}}}, {1, {{2, 3}, {2, 4}, {3, 4}}}});
}

inline SymmetricMatrix constant_matrix(std::size_t n, int v) {
  return SymmetricMatrix(n, v);
}

inline Graph graph1(std::size_t n, std::initializer_list<Pair> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
  return g;
}

inline std::vector<Pair> edge_list1(const Graph& g) {
  std::vector<Pair> out;
  for (auto [u, v] : g.edges()) out.emplace_back(u + 1, v + 1);
  return out;
}

// Matrix whose upper-triangle entries, read row by row, are the base-`base`
// digits of `code`.
inline SymmetricMatrix matrix_from_code(std::size_t n, std::uint64_t code, int base) {
  SymmetricMatrix a(n, 0);
  for (Index x = 0; x < n; ++x) {
    for (Index y = x + 1; y < n; ++y) {
      a.set(x, y, static_cast<int>(code % base));
      code /= base;
    }
  }
  return a;
}

inline std::uint64_t matrix_count(std::size_t n, int base) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * (n - 1) / 2; ++i) total *= base;
  return total;
}

using Rng = std::mt19937_64;

inline SymmetricMatrix random_matrix(Rng& rng, std::size_t n, int values) {
  std::uniform_int_distribution<int> entry(0, values - 1);
  SymmetricMatrix a(n, 0);
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y) a.set(x, y, entry(rng));
  return a;
}

inline Value random_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 7);
  Value v(num(rng), den(rng));
  v.canonicalize();
  return v;
}

inline SymmetricMatrix random_rational_matrix(Rng& rng, std::size_t n) {
  SymmetricMatrix a(n, 0);
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y) a.set(x, y, random_rational(rng));
  return a;
}

// Ultrametric from random agglomerative merges at increasing heights.
inline SymmetricMatrix random_ultrametric(Rng& rng, std::size_t n) {
  SymmetricMatrix d(n, 0);
  std::vector<std::vector<Index>> clusters;
  for (Index v = 0; v < n; ++v) clusters.push_back({v});
  int height = 0;
  std::uniform_int_distribution<int> step(0, 2);
  while (clusters.size() > 1) {
    height += step(rng);
    std::uniform_int_distribution<std::size_t> pick(0, clusters.size() - 1);
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    for (Index x : clusters[i])
      for (Index y : clusters[j]) d.set(x, y, height);
    clusters[i].insert(clusters[i].end(), clusters[j].begin(), clusters[j].end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(j));
  }
  return d;
}

// Half ultrametrics (sometimes with one entry perturbed), half uniform noise.
inline SymmetricMatrix random_distance_matrix(Rng& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  if (!coin(rng)) return random_matrix(rng, n, 4);
  SymmetricMatrix d = random_ultrametric(rng, n);
  if (n >= 2 && coin(rng)) {
    std::uniform_int_distribution<Index> v(0, n - 1);
    Index x = v(rng), y = v(rng);
    if (x != y) d.set(x, y, d(x, y) + 1);
  }
  return d;
}

inline Graph random_graph(Rng& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (Index u = 0; u < n; ++u)
    for (Index v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

// Random spanning tree plus independent extra edges.
inline Graph random_connected_graph(Rng& rng, std::size_t n, double p) {
  Graph g(n);
  for (Index v = 1; v < n; ++v) {
    std::uniform_int_distribution<Index> parent(0, v - 1);
    g.add_edge(parent(rng), v);
  }
  std::bernoulli_distribution edge(p);
  for (Index u = 0; u < n; ++u)
    for (Index v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && edge(rng)) g.add_edge(u, v);
  return g;
}

inline Graph random_tree(Rng& rng, std::size_t n) {
  return random_connected_graph(rng, n, 0.0);
}

inline WeightedGraph random_weighted_graph(Rng& rng, std::size_t n, double p, int max_w) {
  Graph g = random_graph(rng, n, p);
  std::uniform_int_distribution<int> w(0, max_w);
  WeightedGraph wg(n);
  for (auto [u, v] : g.edges()) wg.add_edge(u, v, w(rng));
  return wg;
}

inline LinearOrder random_order(Rng& rng, std::size_t n) {
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return LinearOrder(perm);
}

// Fresh copy of the subset [0, n).
inline std::vector<Index> all_indices(std::size_t n) {
  std::vector<Index> v(n);
  std::iota(v.begin(), v.end(), Index{0});
  return v;
}

}  // namespace peo::test
