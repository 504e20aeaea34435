#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "peo/matrix.hpp"

namespace peo {

/// Simple undirected graph on [n] with a dense adjacency bitmap and sorted
/// neighbor lists.
class Graph {
 public:
  explicit Graph(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_; }

  void add_edge(Index u, Index v);
  bool has_edge(Index u, Index v) const { return adj_[u * n_ + v] != 0; }
  const std::vector<Index>& neighbors(Index v) const { return nbrs_[v]; }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Index, Index>> edges() const;

  /// 0/1 matrix with A_uv = 1 on edges.
  SymmetricMatrix adjacency_matrix() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  std::size_t n_;
  std::size_t edges_ = 0;
  std::vector<char> adj_;
  std::vector<std::vector<Index>> nbrs_;
};

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

/// Induced subgraph on `keep`, relabelled 0..|keep|-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Index> keep);

/// Hop distances from `source`; unreachable vertices are nullopt.
std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Index source);

/// Connected components of g restricted to vertices with allowed[v] != 0, each
/// sorted ascending, listed by smallest member. An empty `allowed` means all.
std::vector<std::vector<Index>> connected_components(const Graph& g,
                                                     std::span<const char> allowed = {});

bool is_connected(const Graph& g);

/// G^k: u ~ v iff 1 <= d_G(u, v) <= k. Requires k >= 1.
Graph graph_power(const Graph& g, std::size_t k);

/// Unweighted shortest-path matrix D_G; pairs in different components get the
/// sentinel 1 + n.
SymmetricMatrix graph_distance_matrix(const Graph& g);

/// Graph with nonnegative rational edge weights.
class WeightedGraph {
 public:
  explicit WeightedGraph(std::size_t n) : graph_(n), weights_(n * n) {}

  /// Throws std::invalid_argument on a negative weight or a loop.
  void add_edge(Index u, Index v, Value w);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t size() const noexcept { return graph_.size(); }
  const Value& weight(Index u, Index v) const { return weights_[u * size() + v]; }

  Value max_weight() const;

  /// 1 + n * (max edge weight): exceeds every finite shortest-path length.
  Value big_m() const;

  /// W_uv = w_uv on edges and big_m() elsewhere.
  SymmetricMatrix weight_matrix() const;

 private:
  Graph graph_;
  std::vector<Value> weights_;
};

/// Graph with unit weights on every edge.
WeightedGraph unit_weighted(const Graph& g);

/// All-pairs shortest-path matrix by Floyd-Warshall relaxation in exact
/// arithmetic. Pairs with no connecting path get big_m().
SymmetricMatrix shortest_path_matrix(const WeightedGraph& wg);

/// Same, restricted to the subgraph induced by `keep` (returned matrix is
/// indexed by position in `keep`). Unreachable pairs get wg.big_m().
SymmetricMatrix shortest_path_matrix(const WeightedGraph& wg, std::span<const Index> keep);

/// Graph file: "n <N>" then "<i> <j>" edge lines (1-based), '#' comments.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(std::string_view text);
Graph read_graph_file(const std::string& path);

std::string serialize_graph(const Graph& g);

}  // namespace peo
