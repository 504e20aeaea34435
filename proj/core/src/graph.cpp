#include "peo/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace peo {

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0), nbrs_(n) {}

void Graph::add_edge(Index u, Index v) {
  if (u >= n_ || v >= n_) {
    throw std::out_of_range("graph vertex out of range");
  }
  if (u == v) {
    throw std::invalid_argument("loops are not allowed");
  }
  if (has_edge(u, v)) {
    return;
  }
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  nbrs_[u].insert(std::lower_bound(nbrs_[u].begin(), nbrs_[u].end(), v), v);
  nbrs_[v].insert(std::lower_bound(nbrs_[v].begin(), nbrs_[v].end(), u), u);
  ++edges_;
}

std::vector<std::pair<Index, Index>> Graph::edges() const {
  std::vector<std::pair<Index, Index>> out;
  out.reserve(edges_);
  for (Index u = 0; u < n_; ++u) {
    for (Index v : nbrs_[u]) {
      if (u < v) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

SymmetricMatrix Graph::adjacency_matrix() const {
  SymmetricMatrix a(n_, Value{0});
  for (auto [u, v] : edges()) {
    a.set(u, v, Value{1});
  }
  return a;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Index u = 0; u < n; ++u) {
    for (Index v = u + 1; v < n; ++v) {
      g.add_edge(u, v);
    }
  }
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Index v = 0; v + 1 < n; ++v) {
    g.add_edge(v, v + 1);
  }
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) {
    throw std::invalid_argument("a cycle needs at least 3 vertices");
  }
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph induced_subgraph(const Graph& g, std::span<const Index> keep) {
  Graph sub(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (g.has_edge(keep[i], keep[j])) {
        sub.add_edge(i, j);
      }
    }
  }
  return sub;
}

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Index source) {
  std::vector<std::optional<std::size_t>> dist(g.size());
  std::deque<Index> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Index u = queue.front();
    queue.pop_front();
    for (Index v : g.neighbors(u)) {
      if (!dist[v]) {
        dist[v] = *dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<std::vector<Index>> connected_components(const Graph& g,
                                                     std::span<const char> allowed) {
  auto ok = [&](Index v) { return allowed.empty() || allowed[v] != 0; };
  std::vector<char> seen(g.size(), 0);
  std::vector<std::vector<Index>> comps;
  for (Index s = 0; s < g.size(); ++s) {
    if (seen[s] || !ok(s)) {
      continue;
    }
    std::vector<Index> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Index v : g.neighbors(comp[head])) {
        if (!seen[v] && ok(v)) {
          seen[v] = 1;
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

Graph graph_power(const Graph& g, std::size_t k) {
  if (k == 0) {
    throw std::invalid_argument("graph power requires k >= 1");
  }
  Graph out(g.size());
  for (Index u = 0; u < g.size(); ++u) {
    auto dist = bfs_distances(g, u);
    for (Index v = u + 1; v < g.size(); ++v) {
      if (dist[v] && *dist[v] <= k) {
        out.add_edge(u, v);
      }
    }
  }
  return out;
}

SymmetricMatrix graph_distance_matrix(const Graph& g) {
  const Value sentinel{static_cast<long>(g.size() + 1)};
  SymmetricMatrix d(g.size(), sentinel);
  for (Index u = 0; u < g.size(); ++u) {
    auto dist = bfs_distances(g, u);
    for (Index v = u + 1; v < g.size(); ++v) {
      if (dist[v]) {
        d.set(u, v, Value{static_cast<long>(*dist[v])});
      }
    }
  }
  return d;
}

void WeightedGraph::add_edge(Index u, Index v, Value w) {
  if (w < 0) {
    throw std::invalid_argument("edge weights must be nonnegative");
  }
  graph_.add_edge(u, v);
  w.canonicalize();
  weights_[u * size() + v] = w;
  weights_[v * size() + u] = std::move(w);
}

Value WeightedGraph::max_weight() const {
  Value best{0};
  for (auto [u, v] : graph_.edges()) {
    if (weight(u, v) > best) {
      best = weight(u, v);
    }
  }
  return best;
}

Value WeightedGraph::big_m() const {
  return Value{1} + Value{static_cast<long>(size())} * max_weight();
}

SymmetricMatrix WeightedGraph::weight_matrix() const {
  SymmetricMatrix w(size(), big_m());
  for (auto [u, v] : graph_.edges()) {
    w.set(u, v, weight(u, v));
  }
  return w;
}

WeightedGraph unit_weighted(const Graph& g) {
  WeightedGraph wg(g.size());
  for (auto [u, v] : g.edges()) {
    wg.add_edge(u, v, Value{1});
  }
  return wg;
}

SymmetricMatrix shortest_path_matrix(const WeightedGraph& wg, std::span<const Index> keep) {
  const std::size_t m = keep.size();
  // dist[i][j] with an explicit reachability flag so the sentinel never
  // takes part in a relaxation
  std::vector<Value> dist(m * m);
  std::vector<char> reach(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    reach[i * m + i] = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && wg.graph().has_edge(keep[i], keep[j])) {
        dist[i * m + j] = wg.weight(keep[i], keep[j]);
        reach[i * m + j] = 1;
      }
    }
  }
  Value via;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!reach[i * m + k]) {
        continue;
      }
      for (std::size_t j = 0; j < m; ++j) {
        if (!reach[k * m + j]) {
          continue;
        }
        via = dist[i * m + k] + dist[k * m + j];
        if (!reach[i * m + j] || via < dist[i * m + j]) {
          dist[i * m + j] = via;
          reach[i * m + j] = 1;
        }
      }
    }
  }
  SymmetricMatrix d(m, wg.big_m());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (reach[i * m + j]) {
        d.set(i, j, dist[i * m + j]);
      }
    }
  }
  return d;
}

SymmetricMatrix shortest_path_matrix(const WeightedGraph& wg) {
  std::vector<Index> all(wg.size());
  for (Index v = 0; v < all.size(); ++v) {
    all[v] = v;
  }
  return shortest_path_matrix(wg, all);
}

Graph parse_graph(std::istream& in) {
  std::optional<Graph> g;
  std::string raw;
  std::size_t line_no = 0;
  auto index = [&](const std::string& tok) -> Index {
    try {
      std::size_t used = 0;
      auto v = std::stoull(tok, &used);
      if (used != tok.size() || v < 1 || v > g->size()) {
        throw ParseError("index '" + tok + "' out of range", line_no);
      }
      return static_cast<Index>(v - 1);
    } catch (const std::logic_error&) {
      throw ParseError("bad index '" + tok + "'", line_no);
    }
  };
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) {
      tok.push_back(t);
    }
    if (tok.empty()) {
      continue;
    }
    if (!g) {
      if (tok.size() != 2 || tok[0] != "n") {
        throw ParseError("expected header 'n <N>'", line_no);
      }
      std::size_t used = 0;
      unsigned long long n = 0;
      try {
        n = std::stoull(tok[1], &used);
      } catch (const std::logic_error&) {
        throw ParseError("bad size '" + tok[1] + "'", line_no);
      }
      if (used != tok[1].size() || n == 0) {
        throw ParseError("bad size '" + tok[1] + "'", line_no);
      }
      g.emplace(static_cast<std::size_t>(n));
      continue;
    }
    if (tok[0] == "default") {
      if (tok.size() != 2 || parse_value(tok[1]) != 0) {
        throw ParseError("graph files only allow 'default 0'", line_no);
      }
      continue;
    }
    if (tok.size() != 2 && tok.size() != 3) {
      throw ParseError("expected '<i> <j>'", line_no);
    }
    Index u = index(tok[0]);
    Index v = index(tok[1]);
    if (u == v) {
      throw ParseError("loop " + tok[0] + " " + tok[1] + " is not allowed", line_no);
    }
    if (tok.size() == 3) {
      Value w = parse_value(tok[2]);
      if (w == 0) {
        continue;
      }
      if (w != 1) {
        throw ParseError("graph edge values must be 0 or 1", line_no);
      }
    }
    g->add_edge(u, v);
  }
  if (!g) {
    throw ParseError("missing header 'n <N>'", 0);
  }
  return *g;
}

Graph parse_graph_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.size() << '\n';
  for (auto [u, v] : g.edges()) {
    out << u + 1 << ' ' << v + 1 << '\n';
  }
  return out.str();
}

}  // namespace peo
