#include "peo/classes.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "peo/levels.hpp"

namespace peo {

std::optional<TripleViolation> ultrametric_violation(const SymmetricMatrix& d) {
  const std::size_t n = d.size();
  for (Index x = 0; x < n; ++x) {
    for (Index y = x + 1; y < n; ++y) {
      if (d(x, y) < 0) {
        throw std::invalid_argument("distance matrices must be nonnegative");
      }
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      for (Index k = j + 1; k < n; ++k) {
        const TripleViolation rotations[] = {{i, j, k}, {j, i, k}, {k, i, j}};
        for (auto t : rotations) {
          if (d(t.y, t.z) > std::max(d(t.x, t.y), d(t.x, t.z))) {
            return t;
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_ultrametric(const SymmetricMatrix& d) {
  return !ultrametric_violation(d);
}

bool every_order_is_peo(const SymmetricMatrix& a) {
  const std::size_t n = a.size();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = y + 1; z < n; ++z) {
        if (x != y && x != z && a(y, z) < std::min(a(x, y), a(x, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

template <typename Pred>
std::optional<TripleViolation> scan_triples(const SymmetricMatrix& a, const LinearOrder& pi,
                                            Pred holds) {
  const std::size_t n = a.size();
  if (pi.size() != n) {
    throw std::invalid_argument("order size does not match matrix size");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!holds(pi[i], pi[j], pi[k])) {
          return TripleViolation{pi[i], pi[j], pi[k]};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<TripleViolation> robinson_violation(const SymmetricMatrix& a,
                                                  const LinearOrder& pi) {
  return scan_triples(a, pi, [&](Index x, Index y, Index z) {
    return a(x, z) <= std::min(a(x, y), a(y, z));
  });
}

std::optional<TripleViolation> interval_violation(const SymmetricMatrix& a,
                                                  const LinearOrder& pi) {
  return scan_triples(a, pi, [&](Index x, Index y, Index z) { return a(x, z) <= a(y, z); });
}

std::optional<TripleViolation> cocomparability_violation(const SymmetricMatrix& a,
                                                         const LinearOrder& pi) {
  return scan_triples(a, pi, [&](Index x, Index y, Index z) {
    return a(x, z) <= std::max(a(x, y), a(y, z));
  });
}

std::string_view to_string(OrderClass c) {
  switch (c) {
    case OrderClass::peo:
      return "peo";
    case OrderClass::robinson:
      return "robinson";
    case OrderClass::interval:
      return "interval";
    case OrderClass::cocomparability:
      return "cocomparability";
  }
  return "?";
}

std::optional<OrderClass> parse_order_class(std::string_view name) {
  for (auto c : {OrderClass::peo, OrderClass::robinson, OrderClass::interval,
                 OrderClass::cocomparability}) {
    if (name == to_string(c)) {
      return c;
    }
  }
  return std::nullopt;
}

std::optional<TripleViolation> order_violation(const SymmetricMatrix& a, const LinearOrder& pi,
                                               OrderClass c) {
  switch (c) {
    case OrderClass::peo:
      return peo_violation(a, pi);
    case OrderClass::robinson:
      return robinson_violation(a, pi);
    case OrderClass::interval:
      return interval_violation(a, pi);
    case OrderClass::cocomparability:
      return cocomparability_violation(a, pi);
  }
  throw std::invalid_argument("unknown order class");
}

std::optional<LinearOrder> brute_force_class_recognition(const SymmetricMatrix& a,
                                                         OrderClass c) {
  if (a.size() > kPermutationOracleCap) {
    throw std::length_error("permutation oracle is limited to n <= " +
                            std::to_string(kPermutationOracleCap));
  }
  std::vector<Index> perm(a.size());
  std::iota(perm.begin(), perm.end(), Index{0});
  do {
    LinearOrder pi(perm);
    if (!order_violation(a, pi, c)) {
      return pi;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::vector<Index> mcs_visit_order(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> weight(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<Index> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Index pick = n;
    for (Index v = 0; v < n; ++v) {
      if (!visited[v] && (pick == n || weight[v] > weight[pick])) {
        pick = v;
      }
    }
    visited[pick] = 1;
    order.push_back(pick);
    for (Index u : g.neighbors(pick)) {
      if (!visited[u]) {
        ++weight[u];
      }
    }
  }
  return order;
}

namespace {

// Shortest y-z path whose interior avoids the closed neighborhood of x.
std::optional<std::vector<Index>> path_around(const Graph& g, Index x, Index y, Index z) {
  const std::size_t n = g.size();
  std::vector<char> blocked(n, 0);
  blocked[x] = 1;
  for (Index v : g.neighbors(x)) {
    blocked[v] = 1;
  }
  blocked[z] = 0;
  constexpr Index kNone = static_cast<Index>(-1);
  std::vector<Index> parent(n, kNone);
  parent[y] = y;
  std::deque<Index> queue{y};
  while (!queue.empty()) {
    Index v = queue.front();
    queue.pop_front();
    if (v == z) {
      break;
    }
    for (Index u : g.neighbors(v)) {
      if (!blocked[u] && parent[u] == kNone) {
        parent[u] = v;
        queue.push_back(u);
      }
    }
  }
  if (parent[z] == kNone) {
    return std::nullopt;
  }
  std::vector<Index> path{z};
  while (path.back() != y) {
    path.push_back(parent[path.back()]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<std::vector<Index>> cycle_through(const Graph& g, Index x, Index y, Index z) {
  auto path = path_around(g, x, y, z);
  if (!path) {
    return std::nullopt;
  }
  std::vector<Index> cycle{x};
  cycle.insert(cycle.end(), path->begin(), path->end());
  return cycle;
}

}  // namespace

std::optional<std::vector<Index>> chordless_cycle(const Graph& g) {
  const std::size_t n = g.size();
  if (n < 4) {
    return std::nullopt;
  }
  auto visit = mcs_visit_order(g);
  LinearOrder elimination(std::vector<Index>(visit.rbegin(), visit.rend()));
  auto bad = peo_violation(g.adjacency_matrix(), elimination);
  if (!bad) {
    return std::nullopt;
  }
  if (auto cycle = cycle_through(g, bad->x, bad->y, bad->z)) {
    return cycle;
  }
  // any chordless cycle C and x on it: the rest of C avoids N[x] between the
  // two cycle neighbors of x, so some triple below succeeds
  for (Index x = 0; x < n; ++x) {
    const auto& nb = g.neighbors(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!g.has_edge(nb[i], nb[j])) {
          if (auto cycle = cycle_through(g, x, nb[i], nb[j])) {
            return cycle;
          }
        }
      }
    }
  }
  throw std::logic_error("MCS order failed but no chordless cycle was found");
}

bool is_chordal(const Graph& g) {
  return !chordless_cycle(g);
}

PowerEquivalenceReport check_power_equivalence(const Graph& g) {
  PowerEquivalenceReport report;
  report.graph_and_square_chordal = is_chordal(g) && is_chordal(graph_power(g, 2));
  if (g.size() < 2) {
    report.has_peo = report.no_weighted_chordless_cycle = report.levels_chordal = true;
    return report;
  }
  SymmetricMatrix a = negated(graph_distance_matrix(g));
  report.has_peo = greedy_peo(a).has_value();
  report.no_weighted_chordless_cycle = !find_weighted_chordless_cycle(a);
  auto dec = level_decomposition(a);
  report.levels_chordal = std::all_of(dec.levels.begin(), dec.levels.end(),
                                      [](const Graph& level) { return is_chordal(level); });
  return report;
}

PowerChordalityReport power_chordality_check(const Graph& g, std::size_t k_max) {
  if (k_max < 3) {
    throw std::invalid_argument("power_chordality_check requires k_max >= 3");
  }
  PowerChordalityReport report;
  for (std::size_t k = 1; k <= k_max; ++k) {
    report.chordal.push_back(is_chordal(graph_power(g, k)));
  }
  for (std::size_t k = 1; k + 2 <= k_max; ++k) {
    if (report.chordal[k - 1] && !report.chordal[k + 1]) {
      report.violation = k;
      break;
    }
  }
  return report;
}

std::optional<std::size_t> distance_preserving_violation(const WeightedGraph& wg,
                                                         const LinearOrder& pi) {
  const std::size_t n = wg.size();
  if (pi.size() != n) {
    throw std::invalid_argument("order size does not match graph size");
  }
  SymmetricMatrix full = shortest_path_matrix(wg);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    std::vector<Index> keep(pi.elements().begin() + static_cast<std::ptrdiff_t>(i),
                            pi.elements().end());
    SymmetricMatrix sub = shortest_path_matrix(wg, keep);
    for (std::size_t p = 0; p < keep.size(); ++p) {
      for (std::size_t q = p + 1; q < keep.size(); ++q) {
        if (sub(p, q) != full(keep[p], keep[q])) {
          return i;
        }
      }
    }
  }
  return std::nullopt;
}

bool is_distance_preserving_order(const WeightedGraph& wg, const LinearOrder& pi) {
  return !distance_preserving_violation(wg, pi);
}

bool OrderingClassReport::implications_hold() const {
  if (ultrametric && !peo) {
    return false;
  }
  if (robinson.value_or(false) && !interval.value_or(false)) {
    return false;
  }
  if (interval.value_or(false) && !(peo && cocomparability.value_or(false))) {
    return false;
  }
  return true;
}

OrderingClassReport classify(const SymmetricMatrix& a) {
  OrderingClassReport report;
  report.ultrametric = every_order_is_peo(a);
  report.peo_witness = greedy_peo(a);
  report.peo = report.peo_witness.has_value();
  report.simplicial = find_simplicial(a);
  if (a.size() <= kPermutationOracleCap) {
    report.robinson_witness = brute_force_class_recognition(a, OrderClass::robinson);
    report.interval_witness = brute_force_class_recognition(a, OrderClass::interval);
    report.cocomparability_witness =
        brute_force_class_recognition(a, OrderClass::cocomparability);
    report.robinson = report.robinson_witness.has_value();
    report.interval = report.interval_witness.has_value();
    report.cocomparability = report.cocomparability_witness.has_value();
  }
  if (a.size() >= 2) {
    // G_0 is complete, hence chordal, and left out
    auto dec = level_decomposition(a);
    for (std::size_t l = 1; l < dec.levels.size(); ++l) {
      report.levels_chordal.push_back(is_chordal(dec.levels[l]));
    }
  }
  report.weighted_chordless_cycle = find_weighted_chordless_cycle(a);
  return report;
}

}  // namespace peo
