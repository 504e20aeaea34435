#include "peo/separation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace peo {

namespace {

std::vector<Index> set_difference(const std::vector<Index>& a, const std::vector<Index>& b) {
  std::vector<Index> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Index> all_indices(std::size_t n) {
  std::vector<Index> v(n);
  std::iota(v.begin(), v.end(), Index{0});
  return v;
}

std::vector<char> mask_of(std::size_t n, std::span<const Index> members) {
  std::vector<char> mask(n, 0);
  for (Index v : members) {
    mask[v] = 1;
  }
  return mask;
}

const std::vector<Index>& component_of(const std::vector<std::vector<Index>>& comps, Index v) {
  for (const auto& c : comps) {
    if (std::binary_search(c.begin(), c.end(), v)) {
      return c;
    }
  }
  throw std::logic_error("vertex not in any component");
}

Separation make_separation(std::span<const Index> support, const std::vector<Index>& component,
                           const std::vector<Index>& separator) {
  Separation sep;
  sep.x = component;
  sep.x.insert(sep.x.end(), separator.begin(), separator.end());
  std::sort(sep.x.begin(), sep.x.end());
  std::vector<Index> sorted_support(support.begin(), support.end());
  std::sort(sorted_support.begin(), sorted_support.end());
  sep.y = set_difference(sorted_support, component);
  return sep;
}

// Minimal (a, b)-separator N(a) ∩ N(C_b), C_b the component of b in H - N[a].
std::vector<Index> minimal_pair_separator(const Graph& h, std::span<const Index> support,
                                          Index a, Index b) {
  auto allowed = mask_of(h.size(), support);
  allowed[a] = 0;
  for (Index v : h.neighbors(a)) {
    allowed[v] = 0;
  }
  auto comps = connected_components(h, allowed);
  const auto& cb = component_of(comps, b);
  auto in_cb = mask_of(h.size(), cb);
  std::vector<Index> sep;
  for (Index s : h.neighbors(a)) {
    const auto& nb = h.neighbors(s);
    if (std::any_of(nb.begin(), nb.end(), [&](Index t) { return in_cb[t] != 0; })) {
      sep.push_back(s);
    }
  }
  return sep;
}

std::size_t component_count_without(const Graph& h, std::span<const Index> support,
                                     const std::vector<Index>& removed) {
  auto allowed = mask_of(h.size(), support);
  for (Index v : removed) {
    allowed[v] = 0;
  }
  return connected_components(h, allowed).size();
}

std::pair<Index, Index> smallest_min_pair(const SymmetricMatrix& a,
                                          const std::vector<Index>& sorted_support,
                                          const Value& lowest) {
  for (std::size_t i = 0; i < sorted_support.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted_support.size(); ++j) {
      if (a(sorted_support[i], sorted_support[j]) == lowest) {
        return {sorted_support[i], sorted_support[j]};
      }
    }
  }
  throw std::logic_error("minimum not attained");
}

}  // namespace

std::vector<Index> Separation::common() const {
  std::vector<Index> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

std::vector<Index> Separation::x_only() const {
  return set_difference(x, y);
}

std::vector<Index> Separation::y_only() const {
  return set_difference(y, x);
}

Graph above_min_graph(const SymmetricMatrix& a, std::span<const Index> support) {
  Graph h(a.size());
  const Value lowest = min_offdiag(a, support);
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (std::size_t j = i + 1; j < support.size(); ++j) {
      if (a(support[i], support[j]) > lowest) {
        h.add_edge(support[i], support[j]);
      }
    }
  }
  return h;
}

Separation find_separation(const SymmetricMatrix& a, std::span<const Index> support) {
  if (support.size() < 2) {
    throw std::invalid_argument("a separation needs at least two elements");
  }
  std::vector<Index> sorted(support.begin(), support.end());
  std::sort(sorted.begin(), sorted.end());
  const Value lowest = min_offdiag(a, sorted);
  Graph h = above_min_graph(a, sorted);
  auto allowed = mask_of(a.size(), sorted);
  auto comps = connected_components(h, allowed);
  if (comps.size() > 1) {
    return make_separation(sorted, comps.front(), {});
  }

  auto [first, second] = smallest_min_pair(a, sorted, lowest);
  std::vector<Index> separator = minimal_pair_separator(h, sorted, first, second);
  // shrink until no single element can be dropped
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < separator.size(); ++i) {
      std::vector<Index> smaller = separator;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
      if (component_count_without(h, sorted, smaller) >= 2) {
        separator = std::move(smaller);
        changed = true;
        break;
      }
    }
  }
  for (Index s : separator) {
    allowed[s] = 0;
  }
  auto parts = connected_components(h, allowed);
  return make_separation(sorted, component_of(parts, first), separator);
}

Separation find_separation(const SymmetricMatrix& a) {
  return find_separation(a, all_indices(a.size()));
}

Separation find_separation(const SymmetricMatrix& a, std::span<const Index> support, Index first,
                           Index second) {
  if (support.size() < 2) {
    throw std::invalid_argument("a separation needs at least two elements");
  }
  std::vector<Index> sorted(support.begin(), support.end());
  std::sort(sorted.begin(), sorted.end());
  if (first == second || !std::binary_search(sorted.begin(), sorted.end(), first) ||
      !std::binary_search(sorted.begin(), sorted.end(), second)) {
    throw std::invalid_argument("separated pair must be two distinct support elements");
  }
  const Value lowest = min_offdiag(a, sorted);
  if (a(first, second) != lowest) {
    throw std::invalid_argument("separated pair must attain the minimum entry");
  }
  Graph h = above_min_graph(a, sorted);
  auto allowed = mask_of(a.size(), sorted);
  auto comps = connected_components(h, allowed);
  const auto& ca = component_of(comps, first);
  if (!std::binary_search(ca.begin(), ca.end(), second)) {
    return make_separation(sorted, ca, {});
  }
  std::vector<Index> separator = minimal_pair_separator(h, sorted, first, second);
  for (Index s : separator) {
    allowed[s] = 0;
  }
  auto parts = connected_components(h, allowed);
  return make_separation(sorted, component_of(parts, first), separator);
}

Separation find_separation(const SymmetricMatrix& a, Index first, Index second) {
  return find_separation(a, all_indices(a.size()), first, second);
}

bool is_separation(const SymmetricMatrix& a, std::span<const Index> support,
                   const Separation& sep) {
  std::vector<Index> sorted(support.begin(), support.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Index> cover;
  std::set_union(sep.x.begin(), sep.x.end(), sep.y.begin(), sep.y.end(),
                 std::back_inserter(cover));
  if (cover != sorted) {
    return false;
  }
  auto xo = sep.x_only();
  auto yo = sep.y_only();
  if (xo.empty() || yo.empty()) {
    return false;
  }
  const Value lowest = min_offdiag(a, sorted);
  for (Index x : xo) {
    for (Index y : yo) {
      if (a(x, y) != lowest) {
        return false;
      }
    }
  }
  return true;
}

std::optional<Walk> connecting_walk(const SymmetricMatrix& a, std::span<const Index> support,
                                    const Separation& sep, Index u, Index s) {
  auto common = sep.common();
  if (std::binary_search(common.begin(), common.end(), u) ||
      !std::binary_search(common.begin(), common.end(), s)) {
    throw std::invalid_argument("connecting_walk needs u outside and s inside X ∩ Y");
  }
  const auto& side = std::binary_search(sep.x.begin(), sep.x.end(), u) ? sep.x : sep.y;
  const Value lowest = min_offdiag(a, support);

  std::vector<char> allowed(a.size(), 0);
  for (Index v : side) {
    allowed[v] = 1;
  }
  for (Index v : common) {
    allowed[v] = 0;
  }
  allowed[s] = 1;

  constexpr Index kNone = static_cast<Index>(-1);
  std::vector<Index> parent(a.size(), kNone);
  parent[u] = u;
  std::deque<Index> queue{u};
  while (!queue.empty() && parent[s] == kNone) {
    Index v = queue.front();
    queue.pop_front();
    if (v == s) {
      break;
    }
    for (Index t = 0; t < a.size(); ++t) {
      if (t != v && allowed[t] && parent[t] == kNone && a(v, t) > lowest) {
        parent[t] = v;
        queue.push_back(t);
      }
    }
  }
  if (parent[s] == kNone) {
    return std::nullopt;
  }
  std::vector<Index> path{s};
  while (path.back() != u) {
    path.push_back(parent[path.back()]);
  }
  std::reverse(path.begin(), path.end());
  return Walk(std::move(path));
}

}  // namespace peo
