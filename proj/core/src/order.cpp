#include "peo/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace peo {

LinearOrder::LinearOrder(std::vector<Index> perm) : perm_(std::move(perm)), pos_(perm_.size()) {
  std::vector<char> seen(perm_.size(), 0);
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    Index v = perm_[i];
    if (v >= perm_.size() || seen[v]) {
      throw std::invalid_argument("not a permutation of the index set");
    }
    seen[v] = 1;
    pos_[v] = i;
  }
}

LinearOrder LinearOrder::identity(std::size_t n) {
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  return LinearOrder(std::move(perm));
}

std::string format_order(const LinearOrder& pi) {
  std::string out;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i) {
      out += ' ';
    }
    out += std::to_string(pi[i] + 1);
  }
  return out;
}

LinearOrder parse_order(std::string_view text, std::size_t n) {
  std::istringstream in{std::string(text)};
  std::vector<Index> perm;
  for (std::string tok; in >> tok;) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::logic_error&) {
      throw ParseError("bad order element '" + tok + "'", 0);
    }
    if (used != tok.size() || v < 1 || v > n) {
      throw ParseError("order element '" + tok + "' out of range 1.." + std::to_string(n), 0);
    }
    perm.push_back(static_cast<Index>(v - 1));
  }
  if (perm.size() != n) {
    throw ParseError("order has " + std::to_string(perm.size()) + " elements, expected " +
                         std::to_string(n),
                     0);
  }
  try {
    return LinearOrder(std::move(perm));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

std::optional<TripleViolation> peo_violation(const SymmetricMatrix& a, const LinearOrder& pi) {
  const std::size_t n = a.size();
  if (pi.size() != n) {
    throw std::invalid_argument("order size does not match matrix size");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Index x = pi[i], y = pi[j], z = pi[k];
        const Value& xy = a(x, y);
        const Value& xz = a(x, z);
        if (a(y, z) < std::min(xy, xz)) {
          return TripleViolation{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_peo(const SymmetricMatrix& a, const LinearOrder& pi) {
  return !peo_violation(a, pi);
}

std::optional<std::pair<Index, Index>> simplicial_violation(const SymmetricMatrix& a,
                                                            std::span<const Index> support,
                                                            Index v) {
  for (std::size_t i = 0; i < support.size(); ++i) {
    Index y = support[i];
    if (y == v) {
      continue;
    }
    const Value& vy = a(v, y);
    for (std::size_t j = i + 1; j < support.size(); ++j) {
      Index z = support[j];
      if (z == v) {
        continue;
      }
      if (a(y, z) < std::min(vy, a(v, z))) {
        return std::pair{y, z};
      }
    }
  }
  return std::nullopt;
}

namespace {

std::vector<Index> all_indices(std::size_t n) {
  std::vector<Index> v(n);
  std::iota(v.begin(), v.end(), Index{0});
  return v;
}

}  // namespace

std::optional<std::pair<Index, Index>> simplicial_violation(const SymmetricMatrix& a, Index v) {
  if (v >= a.size()) {
    throw std::out_of_range("index out of range");
  }
  return simplicial_violation(a, all_indices(a.size()), v);
}

bool is_simplicial(const SymmetricMatrix& a, std::span<const Index> support, Index v) {
  return !simplicial_violation(a, support, v);
}

bool is_simplicial(const SymmetricMatrix& a, Index v) {
  return !simplicial_violation(a, v);
}

std::optional<Index> find_simplicial(const SymmetricMatrix& a, std::span<const Index> support) {
  std::optional<Index> best;
  for (Index v : support) {
    if ((!best || v < *best) && is_simplicial(a, support, v)) {
      best = v;
    }
  }
  return best;
}

std::optional<Index> find_simplicial(const SymmetricMatrix& a) {
  return find_simplicial(a, all_indices(a.size()));
}

std::vector<Index> simplicial_elements(const SymmetricMatrix& a) {
  std::vector<Index> out;
  for (Index v = 0; v < a.size(); ++v) {
    if (is_simplicial(a, v)) {
      out.push_back(v);
    }
  }
  return out;
}

Elimination greedy_elimination(const SymmetricMatrix& a) {
  Elimination result;
  result.remaining = all_indices(a.size());
  while (!result.remaining.empty()) {
    auto v = find_simplicial(a, result.remaining);
    if (!v) {
      break;
    }
    result.prefix.push_back(*v);
    result.remaining.erase(std::find(result.remaining.begin(), result.remaining.end(), *v));
  }
  return result;
}

std::optional<LinearOrder> greedy_peo(const SymmetricMatrix& a) {
  auto elim = greedy_elimination(a);
  if (!elim.complete()) {
    return std::nullopt;
  }
  return LinearOrder(std::move(elim.prefix));
}

std::optional<LinearOrder> peo_starting_at(const SymmetricMatrix& a, Index v) {
  if (v >= a.size()) {
    throw std::out_of_range("index out of range");
  }
  if (!is_simplicial(a, v)) {
    return std::nullopt;
  }
  // v first, then greedy on A[V \ {v}]
  std::vector<Index> order{v};
  std::vector<Index> rest = all_indices(a.size());
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(v));
  while (!rest.empty()) {
    auto next = find_simplicial(a, rest);
    if (!next) {
      return std::nullopt;
    }
    order.push_back(*next);
    rest.erase(std::find(rest.begin(), rest.end(), *next));
  }
  return LinearOrder(std::move(order));
}

std::vector<LinearOrder> all_peos_bruteforce(const SymmetricMatrix& a) {
  if (a.size() > kPermutationOracleCap) {
    throw std::length_error("permutation oracle is limited to n <= " +
                            std::to_string(kPermutationOracleCap));
  }
  std::vector<LinearOrder> out;
  std::vector<Index> perm = all_indices(a.size());
  do {
    LinearOrder pi(perm);
    if (is_peo(a, pi)) {
      out.push_back(std::move(pi));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace peo
