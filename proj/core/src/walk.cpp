#include "peo/walk.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "peo/order.hpp"

namespace peo {

Walk::Walk(std::vector<Index> seq) : seq_(std::move(seq)) {
  if (seq_.size() < 2) {
    throw std::invalid_argument("a walk needs at least two elements");
  }
}

bool Walk::is_cycle() const {
  if (!closed()) {
    return false;
  }
  std::vector<Index> body(seq_.begin(), seq_.end() - 1);
  std::sort(body.begin(), body.end());
  return std::adjacent_find(body.begin(), body.end()) == body.end();
}

std::set<Index> Walk::vertices() const {
  return {seq_.begin(), seq_.end()};
}

std::set<Index> Walk::internal() const {
  return {seq_.begin() + 1, seq_.end() - 1};
}

Walk Walk::reversed() const {
  return Walk(std::vector<Index>(seq_.rbegin(), seq_.rend()));
}

Walk Walk::sub(std::size_t first, std::size_t last) const {
  if (last <= first || last >= seq_.size()) {
    throw std::out_of_range("bad subwalk range");
  }
  return Walk(std::vector<Index>(seq_.begin() + static_cast<std::ptrdiff_t>(first),
                                 seq_.begin() + static_cast<std::ptrdiff_t>(last) + 1));
}

Walk Walk::concat(const Walk& next) const {
  if (back() != next.front()) {
    throw std::invalid_argument("walks do not share an end point");
  }
  std::vector<Index> joined = seq_;
  joined.insert(joined.end(), next.seq_.begin() + 1, next.seq_.end());
  return Walk(std::move(joined));
}

std::string format_walk(const Walk& w) {
  std::string out;
  for (std::size_t i = 0; i < w.sequence().size(); ++i) {
    if (i) {
      out += ' ';
    }
    out += std::to_string(w[i] + 1);
  }
  return out;
}

Walk parse_walk(std::string_view text, std::size_t n) {
  std::istringstream in{std::string(text)};
  std::vector<Index> seq;
  for (std::string tok; in >> tok;) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::logic_error&) {
      throw ParseError("bad walk element '" + tok + "'", 0);
    }
    if (used != tok.size() || v < 1 || v > n) {
      throw ParseError("walk element '" + tok + "' out of range", 0);
    }
    seq.push_back(static_cast<Index>(v - 1));
  }
  if (seq.size() < 2) {
    throw ParseError("a walk needs at least two elements", 0);
  }
  return Walk(std::move(seq));
}

bool chordless_triple(const SymmetricMatrix& a, Index prev, Index mid, Index next) {
  if (prev == mid || mid == next || prev == next) {
    return false;
  }
  return a(prev, next) < std::min(a(prev, mid), a(mid, next));
}

std::optional<std::size_t> chordless_violation(const SymmetricMatrix& a, const Walk& w) {
  for (Index v : w.sequence()) {
    if (v >= a.size()) {
      throw std::out_of_range("walk element out of range");
    }
  }
  for (std::size_t i = 1; i < w.length(); ++i) {
    if (!chordless_triple(a, w[i - 1], w[i], w[i + 1])) {
      return i;
    }
  }
  return std::nullopt;
}

bool is_weighted_chordless(const SymmetricMatrix& a, const Walk& w) {
  return !chordless_violation(a, w);
}

bool is_weighted_chordless_cycle(const SymmetricMatrix& a, const Walk& w) {
  if (!w.is_cycle()) {
    throw std::invalid_argument("walk is not a cycle");
  }
  const std::size_t p = w.length();
  return is_weighted_chordless(a, w) && chordless_triple(a, w[p - 1], w[0], w[1]);
}

bool is_self_contained(std::span<const Walk> family) {
  if (family.empty()) {
    throw std::invalid_argument("empty walk family");
  }
  std::set<Index> all;
  std::set<Index> inner;
  for (const auto& w : family) {
    all.insert(w.sequence().begin(), w.sequence().end());
    inner.insert(w.sequence().begin() + 1, w.sequence().end() - 1);
  }
  return all == inner;
}

namespace {

// DFS over paths start = v_0 < v_1, ..., every vertex larger than the start,
// extending only while the newest interior triple stays chordless.
bool extend_cycle(const SymmetricMatrix& a, std::vector<Index>& path, std::vector<char>& used) {
  const std::size_t n = a.size();
  const Index start = path.front();
  const Index last = path.back();
  if (path.size() >= 3) {
    const Index before = path[path.size() - 2];
    if (chordless_triple(a, before, last, start) && chordless_triple(a, last, start, path[1])) {
      return true;
    }
  }
  for (Index next = start + 1; next < n; ++next) {
    if (used[next]) {
      continue;
    }
    if (path.size() >= 2 && !chordless_triple(a, path[path.size() - 2], last, next)) {
      continue;
    }
    used[next] = 1;
    path.push_back(next);
    if (extend_cycle(a, path, used)) {
      return true;
    }
    path.pop_back();
    used[next] = 0;
  }
  return false;
}

}  // namespace

std::optional<Walk> find_weighted_chordless_cycle(const SymmetricMatrix& a) {
  const std::size_t n = a.size();
  std::vector<char> used(n, 0);
  for (Index start = 0; start + 2 < n; ++start) {
    std::vector<Index> path{start};
    used.assign(n, 0);
    used[start] = 1;
    if (extend_cycle(a, path, used)) {
      path.push_back(start);
      return Walk(std::move(path));
    }
  }
  return std::nullopt;
}

bool is_critical_walk(const SymmetricMatrix& a, std::span<const Index> support, const Walk& w) {
  if (support.size() < 2 || !w.closed()) {
    return false;
  }
  std::vector<char> member(a.size(), 0);
  for (Index v : support) {
    member[v] = 1;
  }
  for (Index v : w.sequence()) {
    if (v >= a.size() || !member[v]) {
      return false;
    }
  }
  if (!is_weighted_chordless(a, w)) {
    return false;
  }
  const Index root = w.front();
  if (!is_simplicial(a, support, root)) {
    return false;
  }
  const Value lowest = min_offdiag(a, support);
  for (Index u : w.internal()) {
    if (u != root && a(root, u) == lowest) {
      return true;
    }
  }
  return false;
}

bool is_critical_walk(const SymmetricMatrix& a, const Walk& w) {
  std::vector<Index> all(a.size());
  std::iota(all.begin(), all.end(), Index{0});
  return is_critical_walk(a, all, w);
}

bool is_rooted(const Walk& w, const std::set<Index>& s) {
  if (!s.contains(w.front()) || !s.contains(w.back())) {
    return false;
  }
  auto inner = w.internal();
  if (inner.empty()) {
    return false;
  }
  return std::none_of(inner.begin(), inner.end(), [&](Index v) { return s.contains(v); });
}

}  // namespace peo
