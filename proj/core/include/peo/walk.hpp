#pragma once

#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "peo/matrix.hpp"

namespace peo {

/// Ordered sequence (v_0, ..., v_p), p >= 1; repeats allowed.
class Walk {
 public:
  /// Throws std::invalid_argument for fewer than two elements.
  explicit Walk(std::vector<Index> seq);
  Walk(std::initializer_list<Index> seq) : Walk(std::vector<Index>(seq)) {}

  /// Number of steps p.
  std::size_t length() const noexcept { return seq_.size() - 1; }
  const std::vector<Index>& sequence() const noexcept { return seq_; }
  Index operator[](std::size_t i) const { return seq_[i]; }
  Index front() const noexcept { return seq_.front(); }
  Index back() const noexcept { return seq_.back(); }

  bool closed() const noexcept { return seq_.front() == seq_.back(); }
  /// Closed with v_0, ..., v_{p-1} pairwise distinct.
  bool is_cycle() const;

  std::set<Index> vertices() const;  // V(W)
  std::set<Index> internal() const;  // I(W)
  bool self_contained() const { return vertices() == internal(); }

  Walk reversed() const;
  /// seq[first..last] inclusive; requires last > first.
  Walk sub(std::size_t first, std::size_t last) const;

  /// Joins two walks sharing an end point: this->back() == next.front().
  Walk concat(const Walk& next) const;

  friend bool operator==(const Walk&, const Walk&) = default;

 private:
  std::vector<Index> seq_;
};

/// 1-based space separated indices.
std::string format_walk(const Walk& w);
/// Inverse of format_walk; throws ParseError.
Walk parse_walk(std::string_view text, std::size_t n);

/// Weighted-chordless test for a single triple (prev, mid, next):
/// A_{prev,next} < min(A_{prev,mid}, A_{mid,next}). Triples with a repeated
/// element are never chordless.
bool chordless_triple(const SymmetricMatrix& a, Index prev, Index mid, Index next);

/// nullopt if every internal position satisfies the strict inequality,
/// otherwise the first failing position i (1 <= i <= p-1).
std::optional<std::size_t> chordless_violation(const SymmetricMatrix& a, const Walk& w);
bool is_weighted_chordless(const SymmetricMatrix& a, const Walk& w);

/// Weighted chordless and additionally chordless at the wrap-around position.
/// Throws std::invalid_argument when w is not a cycle.
bool is_weighted_chordless_cycle(const SymmetricMatrix& a, const Walk& w);

/// ∪ V(W_h) == ∪ I(W_h). Throws std::invalid_argument on an empty family.
bool is_self_contained(std::span<const Walk> family);

/// Exhaustive search for a weighted chordless cycle; exponential, meant for
/// n up to about 12. Returns a closed walk (v_0, ..., v_{p-1}, v_0) with v_0
/// its smallest element.
std::optional<Walk> find_weighted_chordless_cycle(const SymmetricMatrix& a);

/// Closed, weighted chordless, end point simplicial in A[support] and some
/// internal u != v_0 with A_{v_0 u} = min A[support]. All of w must lie in
/// the support.
bool is_critical_walk(const SymmetricMatrix& a, std::span<const Index> support, const Walk& w);
bool is_critical_walk(const SymmetricMatrix& a, const Walk& w);

/// End points in S, internal elements outside S, at least one internal element.
bool is_rooted(const Walk& w, const std::set<Index>& s);

}  // namespace peo
