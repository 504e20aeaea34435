#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "peo/matrix.hpp"

namespace peo {

/// A permutation of [n] with O(1) position lookup.
class LinearOrder {
 public:
  /// Throws std::invalid_argument unless `perm` is a permutation of 0..n-1.
  explicit LinearOrder(std::vector<Index> perm);
  LinearOrder(std::initializer_list<Index> perm) : LinearOrder(std::vector<Index>(perm)) {}

  static LinearOrder identity(std::size_t n);

  std::size_t size() const noexcept { return perm_.size(); }
  Index operator[](std::size_t i) const { return perm_[i]; }
  std::size_t position(Index v) const { return pos_.at(v); }
  const std::vector<Index>& elements() const noexcept { return perm_; }

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) {
    return a.perm_ == b.perm_;
  }
  friend auto operator<=>(const LinearOrder& a, const LinearOrder& b) {
    return a.perm_ <=> b.perm_;
  }

 private:
  std::vector<Index> perm_;
  std::vector<std::size_t> pos_;
};

/// 1-based space separated list.
std::string format_order(const LinearOrder& pi);
/// Inverse of format_order for a matrix of size n; throws ParseError.
LinearOrder parse_order(std::string_view text, std::size_t n);

/// Elements x, y, z with x before y before z in the order at hand that
/// violate one of the three-point conditions.
struct TripleViolation {
  Index x;
  Index y;
  Index z;

  friend bool operator==(const TripleViolation&, const TripleViolation&) = default;
};

/// Scans triples x <_pi y <_pi z in lexicographic order of positions and
/// returns the first one with A_yz < min(A_xy, A_xz), or nullopt when pi is a
/// perfect elimination ordering. Throws std::invalid_argument on a size
/// mismatch.
std::optional<TripleViolation> peo_violation(const SymmetricMatrix& a, const LinearOrder& pi);
bool is_peo(const SymmetricMatrix& a, const LinearOrder& pi);

/// A pair (y, z) of other support elements with A_yz < min(A_vy, A_vz), or
/// nullopt when v is simplicial in A[support].
std::optional<std::pair<Index, Index>> simplicial_violation(const SymmetricMatrix& a,
                                                            std::span<const Index> support,
                                                            Index v);
std::optional<std::pair<Index, Index>> simplicial_violation(const SymmetricMatrix& a, Index v);

bool is_simplicial(const SymmetricMatrix& a, std::span<const Index> support, Index v);
bool is_simplicial(const SymmetricMatrix& a, Index v);

/// Smallest simplicial element of A[support], if any.
std::optional<Index> find_simplicial(const SymmetricMatrix& a, std::span<const Index> support);
std::optional<Index> find_simplicial(const SymmetricMatrix& a);

/// Every simplicial element, ascending.
std::vector<Index> simplicial_elements(const SymmetricMatrix& a);

/// Result of greedy elimination: the eliminated prefix, and the elements left
/// when no simplicial element remains (empty on success).
struct Elimination {
  std::vector<Index> prefix;
  std::vector<Index> remaining;

  bool complete() const noexcept { return remaining.empty(); }
};

/// Repeatedly removes the smallest simplicial element of what is left.
/// O(n^4). Any simplicial choice is safe, so getting stuck means no perfect
/// elimination ordering exists.
Elimination greedy_elimination(const SymmetricMatrix& a);

std::optional<LinearOrder> greedy_peo(const SymmetricMatrix& a);

/// A perfect elimination ordering starting at v, or nullopt when v is not
/// simplicial or A has none.
std::optional<LinearOrder> peo_starting_at(const SymmetricMatrix& a, Index v);

/// Largest n accepted by the permutation-enumerating oracles.
inline constexpr std::size_t kPermutationOracleCap = 9;

/// Every perfect elimination ordering, in lexicographic order. Enumerates all
/// n! permutations; throws std::length_error for n > kPermutationOracleCap.
std::vector<LinearOrder> all_peos_bruteforce(const SymmetricMatrix& a);

}  // namespace peo
