#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "peo/graph.hpp"
#include "peo/matrix.hpp"
#include "peo/walk.hpp"

namespace peo {

/// A cover (X, Y) of the index set with X\Y and Y\X nonempty and every
/// cross entry A_xy (x in X\Y, y in Y\X) equal to the minimum entry.
struct Separation {
  std::vector<Index> x;  // sorted
  std::vector<Index> y;  // sorted

  std::vector<Index> common() const;  // X ∩ Y
  std::vector<Index> x_only() const;  // X \ Y
  std::vector<Index> y_only() const;  // Y \ X
};

/// Graph on the full index set whose edges are the pairs of `support` with
/// A_xy > min A[support]. Vertices outside the support are isolated.
Graph above_min_graph(const SymmetricMatrix& a, std::span<const Index> support);

/// Separation of A[support] built from the above-minimum graph H:
///  - H disconnected: X = the component of the smallest index, Y = the rest;
///  - otherwise S is an inclusion-minimal vertex separator of H, grown from
///    the minimal (a, b)-separator of the lexicographically smallest pair at
///    the minimum, X = C ∪ S for the component C of a, Y = support \ C.
/// Every component of H - S is then adjacent to every s in S, so each
/// u outside X ∩ Y reaches each s through connecting_walk().
/// Requires |support| >= 2 (a separation always exists then).
Separation find_separation(const SymmetricMatrix& a, std::span<const Index> support);
Separation find_separation(const SymmetricMatrix& a);

/// Separation of A[support] with `a` in X\Y and `b` in Y\X, where
/// A_ab = min A[support]. S is the minimal (a, b)-separator
/// N_H(a) ∩ N_H(C_b), C_b the component of b in H - N_H[a]; connecting_walk()
/// is guaranteed only for u in {a, b}.
Separation find_separation(const SymmetricMatrix& a, std::span<const Index> support,
                           Index first, Index second);
Separation find_separation(const SymmetricMatrix& a, Index first, Index second);

/// Checks the covering and cross-entry conditions on A[support].
bool is_separation(const SymmetricMatrix& a, std::span<const Index> support,
                   const Separation& sep);

/// Shortest path of H from u (outside X ∩ Y) to s (in X ∩ Y) through the
/// side containing u, internally avoiding X ∩ Y. Such a path is a weighted
/// chordless walk in A (or a single pair with A_us > min). nullopt if s is
/// unreachable that way.
std::optional<Walk> connecting_walk(const SymmetricMatrix& a, std::span<const Index> support,
                                    const Separation& sep, Index u, Index s);

}  // namespace peo
