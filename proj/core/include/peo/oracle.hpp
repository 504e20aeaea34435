#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "peo/certificate.hpp"
#include "peo/matrix.hpp"
#include "peo/walk.hpp"

namespace peo {

/// Largest n accepted by the walk-enumerating oracles.
inline constexpr std::size_t kWalkOracleCap = 7;

/// Default total-length cap 2n + 2 for the pair search.
std::size_t default_walk_cap(std::size_t n);

/// Brute-force searches over weighted chordless walks, independent of the
/// separation machinery. Walks are explored in order of length and reduced to
/// their (end points, internal elements) profile, which is all that
/// self-containment looks at; the shortest walk per profile is kept.
///
/// Throws std::length_error when n > kWalkOracleCap and std::invalid_argument
/// when max_len < 3.

/// A self-contained pair (W, W') with length(W) + length(W') <= max_len,
/// minimizing the total. W == W' is allowed and counts twice.
std::optional<ForbiddenPair> find_self_contained_pair_bruteforce(const SymmetricMatrix& a,
                                                                 std::size_t max_len);
std::optional<ForbiddenPair> find_self_contained_pair_bruteforce(const SymmetricMatrix& a);

/// A single self-contained weighted chordless walk of length <= max_len.
std::optional<Walk> find_self_contained_walk_bruteforce(const SymmetricMatrix& a,
                                                        std::size_t max_len);

/// A self-contained family of at most `max_walks` weighted chordless walks,
/// each of length <= max_len.
std::optional<std::vector<Walk>> find_self_contained_family_bruteforce(const SymmetricMatrix& a,
                                                                       std::size_t max_walks,
                                                                       std::size_t max_len);

/// Every weighted chordless walk with exactly two steps, one orientation per
/// walk (first end point < last end point).
std::vector<Walk> chordless_two_walks(const SymmetricMatrix& a);

}  // namespace peo
