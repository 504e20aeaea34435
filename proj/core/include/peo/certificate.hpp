#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "peo/matrix.hpp"
#include "peo/order.hpp"
#include "peo/walk.hpp"

namespace peo {

/// Two weighted chordless walks whose family is self-contained. A single
/// self-contained walk W is stored as (W, W).
struct ForbiddenPair {
  Walk first;
  Walk second;

  friend bool operator==(const ForbiddenPair&, const ForbiddenPair&) = default;
};

/// Either a perfect elimination ordering or a forbidden pair.
using Certificate = std::variant<LinearOrder, ForbiddenPair>;

/// Both walks weighted chordless in A and {first, second} self-contained.
bool is_valid_forbidden_pair(const SymmetricMatrix& a, const ForbiddenPair& pair);

/// Orders must pass is_peo, pairs is_valid_forbidden_pair.
bool is_valid_certificate(const SymmetricMatrix& a, const Certificate& cert);

/// "PEO: 4 2 1 3" or "FORBIDDEN: W1=6 2 1 3 6; W2=1 4 6 5 1" (1-based).
std::string format_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view text, std::size_t n);

/// Raised when a constructed witness fails re-validation. Indicates a bug;
/// such a witness is never returned.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Witness that a principal submatrix A[support] has a simplicial element, or
/// that A contains a forbidden pair:
///  - CriticalWalk: closed weighted chordless walk whose end point is
///    simplicial in A[support] and has an internal u with
///    A_{v_0 u} = min A[support];
///  - SimplicialPair: two simplicial elements u != v of A[support] with
///    A_uv = min A[support];
///  - ForbiddenPair: a self-contained pair of weighted chordless walks.
struct CriticalWalk {
  Walk walk;
};
struct SimplicialPair {
  Index u;
  Index v;
};
using StructuralWitness = std::variant<CriticalWalk, SimplicialPair, ForbiddenPair>;

/// Runs the separation recursion on A[support] (|support| >= 2). Every
/// returned witness has been re-validated; see InternalConsistencyError.
StructuralWitness structural_witness(const SymmetricMatrix& a, std::span<const Index> support);
StructuralWitness structural_witness(const SymmetricMatrix& a);

/// A perfect elimination ordering when greedy elimination completes,
/// otherwise a forbidden pair extracted from the stuck principal submatrix.
Certificate extract_certificate(const SymmetricMatrix& a);

}  // namespace peo
