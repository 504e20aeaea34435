#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "peo/graph.hpp"
#include "peo/matrix.hpp"
#include "peo/order.hpp"
#include "peo/walk.hpp"

namespace peo {

// ---------------------------------------------------------------------------
// Ultrametrics and three-point ordering classes
// ---------------------------------------------------------------------------

/// First triple (x, y, z), x < y < z as indices, with one of its three
/// rotations violating D_yz <= max(D_xy, D_xz); the violating rotation is
/// returned with the offending pair in (y, z). nullopt when D is an
/// ultrametric. Throws std::invalid_argument on a negative entry.
std::optional<TripleViolation> ultrametric_violation(const SymmetricMatrix& d);
bool is_ultrametric(const SymmetricMatrix& d);

/// True iff every order is a perfect elimination ordering of A, i.e. -A
/// satisfies the ultrametric inequality (no sign requirement).
bool every_order_is_peo(const SymmetricMatrix& a);

/// A_xz <= min(A_xy, A_yz) for all x <_pi y <_pi z.
std::optional<TripleViolation> robinson_violation(const SymmetricMatrix& a, const LinearOrder& pi);
/// A_xz <= A_yz for all x <_pi y <_pi z.
std::optional<TripleViolation> interval_violation(const SymmetricMatrix& a, const LinearOrder& pi);
/// A_xz <= max(A_xy, A_yz) for all x <_pi y <_pi z.
std::optional<TripleViolation> cocomparability_violation(const SymmetricMatrix& a,
                                                         const LinearOrder& pi);

enum class OrderClass { peo, robinson, interval, cocomparability };

std::string_view to_string(OrderClass c);
/// Accepts "peo", "robinson", "interval", "cocomparability".
std::optional<OrderClass> parse_order_class(std::string_view name);

/// Dispatches to the violation scan of the given class.
std::optional<TripleViolation> order_violation(const SymmetricMatrix& a, const LinearOrder& pi,
                                               OrderClass c);

/// First order in lexicographic enumeration of all n! permutations that
/// passes the class check. Throws std::length_error for n > kPermutationOracleCap.
std::optional<LinearOrder> brute_force_class_recognition(const SymmetricMatrix& a, OrderClass c);

// ---------------------------------------------------------------------------
// Chordality
// ---------------------------------------------------------------------------

/// Maximum cardinality search, ties to the smallest index. Returns the visit
/// order; its reverse is a perfect elimination ordering iff g is chordal.
std::vector<Index> mcs_visit_order(const Graph& g);

/// nullopt if g is chordal, otherwise a chordless cycle (v_0, ..., v_{k-1})
/// with k >= 4, listed without repeating v_0.
std::optional<std::vector<Index>> chordless_cycle(const Graph& g);
bool is_chordal(const Graph& g);

// ---------------------------------------------------------------------------
// Graph powers and shortest-path metrics
// ---------------------------------------------------------------------------

/// The four assertions proven equivalent for -D_G:
///  (i) a perfect elimination ordering exists,
///  (ii) no weighted chordless cycle,
///  (iii) every level graph is chordal,
///  (iv) G and G^2 are chordal.
struct PowerEquivalenceReport {
  bool has_peo = false;
  bool no_weighted_chordless_cycle = false;
  bool levels_chordal = false;
  bool graph_and_square_chordal = false;

  bool consistent() const noexcept {
    return has_peo == no_weighted_chordless_cycle && has_peo == levels_chordal &&
           has_peo == graph_and_square_chordal;
  }
};

/// Disconnected pairs enter -D_G through the sentinel distance 1 + n.
PowerEquivalenceReport check_power_equivalence(const Graph& g);

/// Chordality of G^1 ... G^k_max and whether "G^k chordal => G^{k+2} chordal"
/// held throughout.
struct PowerChordalityReport {
  std::vector<bool> chordal;            // chordal[k - 1] for G^k
  std::optional<std::size_t> violation; // smallest k breaking the implication

  bool consistent() const noexcept { return !violation; }
};

/// Requires k_max >= 3.
PowerChordalityReport power_chordality_check(const Graph& g, std::size_t k_max);

/// nullopt if pi is a distance-preserving elimination ordering of (G, w);
/// otherwise the smallest 1-based position i such that deleting pi_1..pi_i
/// leaves a non-isometric subgraph. Throws on size mismatch.
std::optional<std::size_t> distance_preserving_violation(const WeightedGraph& wg,
                                                         const LinearOrder& pi);
bool is_distance_preserving_order(const WeightedGraph& wg, const LinearOrder& pi);

// ---------------------------------------------------------------------------
// Classification report
// ---------------------------------------------------------------------------

/// Existence flags for the ordering classes of one matrix. The ordering
/// flags come from the permutation oracle and are absent when n exceeds its
/// cap. A Robinson ordering is an interval ordering, and an interval ordering
/// is both a perfect elimination and a cocomparability ordering, so the flags
/// are nested accordingly.
struct OrderingClassReport {
  bool ultrametric = false;  // every order is a PEO (-A is ultrametric)
  bool peo = false;
  std::optional<LinearOrder> peo_witness;
  std::optional<bool> robinson;
  std::optional<bool> interval;
  std::optional<bool> cocomparability;
  std::optional<LinearOrder> robinson_witness;
  std::optional<LinearOrder> interval_witness;
  std::optional<LinearOrder> cocomparability_witness;
  std::optional<Index> simplicial;
  std::vector<bool> levels_chordal;  // entry l - 1 for level graph G_l, l >= 1
  std::optional<Walk> weighted_chordless_cycle;

  bool implications_hold() const;
};

/// The weighted-chordless-cycle search is exhaustive; n above ~12 is slow.
OrderingClassReport classify(const SymmetricMatrix& a);

}  // namespace peo
