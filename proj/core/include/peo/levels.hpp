#pragma once

#include <vector>

#include "peo/graph.hpp"
#include "peo/matrix.hpp"

namespace peo {

/// Threshold decomposition of a matrix: thresholds[l] is the l-th smallest
/// distinct off-diagonal value and levels[l] keeps the pairs with
/// A_xy >= thresholds[l]. levels[0] is complete and the edge sets shrink
/// monotonically with l.
struct LevelDecomposition {
  std::vector<Value> thresholds;
  std::vector<Graph> levels;

  /// Index of the last level (L); L + 1 distinct values.
  std::size_t top() const noexcept { return thresholds.size() - 1; }
};

/// Requires n >= 2.
LevelDecomposition level_decomposition(const SymmetricMatrix& a);

/// Rebuilds A from its levels: alpha_0 + sum_{l>=1} (alpha_l - alpha_{l-1}) [xy in G_l].
SymmetricMatrix reconstruct_from_levels(const LevelDecomposition& dec);

}  // namespace peo
