#include "peo/levels.hpp"

#include <algorithm>
#include <stdexcept>

namespace peo {

LevelDecomposition level_decomposition(const SymmetricMatrix& a) {
  const std::size_t n = a.size();
  if (n < 2) {
    throw std::invalid_argument("level decomposition requires n >= 2");
  }
  LevelDecomposition dec;
  for (Index x = 0; x < n; ++x) {
    for (Index y = x + 1; y < n; ++y) {
      dec.thresholds.push_back(a(x, y));
    }
  }
  std::sort(dec.thresholds.begin(), dec.thresholds.end());
  dec.thresholds.erase(std::unique(dec.thresholds.begin(), dec.thresholds.end()),
                       dec.thresholds.end());

  dec.levels.reserve(dec.thresholds.size());
  for (const auto& alpha : dec.thresholds) {
    Graph g(n);
    for (Index x = 0; x < n; ++x) {
      for (Index y = x + 1; y < n; ++y) {
        if (a(x, y) >= alpha) {
          g.add_edge(x, y);
        }
      }
    }
    dec.levels.push_back(std::move(g));
  }
  return dec;
}

SymmetricMatrix reconstruct_from_levels(const LevelDecomposition& dec) {
  const std::size_t n = dec.levels.front().size();
  SymmetricMatrix a(n, dec.thresholds.front());
  for (std::size_t l = 1; l < dec.levels.size(); ++l) {
    const Value step = dec.thresholds[l] - dec.thresholds[l - 1];
    for (auto [x, y] : dec.levels[l].edges()) {
      a.set(x, y, a(x, y) + step);
    }
  }
  return a;
}

}  // namespace peo
