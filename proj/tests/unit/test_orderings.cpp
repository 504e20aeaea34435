#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "peo/graph.hpp"
#include "peo/levels.hpp"
#include "peo/order.hpp"

using namespace peo;
using namespace peo::test;

namespace {

bool holds_three_points(const SymmetricMatrix& a, const std::vector<Index>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      for (std::size_t k = j + 1; k < p.size(); ++k) {
        const auto& xy = a(p[i], p[j]);
        const auto& xz = a(p[i], p[k]);
        if (a(p[j], p[k]) < (xy < xz ? xy : xz)) return false;
      }
  return true;
}

// First PEO found by plain enumeration, or empty.
std::vector<std::vector<Index>> enumerate_peos(const SymmetricMatrix& a, bool stop_at_first) {
  std::vector<std::vector<Index>> out;
  auto p = all_indices(a.size());
  do {
    if (holds_three_points(a, p)) {
      out.push_back(p);
      if (stop_at_first) break;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_clique_union(const Graph& g) {
  for (Index x = 0; x < g.size(); ++x)
    for (Index y : g.neighbors(x))
      for (Index z : g.neighbors(y))
        if (z != x && !g.has_edge(x, z)) return false;
  return true;
}

}  // namespace

TEST_CASE("LinearOrder validates permutations") {
  CHECK_THROWS_AS(LinearOrder({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(LinearOrder({0, 3}), std::invalid_argument);
  auto pi = order1({4, 2, 1, 3});
  CHECK(pi.position(3) == 0);
  CHECK(pi.position(2) == 3);
  CHECK(format_order(pi) == "4 2 1 3");
  CHECK(parse_order("4 2 1 3", 4) == pi);
  CHECK_THROWS_AS(parse_order("4 2 1", 4), ParseError);
  CHECK_THROWS_AS(parse_order("4 2 1 1", 4), ParseError);
  CHECK_THROWS_AS(parse_order("4 2 1 x", 4), ParseError);
  CHECK_THROWS_AS(parse_order("0 2 1 3", 4), ParseError);
  CHECK(LinearOrder::identity(3) == LinearOrder({0, 1, 2}));
}

TEST_CASE("is_peo examples") {
  auto d = unique4();
  CHECK(is_peo(d, order1({4, 2, 1, 3})));
  auto bad = peo_violation(d, order1({4, 1, 2, 3}));
  REQUIRE(bad);
  CHECK(*bad == TripleViolation{0, 1, 2});
  for (int round = 0; round < 6; ++round) {
    Rng rng(round);
    CHECK(is_peo(constant_matrix(5, 1), random_order(rng, 5)));
  }
  CHECK_THROWS_AS(is_peo(d, LinearOrder::identity(3)), std::invalid_argument);
}

TEST_CASE("simplicial elements") {
  auto d = unique4();
  CHECK(is_simplicial(d, 3));
  auto witness = simplicial_violation(d, 0);
  REQUIRE(witness);
  CHECK(*witness == std::pair<Index, Index>{1, 2});
  for (Index v = 0; v < 5; ++v) CHECK_FALSE(is_simplicial(stuck5(), v));
  CHECK(find_simplicial(d) == Index{3});
  CHECK_FALSE(find_simplicial(pair6()));
  CHECK(find_simplicial(SymmetricMatrix(2, 5)) == Index{0});
  CHECK(simplicial_elements(d) == std::vector<Index>{3});
  CHECK_THROWS(is_simplicial(d, 4));
}

TEST_CASE("greedy elimination") {
  auto pi = greedy_peo(unique4());
  REQUIRE(pi);
  CHECK(*pi == order1({4, 2, 1, 3}));
  CHECK_FALSE(greedy_peo(stuck5()));
  CHECK_FALSE(greedy_peo(cycle5()));
  CHECK_FALSE(greedy_peo(pair6()));
  CHECK_FALSE(greedy_peo(cycle_graph(4).adjacency_matrix()));
  CHECK(greedy_peo(SymmetricMatrix(1)));
  auto stuck = greedy_elimination(stuck5());
  CHECK(stuck.prefix.empty());
  CHECK(stuck.remaining.size() == 5);
}

TEST_CASE("peo_starting_at") {
  auto d = unique4();
  auto from4 = peo_starting_at(d, 3);
  REQUIRE(from4);
  CHECK((*from4)[0] == 3);
  CHECK(is_peo(d, *from4));
  CHECK_FALSE(peo_starting_at(d, 0));
  auto c = constant_matrix(4, 2);
  for (Index v = 0; v < 4; ++v) {
    auto pi = peo_starting_at(c, v);
    REQUIRE(pi);
    CHECK((*pi)[0] == v);
  }
  CHECK_FALSE(peo_starting_at(stuck5(), 0));
}

TEST_CASE("permutation oracle") {
  CHECK(all_peos_bruteforce(constant_matrix(3, 1)).size() == 6);
  CHECK(all_peos_bruteforce(stuck5()).empty());
  CHECK(all_peos_bruteforce(cycle5()).empty());
  auto from_d = all_peos_bruteforce(unique4());
  CHECK(from_d.size() == enumerate_peos(unique4(), false).size());
  CHECK(std::is_sorted(from_d.begin(), from_d.end()));
  CHECK_THROWS_AS(all_peos_bruteforce(SymmetricMatrix(10)), std::length_error);

  Rng rng(17);
  for (int round = 0; round < 300; ++round) {
    auto a = random_matrix(rng, 1 + round % 6, 3);
    auto mine = enumerate_peos(a, false);
    auto lib = all_peos_bruteforce(a);
    REQUIRE(mine.size() == lib.size());
    for (std::size_t i = 0; i < lib.size(); ++i) CHECK(lib[i].elements() == mine[i]);
  }
}

TEST_CASE("greedy agrees with enumeration on all small matrices") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint64_t code = 0; code < matrix_count(n, 3); ++code) {
      auto a = matrix_from_code(n, code, 3);
      auto pi = greedy_peo(a);
      CHECK(pi.has_value() == !enumerate_peos(a, true).empty());
      if (pi) CHECK(holds_three_points(a, pi->elements()));
    }
  }
  Rng rng(23);
  for (int round = 0; round < 10000; ++round) {
    auto a = random_matrix(rng, 5 + round % 2, 3);
    auto pi = greedy_peo(a);
    CHECK(pi.has_value() == !enumerate_peos(a, true).empty());
    if (pi) CHECK(holds_three_points(a, pi->elements()));
  }
}

TEST_CASE("first element law") {
  Rng rng(29);
  for (int round = 0; round < 2000; ++round) {
    auto a = random_matrix(rng, 2 + round % 4, 3);
    auto peos = enumerate_peos(a, false);
    if (peos.empty()) continue;
    for (Index v = 0; v < a.size(); ++v) {
      bool starts = std::any_of(peos.begin(), peos.end(), [&](const auto& p) { return p[0] == v; });
      CHECK(is_simplicial(a, v) == starts);
      CHECK(peo_starting_at(a, v).has_value() == starts);
    }
  }
}

TEST_CASE("suffix-simplicial law") {
  Rng rng(31);
  for (int round = 0; round < 3000; ++round) {
    std::size_t n = 2 + round % 6;
    auto a = random_matrix(rng, n, 3);
    auto pi = random_order(rng, n);
    bool suffixes = true;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Index> rest(pi.elements().begin() + static_cast<std::ptrdiff_t>(i),
                              pi.elements().end());
      suffixes = suffixes && is_simplicial(a, rest, pi[i]);
    }
    CHECK(is_peo(a, pi) == suffixes);
  }
}

TEST_CASE("clique-union law") {
  Rng rng(37);
  for (int round = 0; round < 2000; ++round) {
    std::size_t n = 2 + round % 5;
    auto a = random_matrix(rng, n, 3);
    bool every = enumerate_peos(a, false).size() == [n] {
      std::size_t f = 1;
      for (std::size_t i = 2; i <= n; ++i) f *= i;
      return f;
    }();
    auto dec = level_decomposition(a);
    bool cliques = std::all_of(dec.levels.begin(), dec.levels.end(), is_clique_union);
    CHECK(every == cliques);
  }
}
