// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "peo/certificate.hpp"
#include "peo/classes.hpp"
#include "peo/levels.hpp"
#include "peo/oracle.hpp"
#include "peo/order.hpp"
#include "peo/walk.hpp"

using namespace peo;
using namespace peo::test;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  std::string note;  // instance counts, printed on success too

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 means no limit
  std::function<Verdict()> run;
};

std::set<std::vector<Index>> undirected(const std::vector<Walk>& walks) {
  std::set<std::vector<Index>> out;
  for (const auto& w : walks) {
    auto seq = w.sequence();
    if (seq.front() > seq.back()) std::reverse(seq.begin(), seq.end());
    out.insert(seq);
  }
  return out;
}

Verdict fixture_a() {
  Verdict v;
  auto a = stuck5();
  v.require(!find_simplicial(a), "simplicial element found");
  v.require(!greedy_peo(a), "greedy produced an order");
  v.require(!find_weighted_chordless_cycle(a), "weighted chordless cycle found");
  auto w = walk1({1, 4, 5, 3, 1, 2, 5});
  v.require(is_weighted_chordless(a, w) && w.self_contained(), "walk 1 4 5 3 1 2 5 rejected");
  // every (p, m, q) with p < q by direct comparison
  std::vector<Walk> direct;
  for (Index p = 0; p < 5; ++p)
    for (Index q = p + 1; q < 5; ++q)
      for (Index m = 0; m < 5; ++m)
        if (m != p && m != q && a(p, q) < a(p, m) && a(p, q) < a(m, q))
          direct.push_back(Walk{p, m, q});
  auto expected = undirected({walk1({2, 1, 3}), walk1({1, 2, 5}), walk1({1, 3, 5}),
                              walk1({1, 4, 5}), walk1({3, 5, 4})});
  v.require(undirected(direct) == expected, "two-step walks differ (direct)");
  v.require(undirected(chordless_two_walks(a)) == expected, "two-step walks differ (library)");
  return v;
}

Verdict fixture_b() {
  Verdict v;
  auto b = cycle5();
  auto dec = level_decomposition(b);
  v.require(dec.levels.size() == 3, "expected three levels");
  v.require(is_chordal(dec.levels[1]) && is_chordal(dec.levels[2]), "level graph not chordal");
  v.require(is_weighted_chordless_cycle(b, walk1({1, 2, 3, 4, 5, 1})), "cycle rejected");
  v.require(!greedy_peo(b), "greedy produced an order");
  return v;
}

Verdict fixture_c() {
  Verdict v;
  auto c = pair6();
  v.require(!find_simplicial(c), "simplicial element found");
  v.require(!find_self_contained_walk_bruteforce(c, 14), "single self-contained walk found");
  v.require(is_valid_forbidden_pair(c, {walk1({6, 2, 1, 3, 6}), walk1({1, 4, 6, 5, 1})}),
            "reference pair rejected");
  auto cert = extract_certificate(c);
  v.require(std::holds_alternative<ForbiddenPair>(cert) && is_valid_certificate(c, cert),
            "extractor did not return a valid forbidden pair");
  return v;
}

Verdict fixture_d() {
  Verdict v;
  auto d = unique4();
  v.require(simplicial_elements(d) == std::vector<Index>{3}, "simplicial set is not {4}");
  auto from4 = peo_starting_at(d, 3);
  v.require(from4 && (*from4)[0] == 3 && is_peo(d, *from4), "no PEO starting at 4");
  auto p = all_indices(4);
  std::size_t found = 0;
  do {
    if (is_peo(d, LinearOrder(p))) {
      ++found;
      v.require(p[0] == 3, "a PEO starts elsewhere");
    }
  } while (std::next_permutation(p.begin(), p.end()));
  v.require(found > 0, "oracle found no PEO");
  return v;
}

Verdict certificate_equivalence() {
  Verdict v;
  std::size_t yes = 0, no = 0;
  auto check = [&](const SymmetricMatrix& a) {
    bool greedy = greedy_peo(a).has_value();
    bool oracle = !all_peos_bruteforce(a).empty();
    bool no_pair = !find_self_contained_pair_bruteforce(a, default_walk_cap(a.size()));
    auto cert = extract_certificate(a);
    bool ordering = std::holds_alternative<LinearOrder>(cert);
    bool valid = is_valid_certificate(a, cert);
    (greedy ? yes : no) += 1;
    if (!(greedy == oracle && oracle == no_pair && no_pair == ordering && valid)) {
      v.require(false, "disagreement on\n" + serialize_matrix(a));
    }
  };
  for (std::uint64_t code = 0; code < matrix_count(4, 3); ++code) check(matrix_from_code(4, code, 3));
  Rng rng(2024);
  for (int i = 0; i < 10000; ++i) check(random_matrix(rng, 5, 3));
  v.note = std::to_string(yes) + " with a PEO, " + std::to_string(no) + " without";
  return v;
}

Verdict first_element() {
  Verdict v;
  std::size_t tested = 0;
  auto check = [&](const SymmetricMatrix& a) {
    auto peos = all_peos_bruteforce(a);
    if (peos.empty()) return;
    ++tested;
    for (Index x = 0; x < a.size(); ++x) {
      bool starts = std::any_of(peos.begin(), peos.end(), [&](const LinearOrder& p) { return p[0] == x; });
      if (is_simplicial(a, x) != starts) v.require(false, "law fails on\n" + serialize_matrix(a));
    }
  };
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::uint64_t code = 0; code < matrix_count(n, 3); ++code) check(matrix_from_code(n, code, 3));
  Rng rng(2025);
  for (int i = 0; i < 10000; ++i) check(random_matrix(rng, 5, 3));
  v.note = std::to_string(tested) + " instances with a PEO";
  return v;
}

std::size_t factorial(std::size_t n) {
  return n <= 1 ? 1 : n * factorial(n - 1);
}

Verdict ultrametric_law() {
  Verdict v;
  Rng rng(2026);
  std::size_t ultra = 0;
  for (int i = 0; i < 1000; ++i) {
    auto d = random_distance_matrix(rng, 2 + i % 5);
    bool all = all_peos_bruteforce(negated(d)).size() == factorial(d.size());
    ultra += all;
    if (is_ultrametric(d) != all) v.require(false, "law fails on\n" + serialize_matrix(d));
  }
  v.note = std::to_string(ultra) + " of 1000 ultrametric";
  return v;
}

Verdict implication_chain() {
  Verdict v;
  Rng rng(2027);
  for (int i = 0; i < 10000; ++i) {
    std::size_t n = 3 + i % 5;
    auto a = random_matrix(rng, n, 2 + i % 3);
    auto pi = random_order(rng, n);
    bool r = !robinson_violation(a, pi);
    bool in = !interval_violation(a, pi);
    bool p = is_peo(a, pi);
    bool c = !cocomparability_violation(a, pi);
    if ((r && !in) || (in && !(p && c))) v.require(false, "chain fails on\n" + serialize_matrix(a));
  }
  return v;
}

Verdict power_equivalence() {
  Verdict v;
  std::size_t yes = 0;
  Rng rng(2028);
  for (int i = 0; i < 1000; ++i) {
    std::size_t n = 2 + i % 9;
    Graph g = random_connected_graph(rng, n, 0.05 * (i % 7));
    auto report = check_power_equivalence(g);
    yes += report.has_peo;
    if (!report.consistent())
      v.require(false, "flags disagree on\n" + serialize_graph(g));
    if (!power_chordality_check(g, 6).consistent())
      v.require(false, "power implication fails on\n" + serialize_graph(g));
  }
  v.note = std::to_string(yes) + " of 1000 with all flags yes";
  return v;
}

Verdict distance_preserving() {
  Verdict v;
  std::size_t ordered = 0;
  Rng rng(2029);
  for (int i = 0; i < 1000; ++i) {
    auto wg = random_weighted_graph(rng, 2 + i % 7, 0.3 + 0.1 * (i % 5), 3);
    auto pi = greedy_peo(negated(wg.weight_matrix()));
    ordered += pi.has_value();
    if (pi && !is_distance_preserving_order(wg, *pi))
      v.require(false, "PEO of -W does not preserve distances");
  }
  auto c4 = unit_weighted(read_graph_file(PEO_TEST_DATA_DIR "/c4.txt"));
  auto id = LinearOrder::identity(4);
  v.require(is_distance_preserving_order(c4, id) && !is_peo(negated(c4.weight_matrix()), id),
            "stored 4-cycle fixture does not separate the notions");
  v.note = std::to_string(ordered) + " of 1000 graphs with a PEO of -W";
  return v;
}

Verdict non_extension() {
  Verdict v;
  auto c = pair6();
  SymmetricMatrix minus(6, 0);
  for (Index x = 0; x < 6; ++x)
    for (Index y = x + 1; y < 6; ++y) minus.set(x, y, c(x, y) - 3);
  v.require(!find_weighted_chordless_cycle(minus), "weighted chordless cycle found");
  v.require(!greedy_peo(minus), "greedy produced an order");
  v.require(all_peos_bruteforce(minus).empty(), "oracle found an order");
  return v;
}

Verdict reconstruction() {
  Verdict v;
  Rng rng(2030);
  for (int i = 0; i < 10000; ++i) {
    auto a = random_rational_matrix(rng, 2 + i % 11);
    auto dec = level_decomposition(a);
    for (Index x = 0; x < a.size(); ++x)
      for (Index y = x + 1; y < a.size(); ++y) {
        Value sum = 0;
        for (std::size_t l = 1; l < dec.levels.size(); ++l)
          if (dec.levels[l].has_edge(x, y)) sum += dec.thresholds[l] - dec.thresholds[l - 1];
        if (a(x, y) - dec.thresholds[0] != sum) v.require(false, "identity fails");
      }
    if (reconstruct_from_levels(dec) != a) v.require(false, "reconstruction differs");
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "stuck five-element matrix: no simplicial element, no order, no cycle; walk and 2-walks", 1, fixture_a},
      {2, "five-cycle matrix: chordal levels, weighted chordless 5-cycle, no order", 1, fixture_b},
      {3, "six-element pair matrix: no single walk at cap 14, pair validates, extractor pair", 10, fixture_c},
      {4, "four-element matrix: simplicial set {4}, PEOs start exactly at 4", 1, fixture_d},
      {5, "greedy <=> permutation oracle <=> no self-contained pair <=> extractor ordering", 600, certificate_equivalence},
      {6, "simplicial <=> first element of some PEO (n <= 5)", 0, first_element},
      {7, "ultrametric <=> every order is a PEO of -D (n <= 6)", 0, ultrametric_law},
      {8, "Robinson => interval => PEO and cocomparability (n <= 7)", 0, implication_chain},
      {9, "power equivalence flags agree; G^k chordal => G^(k+2) chordal (n <= 10)", 300, power_equivalence},
      {10, "PEOs of -W preserve distances; 4-cycle separates the notions", 0, distance_preserving},
      {11, "3 - M: no weighted chordless cycle and no order", 0, non_extension},
      {12, "level reconstruction identity on exact rationals (n <= 12)", 0, reconstruction},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      v.require(false, "time limit exceeded");
    }
    std::printf("%s criterion %2d: %s (%.2fs)\n", v.pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                seconds);
    if (!v.note.empty()) {
      std::printf("    %s\n", v.note.c_str());
    }
    if (!v.pass) {
      std::printf("    %s\n", v.detail.c_str());
      ++failures;
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
