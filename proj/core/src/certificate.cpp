#include "peo/certificate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "peo/separation.hpp"

namespace peo {

bool is_valid_forbidden_pair(const SymmetricMatrix& a, const ForbiddenPair& pair) {
  for (const Walk* w : {&pair.first, &pair.second}) {
    for (Index v : w->sequence()) {
      if (v >= a.size()) {
        return false;
      }
    }
  }
  const Walk family[] = {pair.first, pair.second};
  return is_weighted_chordless(a, pair.first) && is_weighted_chordless(a, pair.second) &&
         is_self_contained(family);
}

bool is_valid_certificate(const SymmetricMatrix& a, const Certificate& cert) {
  if (const auto* pi = std::get_if<LinearOrder>(&cert)) {
    return pi->size() == a.size() && is_peo(a, *pi);
  }
  return is_valid_forbidden_pair(a, std::get<ForbiddenPair>(cert));
}

std::string format_certificate(const Certificate& cert) {
  if (const auto* pi = std::get_if<LinearOrder>(&cert)) {
    return "PEO: " + format_order(*pi);
  }
  const auto& pair = std::get<ForbiddenPair>(cert);
  return "FORBIDDEN: W1=" + format_walk(pair.first) + "; W2=" + format_walk(pair.second);
}

Certificate parse_certificate(std::string_view text, std::size_t n) {
  constexpr std::string_view kPeo = "PEO:";
  constexpr std::string_view kForbidden = "FORBIDDEN:";
  if (text.starts_with(kPeo)) {
    return parse_order(text.substr(kPeo.size()), n);
  }
  if (!text.starts_with(kForbidden)) {
    throw ParseError("certificate must start with 'PEO:' or 'FORBIDDEN:'", 0);
  }
  auto body = text.substr(kForbidden.size());
  auto w1 = body.find("W1=");
  auto semi = body.find(';');
  auto w2 = body.find("W2=");
  if (w1 == std::string_view::npos || semi == std::string_view::npos ||
      w2 == std::string_view::npos || !(w1 < semi && semi < w2)) {
    throw ParseError("expected 'W1=<walk>; W2=<walk>'", 0);
  }
  return ForbiddenPair{parse_walk(body.substr(w1 + 3, semi - w1 - 3), n),
                       parse_walk(body.substr(w2 + 3), n)};
}

namespace {

using Subset = std::vector<Index>;  // sorted ascending

bool contains(const Subset& s, Index v) {
  return std::binary_search(s.begin(), s.end(), v);
}

Subset intersect(const Subset& a, const Subset& b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subset difference(const Subset& a, const Subset& b) {
  Subset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Per-side outcome of the shrinking argument: a simplicial element of A[side]
// outside X ∩ Y, a weighted chordless walk in A[side] rooted in X ∩ Y, or a
// forbidden pair found further down.
struct SideSimplicial {
  Index x;
};
struct SideRooted {
  Walk walk;
};
using SideWitness = std::variant<SideSimplicial, SideRooted, ForbiddenPair>;

// The subwalk of w between the nearest elements of `separator` strictly before
// and after position `pos`.
Walk rooted_around(const Walk& w, std::size_t pos, const Subset& separator) {
  std::size_t first = pos;
  while (first > 0 && !contains(separator, w[first])) {
    --first;
  }
  std::size_t last = pos;
  while (last < w.length() && !contains(separator, w[last])) {
    ++last;
  }
  if (!contains(separator, w[first]) || !contains(separator, w[last])) {
    throw InternalConsistencyError("walk end points are not in the separator");
  }
  return w.sub(first, last);
}

class Extractor {
 public:
  explicit Extractor(const SymmetricMatrix& a) : a_(a) {}

  StructuralWitness solve(const Subset& z) {
    if (auto it = memo_.find(z); it != memo_.end()) {
      return it->second;
    }
    StructuralWitness result = solve_uncached(z);
    check(z, result);
    memo_.emplace(z, result);
    return result;
  }

 private:
  StructuralWitness solve_uncached(const Subset& z) {
    if (z.size() == 2) {
      return SimplicialPair{z[0], z[1]};
    }
    Separation sep = find_separation(a_, z);
    Subset common = sep.common();

    if (common.empty()) {
      auto x = simplicial_in(sep.x);
      if (auto* pair = std::get_if<ForbiddenPair>(&x)) {
        return *pair;
      }
      auto y = simplicial_in(sep.y);
      if (auto* pair = std::get_if<ForbiddenPair>(&y)) {
        return *pair;
      }
      return SimplicialPair{std::get<Index>(x), std::get<Index>(y)};
    }

    SideWitness on_x = side(sep.x, sep.y, common);
    if (auto* pair = std::get_if<ForbiddenPair>(&on_x)) {
      return *pair;
    }
    SideWitness on_y = side(sep.y, sep.x, common);
    if (auto* pair = std::get_if<ForbiddenPair>(&on_y)) {
      return *pair;
    }

    auto* sx = std::get_if<SideSimplicial>(&on_x);
    auto* sy = std::get_if<SideSimplicial>(&on_y);
    if (sx && sy) {
      // both simplicial in A[z], cross entry at the minimum
      return SimplicialPair{sx->x, sy->x};
    }
    if (sx || sy) {
      // simplicial x on one side, rooted Q on the other:
      // x -> Q.front() -> ... -> Q.back() -> x is a critical walk
      Index x = sx ? sx->x : sy->x;
      const Walk& q = sx ? std::get<SideRooted>(on_y).walk : std::get<SideRooted>(on_x).walk;
      Walk to_start = connect(z, sep, x, q.front());
      Walk to_end = connect(z, sep, x, q.back());
      return CriticalWalk{to_start.concat(q).concat(to_end.reversed())};
    }

    // rooted P in A[X], rooted Q in A[Y]; each closes into a walk with a
    // single non-internal element, which is internal in the other one
    const Walk& p = std::get<SideRooted>(on_x).walk;
    const Walk& q = std::get<SideRooted>(on_y).walk;
    const Index q_second = q[1];
    const Index p_second = p[1];
    Walk through_p = connect(z, sep, q_second, p.front())
                         .concat(p)
                         .concat(connect(z, sep, q_second, p.back()).reversed());
    Walk through_q = connect(z, sep, p_second, q.front())
                         .concat(q)
                         .concat(connect(z, sep, p_second, q.back()).reversed());
    return ForbiddenPair{std::move(through_p), std::move(through_q)};
  }

  // A simplicial element of A[part], or a forbidden pair.
  std::variant<Index, ForbiddenPair> simplicial_in(const Subset& part) {
    if (part.size() <= 2) {
      return part.front();
    }
    StructuralWitness w = solve(part);
    if (auto* pair = std::get_if<ForbiddenPair>(&w)) {
      return *pair;
    }
    if (auto* sp = std::get_if<SimplicialPair>(&w)) {
      return sp->u;
    }
    return std::get<CriticalWalk>(w).walk.front();
  }

  // Shrinks `own` through nested separations until A[own] is shown to have a
  // simplicial element outside the separator or a walk rooted in it.
  SideWitness side(const Subset& own, const Subset& other, const Subset& separator) {
    Subset current = own;
    for (;;) {
      StructuralWitness w = solve(current);
      if (auto* pair = std::get_if<ForbiddenPair>(&w)) {
        return *pair;
      }
      const std::size_t shared = intersect(current, other).size();

      std::optional<std::pair<Index, Index>> low_pair;
      if (auto* sp = std::get_if<SimplicialPair>(&w)) {
        for (Index v : {sp->u, sp->v}) {
          if (!contains(other, v)) {
            return checked_side(own, separator, SideSimplicial{v});
          }
        }
        low_pair = std::pair{sp->u, sp->v};
      } else {
        const Walk& walk = std::get<CriticalWalk>(w).walk;
        const Index root = walk.front();
        if (!contains(other, root)) {
          return checked_side(own, separator, SideSimplicial{root});
        }
        const Value lowest = min_offdiag(a_, current);
        for (std::size_t i = 1; i < walk.length(); ++i) {
          Index u = walk[i];
          if (u == root) {
            continue;
          }
          if (shared == 1 && !contains(separator, u)) {
            // the root is the only element of `current` in the separator
            return checked_side(own, separator, SideRooted{rooted_around(walk, i, separator)});
          }
          if (shared > 1 && a_(root, u) == lowest) {
            if (contains(other, u)) {
              low_pair = std::pair{root, u};
            } else {
              return checked_side(own, separator,
                                  SideRooted{rooted_around(walk, i, separator)});
            }
            break;
          }
        }
        if (!low_pair) {
          throw InternalConsistencyError("critical walk without a usable internal element");
        }
      }

      // min A[current] is attained inside the separator: split it there
      auto [v, w_] = *low_pair;
      Separation cd = find_separation(a_, current, v, w_);
      if (intersect(cd.x, difference(current, other)).empty()) {
        std::swap(cd.x, cd.y);
        std::swap(v, w_);
      }
      Subset cd_common = cd.common();
      Subset escaped = intersect(difference(current, other), cd_common);
      if (!escaped.empty()) {
        const Index mid = escaped.front();
        auto left = connecting_walk(a_, current, cd, v, mid);
        auto right = connecting_walk(a_, current, cd, w_, mid);
        if (!left || !right) {
          throw InternalConsistencyError("missing connecting walk in nested separation");
        }
        Walk joined = left->concat(right->reversed());
        std::size_t pos = left->length();
        return checked_side(own, separator, SideRooted{rooted_around(joined, pos, separator)});
      }
      if (cd.x.size() >= current.size()) {
        throw InternalConsistencyError("nested separation did not shrink");
      }
      current = cd.x;
    }
  }

  Walk connect(const Subset& z, const Separation& sep, Index from, Index to) {
    auto walk = connecting_walk(a_, z, sep, from, to);
    if (!walk) {
      throw InternalConsistencyError("separation lacks a connecting walk");
    }
    return *walk;
  }

  SideWitness checked_side(const Subset& own, const Subset& separator, SideWitness result) {
    bool ok = false;
    if (auto* s = std::get_if<SideSimplicial>(&result)) {
      ok = !contains(separator, s->x) && is_simplicial(a_, own, s->x);
    } else if (auto* r = std::get_if<SideRooted>(&result)) {
      const auto& seq = r->walk.sequence();
      ok = std::all_of(seq.begin(), seq.end(), [&](Index v) { return contains(own, v); }) &&
           is_weighted_chordless(a_, r->walk) &&
           is_rooted(r->walk, std::set<Index>(separator.begin(), separator.end()));
    }
    if (!ok) {
      throw InternalConsistencyError("side witness failed validation");
    }
    return result;
  }

  void check(const Subset& z, const StructuralWitness& result) const {
    bool ok = false;
    if (auto* sp = std::get_if<SimplicialPair>(&result)) {
      ok = sp->u != sp->v && contains(z, sp->u) && contains(z, sp->v) &&
           is_simplicial(a_, z, sp->u) && is_simplicial(a_, z, sp->v) &&
           a_(sp->u, sp->v) == min_offdiag(a_, z);
    } else if (auto* cw = std::get_if<CriticalWalk>(&result)) {
      ok = is_critical_walk(a_, z, cw->walk);
    } else {
      ok = is_valid_forbidden_pair(a_, std::get<ForbiddenPair>(result));
    }
    if (!ok) {
      throw InternalConsistencyError("structural witness failed validation");
    }
  }

  const SymmetricMatrix& a_;
  std::map<Subset, StructuralWitness> memo_;
};

}  // namespace

StructuralWitness structural_witness(const SymmetricMatrix& a, std::span<const Index> support) {
  if (support.size() < 2) {
    throw std::invalid_argument("structural_witness needs at least two elements");
  }
  Subset z(support.begin(), support.end());
  std::sort(z.begin(), z.end());
  if (std::adjacent_find(z.begin(), z.end()) != z.end() || z.back() >= a.size()) {
    throw std::invalid_argument("support must be distinct valid indices");
  }
  return Extractor(a).solve(z);
}

StructuralWitness structural_witness(const SymmetricMatrix& a) {
  Subset all(a.size());
  std::iota(all.begin(), all.end(), Index{0});
  return structural_witness(a, all);
}

Certificate extract_certificate(const SymmetricMatrix& a) {
  Elimination elim = greedy_elimination(a);
  if (elim.complete()) {
    LinearOrder pi(std::move(elim.prefix));
    if (!is_peo(a, pi)) {
      throw InternalConsistencyError("greedy order is not a perfect elimination ordering");
    }
    return pi;
  }
  // A[remaining] has no simplicial element, so the recursion can only end in
  // a forbidden pair; any pair there is also one in A
  StructuralWitness w = Extractor(a).solve(elim.remaining);
  auto* pair = std::get_if<ForbiddenPair>(&w);
  if (!pair || !is_valid_forbidden_pair(a, *pair)) {
    throw InternalConsistencyError("no forbidden pair in a matrix without simplicial elements");
  }
  return *pair;
}

}  // namespace peo
