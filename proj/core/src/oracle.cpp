#include "peo/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>

namespace peo {

std::size_t default_walk_cap(std::size_t n) {
  return 2 * n + 2;
}

namespace {

using Mask = std::uint32_t;

// Shortest weighted chordless walk reaching each (start, previous, current,
// internal set) state, with parent links for reconstruction.
class WalkSpace {
 public:
  struct Profile {
    Mask ends;
    Mask internal;
    std::size_t length;
    std::size_t state;
  };

  WalkSpace(const SymmetricMatrix& a, std::size_t max_len) : a_(a), n_(a.size()) {
    if (n_ > kWalkOracleCap) {
      throw std::length_error("walk oracle is limited to n <= " + std::to_string(kWalkOracleCap));
    }
    if (max_len < 3) {
      throw std::invalid_argument("walk length cap must be at least 3");
    }
    const std::size_t states = n_ * n_ * n_ * (std::size_t{1} << n_);
    dist_.assign(states, kUnseen);
    parent_.assign(states, kUnseen);

    std::deque<std::size_t> queue;
    for (Index s = 0; s < n_; ++s) {
      for (Index t = 0; t < n_; ++t) {
        if (s != t) {
          auto id = encode(s, s, t, 0);
          dist_[id] = 1;
          queue.push_back(id);
        }
      }
    }
    while (!queue.empty()) {
      auto id = queue.front();
      queue.pop_front();
      if (dist_[id] >= max_len) {
        continue;
      }
      auto [s, prev, cur, inner] = decode(id);
      for (Index next = 0; next < n_; ++next) {
        if (!chordless_triple(a_, prev, cur, next)) {
          continue;
        }
        auto nid = encode(s, cur, next, inner | bit(cur));
        if (dist_[nid] == kUnseen) {
          dist_[nid] = dist_[id] + 1;
          parent_[nid] = id;
          queue.push_back(nid);
        }
      }
    }

    // shortest walk per (ends, internal) profile, walks of length >= 2 only
    std::map<std::pair<Mask, Mask>, Profile> best;
    for (std::size_t id = 0; id < states; ++id) {
      if (dist_[id] == kUnseen || dist_[id] < 2) {
        continue;
      }
      auto [s, prev, cur, inner] = decode(id);
      Profile p{bit(s) | bit(cur), inner, dist_[id], id};
      auto [it, fresh] = best.try_emplace({p.ends, p.internal}, p);
      if (!fresh && p.length < it->second.length) {
        it->second = p;
      }
    }
    for (auto& [key, p] : best) {
      profiles_.push_back(p);
    }
    std::sort(profiles_.begin(), profiles_.end(),
              [](const Profile& x, const Profile& y) { return x.length < y.length; });
  }

  const std::vector<Profile>& profiles() const { return profiles_; }

  Walk walk(std::size_t id) const {
    std::vector<Index> rev;
    for (;;) {
      auto [s, prev, cur, inner] = decode(id);
      rev.push_back(cur);
      if (parent_[id] == kUnseen) {
        rev.push_back(s);
        break;
      }
      id = parent_[id];
    }
    return Walk(std::vector<Index>(rev.rbegin(), rev.rend()));
  }

 private:
  static constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);

  static Mask bit(Index v) { return Mask{1} << v; }

  std::size_t encode(Index s, Index prev, Index cur, Mask inner) const {
    return ((s * n_ + prev) * n_ + cur) * (std::size_t{1} << n_) + inner;
  }

  std::tuple<Index, Index, Index, Mask> decode(std::size_t id) const {
    const std::size_t width = std::size_t{1} << n_;
    Mask inner = static_cast<Mask>(id % width);
    id /= width;
    Index cur = id % n_;
    id /= n_;
    Index prev = id % n_;
    Index s = id / n_;
    return {s, prev, cur, inner};
  }

  const SymmetricMatrix& a_;
  std::size_t n_;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> parent_;
  std::vector<Profile> profiles_;
};

}  // namespace

std::optional<ForbiddenPair> find_self_contained_pair_bruteforce(const SymmetricMatrix& a,
                                                                 std::size_t max_len) {
  WalkSpace space(a, max_len);
  const auto& ps = space.profiles();
  std::optional<std::pair<std::size_t, std::size_t>> best;
  std::size_t best_total = max_len + 1;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (2 * ps[i].length >= best_total) {
      break;
    }
    for (std::size_t j = i; j < ps.size(); ++j) {
      const std::size_t total = ps[i].length + ps[j].length;
      if (total >= best_total) {
        break;
      }
      if (((ps[i].ends | ps[j].ends) & ~(ps[i].internal | ps[j].internal)) == 0) {
        best = {i, j};
        best_total = total;
        break;
      }
    }
  }
  if (!best) {
    return std::nullopt;
  }
  return ForbiddenPair{space.walk(ps[best->first].state), space.walk(ps[best->second].state)};
}

std::optional<ForbiddenPair> find_self_contained_pair_bruteforce(const SymmetricMatrix& a) {
  return find_self_contained_pair_bruteforce(a, default_walk_cap(a.size()));
}

std::optional<Walk> find_self_contained_walk_bruteforce(const SymmetricMatrix& a,
                                                        std::size_t max_len) {
  WalkSpace space(a, max_len);
  for (const auto& p : space.profiles()) {
    if ((p.ends & ~p.internal) == 0) {
      return space.walk(p.state);
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Walk>> find_self_contained_family_bruteforce(const SymmetricMatrix& a,
                                                                       std::size_t max_walks,
                                                                       std::size_t max_len) {
  WalkSpace space(a, max_len);
  const auto& ps = space.profiles();
  // breadth-first over (union of end points, union of internals) reachable
  // with h walks; a family is self-contained once ends ⊆ internals
  using Key = std::pair<Mask, Mask>;
  std::map<Key, std::vector<std::size_t>> frontier{{Key{0, 0}, {}}};
  std::map<Key, std::vector<std::size_t>> seen = frontier;
  for (std::size_t h = 0; h < max_walks; ++h) {
    std::map<Key, std::vector<std::size_t>> next;
    for (const auto& [key, chosen] : frontier) {
      for (std::size_t i = 0; i < ps.size(); ++i) {
        Key k{key.first | ps[i].ends, key.second | ps[i].internal};
        if (seen.contains(k)) {
          continue;
        }
        auto picks = chosen;
        picks.push_back(i);
        if ((k.first & ~k.second) == 0) {
          std::vector<Walk> family;
          for (auto idx : picks) {
            family.push_back(space.walk(ps[idx].state));
          }
          return family;
        }
        seen.emplace(k, picks);
        next.emplace(k, std::move(picks));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::vector<Walk> chordless_two_walks(const SymmetricMatrix& a) {
  std::vector<Walk> out;
  for (Index y = 0; y < a.size(); ++y) {
    for (Index z = y + 1; z < a.size(); ++z) {
      for (Index x = 0; x < a.size(); ++x) {
        if (chordless_triple(a, y, x, z)) {
          out.push_back(Walk{y, x, z});
        }
      }
    }
  }
  return out;
}

}  // namespace peo
