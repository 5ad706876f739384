#ifndef TWELL_INERTIA_HPP
#define TWELL_INERTIA_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "twell/error.hpp"
#include "twell/group.hpp"

namespace twell {

/// Which inertia groupoid: G//G (loops) or C(G)//G (tori).
enum class Geometry { Loop, Torus };

/// The action groupoid G//G or C(G)//G. Objects are elements (Loop) or
/// positions in commuting_pairs(G) (Torus); the arrow h sends an object to its
/// simultaneous conjugate by h.
class LoopGroupoid {
public:
  LoopGroupoid(FiniteGroup G, Geometry kind) : group_(std::move(G)), kind_(kind) {
    if (kind_ == Geometry::Torus) pairs_ = PairIndex(group_);
  }

  const FiniteGroup& group() const { return group_; }
  Geometry kind() const { return kind_; }
  const PairIndex& pairs() const { return pairs_; }

  int object_count() const {
    return kind_ == Geometry::Loop ? group_.order() : static_cast<int>(pairs_.size());
  }

  /// Target of the arrow h out of `object`.
  int act(Element h, int object) const {
    if (kind_ == Geometry::Loop) return group_.conj(h, object);
    return pairs_.index(conj_pair(group_, h, pairs_.pairs()[object]));
  }

  /// Objects partitioned into isomorphism classes, ordered by smallest member.
  std::vector<std::vector<int>> components() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(object_count(), 0);
    for (int o = 0; o < object_count(); ++o) {
      if (seen[o]) continue;
      std::vector<int> c;
      for (Element h = 0; h < group_.order(); ++h) {
        const int t = act(h, o);
        if (!seen[t]) {
          seen[t] = 1;
          c.push_back(t);
        }
      }
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    return out;
  }

private:
  FiniteGroup group_;
  Geometry kind_;
  PairIndex pairs_;
};

/// [[a b] [c d]] with ad - bc = 1.
struct SL2Z {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static SL2Z S() { return {0, -1, 1, 0}; }
  static SL2Z T() { return {1, 1, 0, 1}; }

  bool valid() const { return a * d - b * c == 1; }

  friend SL2Z operator*(const SL2Z& x, const SL2Z& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const SL2Z&, const SL2Z&) = default;
};

/// Right action (g1, g2) . A = (g1^d g2^{-b}, g1^{-c} g2^a).
inline CommutingPair sl2z_act(const FiniteGroup& G, CommutingPair p, const SL2Z& A) {
  if (!A.valid()) throw InputError("matrix does not have determinant 1");
  return {G.mul(G.pow(p.g1, A.d), G.pow(p.g2, -A.b)), G.mul(G.pow(p.g1, -A.c), G.pow(p.g2, A.a))};
}

/// Partition of C[G] into SL2(Z)-orbits, as lists of indices into `orbits`
/// (which must be pair_orbits(G)). Closed under the generators S and T.
inline std::vector<std::vector<int>> sl2z_orbits(const FiniteGroup& G, const PairIndex& index) {
  const auto& orbits = index.orbits();
  const int m = static_cast<int>(orbits.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int o = 0; o < m; ++o)
    for (const auto& A : {SL2Z::S(), SL2Z::T()}) {
      const int t = index.orbit(sl2z_act(G, orbits[o].representative, A));
      const int a = find(o), b = find(t);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(m, -1);
  for (int o = 0; o < m; ++o) {
    const int r = find(o);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(o);
  }
  return out;
}

}  // namespace twell

#endif
