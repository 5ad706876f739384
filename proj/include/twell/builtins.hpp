#ifndef TWELL_BUILTINS_HPP
#define TWELL_BUILTINS_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "twell/cochain.hpp"
#include "twell/group.hpp"

namespace twell {

/// Named example groups and twists, so checks can run without input files.

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

template <int N>
struct NamedTwist {
  std::string name;
  Cochain<N> alpha;
};

/// All built-in groups, orders 1..24.
inline std::vector<NamedGroup> builtin_groups() {
  std::vector<NamedGroup> out;
  for (const char* n : {"Z/1", "Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "Klein", "S3", "D4", "Q8", "D5", "A4", "D6", "S4"})
    out.push_back({n, named_group(n)});
  return out;
}

namespace detail {

// r^k s^j -> (k mod 2, j) for D_n with n even
inline Homomorphism dihedral_to_klein(const FiniteGroup& D, int n) {
  std::vector<Element> map(D.order());
  for (Element x = 0; x < D.order(); ++x) map[x] = 2 * ((x % n) % 2) + x / n;
  return check_homomorphism(D, direct_product(cyclic_group(2), cyclic_group(2)), std::move(map));
}

// +-1 -> (0,0), +-i -> (1,0), +-j -> (0,1), +-k -> (1,1)
inline Homomorphism quaternion_to_klein(const FiniteGroup& Q) {
  static const int unit[4] = {0, 2, 1, 3};
  std::vector<Element> map(8);
  for (Element x = 0; x < 8; ++x) map[x] = unit[x / 2];
  return check_homomorphism(Q, direct_product(cyclic_group(2), cyclic_group(2)), std::move(map));
}

// rotations as a subgroup of D_n
inline Subgroup rotations(int n) {
  Subgroup r(n);
  for (int k = 0; k < n; ++k) r[k] = k;
  return r;
}

inline Element outside(const FiniteGroup& G, const Subgroup& N) {
  for (Element g = 0; g < G.order(); ++g)
    if (!std::binary_search(N.begin(), N.end(), g)) return g;
  return 0;
}

}  // namespace detail

/// Built-in 2-cocycles: zero on every group, the Klein twist, and its
/// pullbacks to D4 and Q8.
inline std::vector<NamedTwist<2>> builtin_twists2() {
  std::vector<NamedTwist<2>> out;
  for (const auto& g : builtin_groups()) {
    out.push_back({g.name + ":zero", Cochain2(g.group)});
    if (g.name == "Klein") {
      Cochain2 k(g.group);
      const auto src = klein_2cocycle();
      for (std::size_t i = 0; i < k.size(); ++i) k.at_offset(i) = src.at_offset(i);
      out.push_back({"Klein:klein", k});
    }
    if (g.name == "D4") out.push_back({"D4:klein", pullback(detail::dihedral_to_klein(g.group, 4), klein_2cocycle())});
    if (g.name == "Q8") out.push_back({"Q8:klein", pullback(detail::quaternion_to_klein(g.group), klein_2cocycle())});
  }
  return out;
}

/// Built-in 3-cocycles: zero on every group, cyclic_3cocycle(n, k) on Z/n for
/// n <= 6, and pullbacks of the cyclic generators along maps onto Z/2 or Z/3.
inline std::vector<NamedTwist<3>> builtin_twists3() {
  std::vector<NamedTwist<3>> out;
  for (const auto& g : builtin_groups()) {
    const FiniteGroup& G = g.group;
    out.push_back({g.name + ":zero", Cochain3(G)});
    if (g.name.rfind("Z/", 0) == 0 && G.order() > 1) {
      for (int k = 1; k < G.order(); ++k) {
        Cochain3 c(G);
        const auto src = cyclic_3cocycle(G.order(), k);
        for (std::size_t i = 0; i < c.size(); ++i) c.at_offset(i) = src.at_offset(i);
        out.push_back({g.name + ":cyclic:" + std::to_string(k), c});
      }
      continue;
    }
    Subgroup N;
    if (g.name == "S3" || g.name == "S4" || g.name == "A4")
      N = commutator_subgroup(G);
    else if (g.name == "D4" || g.name == "D5" || g.name == "D6")
      N = detail::rotations(G.order() / 2);
    else if (g.name == "Q8")
      N = {0, 1, 2, 3};  // <i>
    else
      continue;
    const auto q = cyclic_quotient(G, N, detail::outside(G, N));
    out.push_back({g.name + ":quotient-cyclic:1", pullback(q, cyclic_3cocycle(q.target.order(), 1))});
  }
  return out;
}

/// G acting on the left cosets gH; cosets numbered by first appearance.
inline GSet coset_gset(const FiniteGroup& G, const Subgroup& H) {
  std::vector<int> coset(G.order(), -1);
  std::vector<Element> rep;
  for (Element t = 0; t < G.order(); ++t) {
    if (coset[t] >= 0) continue;
    for (Element h : H) coset[G.mul(t, h)] = static_cast<int>(rep.size());
    rep.push_back(t);
  }
  const int n = static_cast<int>(rep.size());
  std::vector<std::vector<int>> act(G.order(), std::vector<int>(n));
  for (Element g = 0; g < G.order(); ++g)
    for (int x = 0; x < n; ++x) act[g][x] = coset[G.mul(g, rep[x])];
  return make_gset(G, n, std::move(act));
}

struct NamedGSet {
  std::string name;
  GSet set;
};

/// The point, the regular G-set, and G/C for each cyclic subgroup C.
inline std::vector<NamedGSet> builtin_gsets(const FiniteGroup& G) {
  std::vector<NamedGSet> out{{"point", point_gset(G)}, {"regular", regular_gset(G)}};
  std::vector<Subgroup> seen;
  for (Element g = 1; g < G.order(); ++g) {
    Subgroup c;
    for (int k = 0; k < G.element_order(g); ++k) c.push_back(G.pow(g, k));
    std::sort(c.begin(), c.end());
    if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
    seen.push_back(c);
    out.push_back({"G/<" + G.name(g) + ">", coset_gset(G, c)});
  }
  return out;
}

}  // namespace twell

#endif
