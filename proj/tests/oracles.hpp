// Brute-force reference computations. These only use the multiplication
// table, never the library's own class/orbit routines.
#ifndef TWELL_TESTS_ORACLES_HPP
#define TWELL_TESTS_ORACLES_HPP

#include <complex>
#include <set>
#include <vector>

#include "twell/cochain.hpp"
#include "twell/group.hpp"

namespace oracle {

using twell::Element;
using twell::FiniteGroup;

// classes of the subgroup `sub` acting on itself by conjugation
inline int class_count_in(const FiniteGroup& G, const std::vector<Element>& sub) {
  std::set<std::set<Element>> classes;
  for (Element g : sub) {
    std::set<Element> c;
    for (Element h : sub) c.insert(G.mul(G.mul(h, g), G.inv(h)));
    classes.insert(c);
  }
  return static_cast<int>(classes.size());
}

inline int class_count(const FiniteGroup& G) {
  std::vector<Element> all(G.order());
  for (int i = 0; i < G.order(); ++i) all[i] = i;
  return class_count_in(G, all);
}

inline int commuting_pair_count(const FiniteGroup& G) {
  int n = 0;
  for (Element a = 0; a < G.order(); ++a)
    for (Element b = 0; b < G.order(); ++b) n += G.mul(a, b) == G.mul(b, a);
  return n;
}

// orbits of simultaneous conjugation on commuting pairs, kept only when
// keep(g1, g2) holds for the representative
template <typename Keep>
int pair_orbit_count(const FiniteGroup& G, Keep keep) {
  std::set<std::set<std::pair<Element, Element>>> orbits;
  for (Element a = 0; a < G.order(); ++a)
    for (Element b = 0; b < G.order(); ++b) {
      if (G.mul(a, b) != G.mul(b, a)) continue;
      std::set<std::pair<Element, Element>> o;
      for (Element h = 0; h < G.order(); ++h) {
        const Element hi = G.inv(h);
        o.insert({G.mul(G.mul(h, a), hi), G.mul(G.mul(h, b), hi)});
      }
      if (keep(*o.begin())) orbits.insert(o);
    }
  return static_cast<int>(orbits.size());
}

inline int pair_orbit_count(const FiniteGroup& G) {
  return pair_orbit_count(G, [](auto) { return true; });
}

struct Action {
  int n = 0;
  std::vector<std::vector<int>> act;
  int size() const { return n; }
};

// left multiplication on the left cosets gH
inline Action coset_action(const FiniteGroup& G, const std::vector<Element>& sub) {
  std::vector<int> coset(G.order(), -1);
  int n = 0;
  for (Element t = 0; t < G.order(); ++t) {
    if (coset[t] >= 0) continue;
    for (Element h : sub) coset[G.mul(t, h)] = n;
    ++n;
  }
  std::vector<Element> rep(n);
  for (Element t = G.order() - 1; t >= 0; --t) rep[coset[t]] = t;
  Action a{n, std::vector<std::vector<int>>(G.order(), std::vector<int>(n))};
  for (Element g = 0; g < G.order(); ++g)
    for (int x = 0; x < n; ++x) a.act[g][x] = coset[G.mul(g, rep[x])];
  return a;
}

// Equivariant K-theory rank of a finite G-set: sum over orbits of the class
// count of a point stabilizer.
inline int gset_k_rank(const FiniteGroup& G, int size, const std::vector<std::vector<int>>& act) {
  std::vector<char> seen(size, 0);
  int total = 0;
  for (int x = 0; x < size; ++x) {
    if (seen[x]) continue;
    std::vector<Element> stab;
    for (Element g = 0; g < G.order(); ++g) {
      seen[act[g][x]] = 1;
      if (act[g][x] == x) stab.push_back(g);
    }
    total += class_count_in(G, stab);
  }
  return total;
}

// Scan all (g1, g2, h): a pair is regular when every h commuting with both
// gives a zero stabilizer phase. Returns the number of regular orbits.
inline int regular_pair_orbit_count(const twell::Cochain3& a) {
  const FiniteGroup& G = a.group();
  const int n = G.order();
  std::vector<char> regular(static_cast<std::size_t>(n) * n, 1);
  for (Element g1 = 0; g1 < n; ++g1)
    for (Element g2 = 0; g2 < n; ++g2)
      for (Element h = 0; h < n; ++h) {
        if (G.mul(g1, g2) != G.mul(g2, g1) || G.mul(h, g1) != G.mul(g1, h) || G.mul(h, g2) != G.mul(g2, h))
          continue;
        const twell::Phase p = a(h, g1, g2) + a(g2, h, g1) + a(g1, g2, h) - a(g1, h, g2) - a(h, g2, g1) - a(g2, g1, h);
        if (!p.is_zero()) regular[static_cast<std::size_t>(g1) * n + g2] = 0;
      }
  return pair_orbit_count(G, [&](std::pair<Element, Element> p) {
    return regular[static_cast<std::size_t>(p.first) * n + p.second] != 0;
  });
}

// Induced character by the textbook formula:
// Ind chi(g) = 1/|H| sum_{x in G, x^-1 g x in H} chi(x^-1 g x)
// `sub` lists H as elements of G; chi is indexed like sub.
inline std::vector<std::complex<double>> induced_character(const FiniteGroup& G, const std::vector<Element>& sub,
                                                          const std::vector<std::complex<double>>& chi) {
  std::vector<std::complex<double>> out(G.order());
  for (Element g = 0; g < G.order(); ++g) {
    std::complex<double> s = 0;
    for (Element x = 0; x < G.order(); ++x) {
      const Element y = G.mul(G.mul(G.inv(x), g), x);
      for (std::size_t i = 0; i < sub.size(); ++i)
        if (sub[i] == y) s += chi[i];
    }
    out[g] = s / static_cast<double>(sub.size());
  }
  return out;
}

// Trace of the induced representation built as block matrices over coset
// representatives: Ind(g)_{ij} = chi(t_i^-1 g t_j) when that lies in H.
inline std::vector<std::complex<double>> induced_rep_trace(const FiniteGroup& G, const std::vector<Element>& sub,
                                                          const std::vector<std::complex<double>>& chi) {
  std::vector<Element> reps;
  std::vector<char> covered(G.order(), 0);
  for (Element t = 0; t < G.order(); ++t) {
    if (covered[t]) continue;
    reps.push_back(t);
    for (Element h : sub) covered[G.mul(t, h)] = 1;
  }
  const auto value = [&](Element y) -> std::complex<double> {
    for (std::size_t i = 0; i < sub.size(); ++i)
      if (sub[i] == y) return chi[i];
    return 0;
  };
  std::vector<std::complex<double>> out(G.order());
  for (Element g = 0; g < G.order(); ++g)
    for (Element t : reps) out[g] += value(G.mul(G.mul(G.inv(t), g), t));
  return out;
}

}  // namespace oracle

#endif
