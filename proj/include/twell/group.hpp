#ifndef TWELL_GROUP_HPP
#define TWELL_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "twell/error.hpp"

namespace twell {

/// Elements of a finite group are dense indices 0..order-1 with 0 the identity.
using Element = int;

/// Hard cap on group order; the pair and triple kernels are O(|G|^4).
inline constexpr int kDefaultMaxOrder = 1024;

/// An immutable finite group given by its multiplication table.
///
/// Copies share the underlying tables, so passing by value is cheap and
/// instances can be shared across threads.
class FiniteGroup {
public:
  FiniteGroup() : FiniteGroup(trivial_data()) {}

  /// Validates a Cayley table: closure, identity at index 0, inverses and
  /// associativity on every triple.
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::vector<std::string> names = {},
                                int max_order = kDefaultMaxOrder) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw InputError("group table is empty");
    if (n > max_order)
      throw InputError("group order " + std::to_string(n) + " exceeds limit " +
                       std::to_string(max_order));
    auto d = std::make_shared<Data>();
    d->n = n;
    d->mul.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>(table[a].size()) != n)
        throw InputError("group table row " + std::to_string(a) + " has wrong length");
      for (int b = 0; b < n; ++b) {
        const int c = table[a][b];
        if (c < 0 || c >= n)
          throw InputError("group table entry (" + std::to_string(a) + "," + std::to_string(b) +
                           ") out of range");
        d->mul[static_cast<std::size_t>(a) * n + b] = c;
      }
    }
    for (int a = 0; a < n; ++a)
      if (d->at(0, a) != a || d->at(a, 0) != a)
        throw InputError("index 0 is not a two-sided identity (fails at " + std::to_string(a) + ")");
    d->inv.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        if (d->at(a, b) == 0 && d->at(b, a) == 0) {
          d->inv[a] = b;
          break;
        }
      if (d->inv[a] < 0) throw InputError("element " + std::to_string(a) + " has no inverse");
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int ab = d->at(a, b);
        for (int c = 0; c < n; ++c)
          if (d->at(ab, c) != d->at(a, d->at(b, c)))
            throw InputError("multiplication is not associative at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
      }
    if (!names.empty() && static_cast<int>(names.size()) != n)
      throw InputError("element name list has wrong length");
    d->names = std::move(names);
    d->finish();
    return FiniteGroup(std::move(d));
  }

  int order() const { return d_->n; }
  static constexpr Element identity() { return 0; }
  Element mul(Element a, Element b) const { return d_->at(a, b); }
  Element inv(Element a) const { return d_->inv[a]; }
  /// h g h^{-1}
  Element conj(Element h, Element g) const { return mul(mul(h, g), inv(h)); }
  int element_order(Element g) const { return d_->elt_order[g]; }
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }

  /// g^k for any integer k; exponents are reduced mod the element order.
  Element pow(Element g, std::int64_t k) const {
    const std::int64_t m = element_order(g);
    k %= m;
    if (k < 0) k += m;
    Element r = 0;
    for (std::int64_t i = 0; i < k; ++i) r = mul(r, g);
    return r;
  }

  std::string name(Element g) const {
    if (!d_->names.empty()) return d_->names[g];
    return g == 0 ? "e" : "g" + std::to_string(g);
  }
  const std::vector<std::string>& names() const { return d_->names; }

  /// Exponent: lcm of element orders.
  std::int64_t exponent() const {
    std::int64_t e = 1;
    for (int o : d_->elt_order) e = std::lcm(e, static_cast<std::int64_t>(o));
    return e;
  }

  bool same_as(const FiniteGroup& o) const { return d_ == o.d_; }

private:
  struct Data {
    int n = 1;
    std::vector<int> mul{0};
    std::vector<int> inv{0};
    std::vector<int> elt_order{1};
    std::vector<std::string> names;

    int at(int a, int b) const { return mul[static_cast<std::size_t>(a) * n + b]; }
    void finish() {
      elt_order.assign(n, 0);
      for (int g = 0; g < n; ++g) {
        int x = g, k = 1;
        while (x != 0) {
          x = at(x, g);
          ++k;
        }
        elt_order[g] = k;
      }
    }
  };

  static std::shared_ptr<const Data> trivial_data() {
    static const auto d = std::make_shared<const Data>();
    return d;
  }

  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

// ---------------------------------------------------------------------------
// Builders

/// A permutation on {0..n-1} in image form: p[i] is the image of i.
using Permutation = std::vector<int>;

namespace detail {

// (p*q)(x) = p(q(x)): q acts first.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline std::string cycle_notation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      os << j + 1;
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "e";
}

}  // namespace detail

/// Closes a set of permutation generators on `degree` points.
///
/// Elements are enumerated breadth-first from the identity by right
/// multiplication with the generators; each BFS layer is sorted
/// lexicographically by image tuple, so the ordering is deterministic.
inline FiniteGroup group_from_permutations(int degree, const std::vector<Permutation>& gens,
                                           int max_order = kDefaultMaxOrder) {
  if (degree < 1) throw InputError("permutation degree must be positive");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != degree) throw InputError("generator has wrong degree");
    std::vector<bool> hit(degree, false);
    for (int x : g) {
      if (x < 0 || x >= degree || hit[x]) throw InputError("generator is not a permutation");
      hit[x] = true;
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elems{id};
  std::map<Permutation, int> index{{id, 0}};
  std::vector<Permutation> layer{id};
  while (!layer.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : layer)
      for (const auto& g : gens) {
        auto q = detail::compose(p, g);
        if (index.count(q)) continue;
        index.emplace(q, -1);
        next.push_back(std::move(q));
      }
    std::sort(next.begin(), next.end());
    for (auto& q : next) {
      index[q] = static_cast<int>(elems.size());
      elems.push_back(q);
      if (static_cast<int>(elems.size()) > max_order)
        throw InputError("permutation closure exceeds size limit " + std::to_string(max_order));
    }
    layer = std::move(next);
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = detail::cycle_notation(elems[a]);
    for (int b = 0; b < n; ++b) table[a][b] = index.at(detail::compose(elems[a], elems[b]));
  }
  return FiniteGroup::from_table(std::move(table), std::move(names), max_order);
}

/// Z/n with element k the residue k.
inline FiniteGroup cyclic_group(int n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup::from_table(std::move(t), std::move(names));
}

/// A x B with (a, b) at index a*|B| + b.
inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B,
                                  int max_order = kDefaultMaxOrder) {
  const int na = A.order(), nb = B.order();
  if (static_cast<std::int64_t>(na) * nb > max_order)
    throw InputError("product order exceeds limit " + std::to_string(max_order));
  const int n = na * nb;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int x = 0; x < n; ++x) {
    names[x] = "(" + A.name(x / nb) + "," + B.name(x % nb) + ")";
    for (int y = 0; y < n; ++y)
      t[x][y] = A.mul(x / nb, y / nb) * nb + B.mul(x % nb, y % nb);
  }
  return FiniteGroup::from_table(std::move(t), std::move(names), max_order);
}

/// Dihedral group of order 2n; index j*n + k is r^k s^j, with s r s = r^{-1}.
inline FiniteGroup dihedral_group(int n) {
  if (n < 1) throw InputError("dihedral parameter must be positive");
  const int m = 2 * n;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> names(m);
  for (int x = 0; x < m; ++x) {
    const int j = x / n, k = x % n;
    names[x] = (k == 0 && j == 0) ? "e"
               : (j == 0)         ? "r" + std::to_string(k)
                                  : (k == 0 ? std::string("s") : "r" + std::to_string(k) + "s");
    for (int y = 0; y < m; ++y) {
      const int j2 = y / n, k2 = y % n;
      // r^k s^j r^k2 s^j2 = r^{k + (-1)^j k2} s^{j+j2}
      const int kk = ((k + (j ? -k2 : k2)) % n + n) % n;
      t[x][y] = ((j + j2) % 2) * n + kk;
    }
  }
  return FiniteGroup::from_table(std::move(t), std::move(names));
}

/// Quaternion group: indices 0..7 are 1, -1, i, -i, j, -j, k, -k.
inline FiniteGroup quaternion_group() {
  // unit u in {1,i,j,k} -> 0..3, sign bit
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int ux = x / 2, sx = x % 2, uy = y / 2, sy = y % 2;
      t[x][y] = unit_mul[ux][uy] * 2 + (sx ^ sy ^ sign_mul[ux][uy]);
    }
  return FiniteGroup::from_table(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

/// S_n generated by (1 2) and (1 2 ... n); capped at n <= 5.
inline FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 5) throw InputError("symmetric group supported for 1 <= n <= 5");
  if (n == 1) return FiniteGroup();
  Permutation swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return group_from_permutations(n, {swap, cycle});
}

/// A_n generated by 3-cycles (1 2 k); capped at n <= 5.
inline FiniteGroup alternating_group(int n) {
  if (n < 1 || n > 5) throw InputError("alternating group supported for 1 <= n <= 5");
  if (n < 3) return FiniteGroup();
  std::vector<Permutation> gens;
  for (int k = 2; k < n; ++k) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(p);
  }
  return group_from_permutations(n, gens);
}

/// Parses a named family. Accepted: "Z/n" or "Zn", "Dn" (order 2n), "Sn" and
/// "An" for n <= 5, "Q8", "Klein", and products "AxB" of any of these.
inline FiniteGroup named_group(const std::string& spec) {
  const auto x = spec.find('x');
  if (x != std::string::npos) {
    // left-associative product
    const auto last = spec.rfind('x');
    return direct_product(named_group(spec.substr(0, last)), named_group(spec.substr(last + 1)));
  }
  const auto number = [&](std::size_t from) -> int {
    const std::string s = spec.substr(from);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("unknown named group '" + spec + "'");
    return std::stoi(s);
  };
  if (spec == "Q8") return quaternion_group();
  if (spec == "Klein" || spec == "V4") return named_group("Z2xZ2");
  if (spec.rfind("Z/", 0) == 0) return cyclic_group(number(2));
  if (spec.empty()) throw InputError("empty group name");
  switch (spec[0]) {
    case 'Z': return cyclic_group(number(1));
    case 'D': return dihedral_group(number(1));
    case 'S': return symmetric_group(number(1));
    case 'A': return alternating_group(number(1));
    default: break;
  }
  throw InputError("unknown named group '" + spec + "'");
}

// ---------------------------------------------------------------------------
// Conjugacy, centralizers, commuting pairs

/// Sorted element list of a subgroup.
using Subgroup = std::vector<Element>;

/// Conjugacy classes, each sorted; classes ordered by smallest member.
inline std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& G) {
  const int n = G.order();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<Element>> out;
  for (Element g = 0; g < n; ++g) {
    if (cls[g] >= 0) continue;
    std::vector<Element> c;
    for (Element h = 0; h < n; ++h) {
      const Element x = G.conj(h, g);
      if (cls[x] < 0) {
        cls[x] = static_cast<int>(out.size());
        c.push_back(x);
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

/// Index of the conjugacy class of every element (classes as above).
inline std::vector<int> class_index(const FiniteGroup& G) {
  std::vector<int> idx(G.order());
  const auto classes = conjugacy_classes(G);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Element g : classes[c]) idx[g] = static_cast<int>(c);
  return idx;
}

inline Subgroup centralizer(const FiniteGroup& G, Element g) {
  Subgroup z;
  for (Element h = 0; h < G.order(); ++h)
    if (G.commute(g, h)) z.push_back(h);
  return z;
}

struct CommutingPair {
  Element g1 = 0;
  Element g2 = 0;
  friend auto operator<=>(const CommutingPair&, const CommutingPair&) = default;
};

/// Z(g1, g2): stabilizer of the pair under simultaneous conjugation.
inline Subgroup centralizer_pair(const FiniteGroup& G, CommutingPair p) {
  Subgroup z;
  for (Element h = 0; h < G.order(); ++h)
    if (G.commute(p.g1, h) && G.commute(p.g2, h)) z.push_back(h);
  return z;
}

inline CommutingPair conj_pair(const FiniteGroup& G, Element h, CommutingPair p) {
  return {G.conj(h, p.g1), G.conj(h, p.g2)};
}

/// All commuting pairs in lexicographic order.
inline std::vector<CommutingPair> commuting_pairs(const FiniteGroup& G) {
  std::vector<CommutingPair> out;
  for (Element a = 0; a < G.order(); ++a)
    for (Element b = 0; b < G.order(); ++b)
      if (G.commute(a, b)) out.push_back({a, b});
  return out;
}

struct PairOrbit {
  CommutingPair representative;      // lexicographically smallest member
  std::vector<CommutingPair> members;  // sorted
  Subgroup stabilizer;               // Z(representative)
};

/// C[G]: simultaneous-conjugation orbits of commuting pairs, ordered by
/// representative.
inline std::vector<PairOrbit> pair_orbits(const FiniteGroup& G) {
  const int n = G.order();
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  std::vector<PairOrbit> out;
  for (const auto& p : commuting_pairs(G)) {
    if (seen[static_cast<std::size_t>(p.g1) * n + p.g2]) continue;
    PairOrbit o;
    o.representative = p;
    for (Element h = 0; h < n; ++h) {
      const auto q = conj_pair(G, h, p);
      auto& s = seen[static_cast<std::size_t>(q.g1) * n + q.g2];
      if (!s) {
        s = 1;
        o.members.push_back(q);
      }
      if (q == p) o.stabilizer.push_back(h);
    }
    std::sort(o.members.begin(), o.members.end());
    out.push_back(std::move(o));
  }
  return out;
}

/// Dense lookup from commuting pairs to their position in commuting_pairs(G)
/// and to their orbit in pair_orbits(G).
class PairIndex {
public:
  PairIndex() = default;
  explicit PairIndex(const FiniteGroup& G)
      : n_(G.order()), pairs_(commuting_pairs(G)), orbits_(pair_orbits(G)) {
    slot_.assign(static_cast<std::size_t>(n_) * n_, -1);
    for (std::size_t i = 0; i < pairs_.size(); ++i)
      slot_[key(pairs_[i])] = static_cast<int>(i);
    orbit_of_.assign(pairs_.size(), -1);
    for (std::size_t o = 0; o < orbits_.size(); ++o)
      for (const auto& m : orbits_[o].members) orbit_of_[slot_[key(m)]] = static_cast<int>(o);
  }

  const std::vector<CommutingPair>& pairs() const { return pairs_; }
  const std::vector<PairOrbit>& orbits() const { return orbits_; }
  std::size_t size() const { return pairs_.size(); }
  /// -1 when the pair does not commute.
  int index(CommutingPair p) const { return slot_[key(p)]; }
  int orbit(CommutingPair p) const { return orbit_of_.at(static_cast<std::size_t>(index(p))); }

private:
  std::size_t key(CommutingPair p) const { return static_cast<std::size_t>(p.g1) * n_ + p.g2; }

  int n_ = 1;
  std::vector<CommutingPair> pairs_;
  std::vector<PairOrbit> orbits_;
  std::vector<int> slot_;
  std::vector<int> orbit_of_;
};

// ---------------------------------------------------------------------------
// G-sets

/// A finite left G-set: act[g][x] is g.x.
struct GSet {
  int size = 1;
  std::vector<std::vector<int>> act;

  int operator()(Element g, int x) const { return act[g][x]; }
};

/// The one-point G-set.
inline GSet point_gset(const FiniteGroup& G) {
  return GSet{1, std::vector<std::vector<int>>(G.order(), std::vector<int>{0})};
}

/// G acting on itself by left multiplication.
inline GSet regular_gset(const FiniteGroup& G) {
  GSet X{G.order(), {}};
  X.act.assign(G.order(), std::vector<int>(G.order()));
  for (Element g = 0; g < G.order(); ++g)
    for (Element h = 0; h < G.order(); ++h) X.act[g][h] = G.mul(g, h);
  return X;
}

/// Checks identity and compatibility act(g, act(h, x)) = act(gh, x).
inline GSet make_gset(const FiniteGroup& G, int size, std::vector<std::vector<int>> act) {
  if (size < 0) throw InputError("G-set size must be nonnegative");
  if (static_cast<int>(act.size()) != G.order())
    throw InputError("G-set action needs one row per group element");
  for (Element g = 0; g < G.order(); ++g) {
    if (static_cast<int>(act[g].size()) != size)
      throw InputError("G-set action row " + std::to_string(g) + " has wrong length");
    for (int x : act[g])
      if (x < 0 || x >= size) throw InputError("G-set action image out of range");
  }
  for (int x = 0; x < size; ++x)
    if (act[0][x] != x) throw InputError("identity does not act trivially on point " + std::to_string(x));
  for (Element g = 0; g < G.order(); ++g)
    for (Element h = 0; h < G.order(); ++h)
      for (int x = 0; x < size; ++x)
        if (act[g][act[h][x]] != act[G.mul(g, h)][x])
          throw InputError("G-set action not compatible at (" + std::to_string(g) + "," +
                           std::to_string(h) + "," + std::to_string(x) + ")");
  return GSet{size, std::move(act)};
}

/// Points fixed by every listed element.
inline std::vector<int> fixed_points(const GSet& X, std::span<const Element> elements) {
  std::vector<int> out;
  for (int x = 0; x < X.size; ++x)
    if (std::all_of(elements.begin(), elements.end(), [&](Element g) { return X(g, x) == x; }))
      out.push_back(x);
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms

struct Homomorphism {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Element> map;

  Element operator()(Element h) const { return map[h]; }
};

/// Validates map: source -> target. Reports the first failing pair.
inline Homomorphism check_homomorphism(const FiniteGroup& H, const FiniteGroup& G,
                                       std::vector<Element> map) {
  if (static_cast<int>(map.size()) != H.order())
    throw InputError("homomorphism table must have one entry per source element");
  for (Element x : map)
    if (x < 0 || x >= G.order()) throw InputError("homomorphism image out of range");
  if (map[0] != 0) throw InputError("homomorphism does not preserve the identity");
  for (Element a = 0; a < H.order(); ++a)
    for (Element b = 0; b < H.order(); ++b)
      if (map[H.mul(a, b)] != G.mul(map[a], map[b]))
        throw InputError("homomorphism not multiplicative at pair (" + std::to_string(a) + "," +
                         std::to_string(b) + ")");
  return Homomorphism{H, G, std::move(map)};
}

inline Homomorphism identity_hom(const FiniteGroup& G) {
  std::vector<Element> m(G.order());
  std::iota(m.begin(), m.end(), 0);
  return Homomorphism{G, G, std::move(m)};
}

/// The unique map to the trivial group.
inline Homomorphism terminal_hom(const FiniteGroup& G) {
  return Homomorphism{G, FiniteGroup(), std::vector<Element>(G.order(), 0)};
}

/// Index of the element with the given display name.
inline Element element_by_name(const FiniteGroup& G, const std::string& name) {
  for (Element g = 0; g < G.order(); ++g)
    if (G.name(g) == name) return g;
  throw InputError("no element named '" + name + "'");
}

/// G -> Z/m sending t^k N to k, for a normal subgroup N (sorted) with G/N
/// cyclic of order m generated by tN. Validated.
inline Homomorphism cyclic_quotient(const FiniteGroup& G, const Subgroup& N, Element t) {
  std::vector<Element> map(G.order(), -1);
  Element c = 0;
  int m = 0;
  do {
    for (Element x : N) {
      const Element y = G.mul(c, x);
      if (map[y] != -1) throw InputError("cyclic_quotient: N is not normal or t has the wrong order");
      map[y] = m;
    }
    c = G.mul(c, t);
    ++m;
  } while (!std::binary_search(N.begin(), N.end(), c));
  if (std::find(map.begin(), map.end(), -1) != map.end())
    throw InputError("cyclic_quotient: cosets of t do not cover the group");
  return check_homomorphism(G, cyclic_group(m), std::move(map));
}

/// The subgroup generated by all commutators, sorted.
inline Subgroup commutator_subgroup(const FiniteGroup& G) {
  std::vector<char> in(G.order(), 0);
  in[0] = 1;
  std::vector<Element> gens;
  for (Element a = 0; a < G.order(); ++a)
    for (Element b = 0; b < G.order(); ++b) {
      const Element c = G.mul(G.mul(a, b), G.inv(G.mul(b, a)));
      if (!in[c]) {
        in[c] = 1;
        gens.push_back(c);
      }
    }
  // close under multiplication
  std::vector<Element> elems;
  for (Element g = 0; g < G.order(); ++g)
    if (in[g]) elems.push_back(g);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (const Element x : {G.mul(elems[i], elems[j]), G.mul(elems[j], elems[i])})
        if (!in[x]) {
          in[x] = 1;
          elems.push_back(x);
        }
  std::sort(elems.begin(), elems.end());
  return elems;
}

/// Inclusion of the subgroup generated by `gens`, ordered as a fresh group by
/// BFS closure (sorted layers). Returns the subgroup and the inclusion map.
inline Homomorphism subgroup_inclusion(const FiniteGroup& G, const std::vector<Element>& gens) {
  std::vector<Element> elems{0};
  std::vector<int> pos(G.order(), -1);
  pos[0] = 0;
  std::vector<Element> layer{0};
  while (!layer.empty()) {
    std::vector<Element> next;
    for (Element x : layer)
      for (Element g : gens) {
        const Element y = G.mul(x, g);
        if (pos[y] != -1) continue;
        pos[y] = -2;
        next.push_back(y);
      }
    std::sort(next.begin(), next.end());
    for (Element y : next) {
      pos[y] = static_cast<int>(elems.size());
      elems.push_back(y);
    }
    layer = std::move(next);
  }
  const int m = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> names(m);
  for (int a = 0; a < m; ++a) {
    names[a] = G.name(elems[a]);
    for (int b = 0; b < m; ++b) t[a][b] = pos[G.mul(elems[a], elems[b])];
  }
  auto H = FiniteGroup::from_table(std::move(t), std::move(names));
  return check_homomorphism(H, G, std::move(elems));
}

}  // namespace twell

#endif
