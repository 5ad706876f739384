#ifndef TWELL_SECTIONS_HPP
#define TWELL_SECTIONS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twell/cochain.hpp"
#include "twell/cyclotomic.hpp"
#include "twell/error.hpp"
#include "twell/group.hpp"
#include "twell/inertia.hpp"
#include "twell/symbolic.hpp"
#include "twell/transgression.hpp"

namespace twell {

/// Dimension of an invariant-section space together with its grading.
///
/// The holomorphic factor on lattices is infinite dimensional, so for the
/// torus geometry `dimension` is the rank of the coefficient system in form
/// degree `degree`, i.e. the rank as a module over functions of modular
/// weight `modular_weight`. Always degree + modular_weight == weight.
struct SectionSpace {
  int dimension = 0;
  std::vector<std::string> basis;
  int weight = 0;
  int degree = 0;
  int modular_weight = 0;
};

/// Cohomology of one fixed-point set in a single degree, with the action of
/// the stabilizer Z. Exactly one of `eigenphases` or `traces` is set; both
/// are indexed like the sorted stabilizer.
///
/// `eigenphases[i]` lists the eigenvalues of the i-th stabilizer element as
/// phases (so its length is `dim`); `traces[i]` is a complex trace for
/// imported data that is not known exactly.
struct CohomologyEntry {
  int degree = 0;
  int dim = 0;
  std::optional<std::vector<std::vector<Phase>>> eigenphases;
  std::optional<std::vector<std::complex<double>>> traces;
};

/// Per component of the inertia groupoid (conjugacy classes for Loop, pair
/// orbits for Torus, in the library's canonical order), the cohomology of
/// the corresponding fixed-point set.
struct CohomologyData {
  Geometry geometry = Geometry::Loop;
  std::vector<std::vector<CohomologyEntry>> components;
};

namespace detail {

// eigenphases of a permutation: every L-cycle contributes the L-th roots of 1
inline std::vector<Phase> permutation_eigenphases(const std::vector<int>& perm) {
  std::vector<Phase> out;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::int64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    for (std::int64_t k = 0; k < len; ++k) out.emplace_back(k, len);
  }
  return out;
}

inline CohomologyEntry fixed_set_entry(const GSet& X, const std::vector<int>& fixed,
                                       const Subgroup& stab) {
  CohomologyEntry e;
  e.degree = 0;
  e.dim = static_cast<int>(fixed.size());
  std::vector<std::vector<Phase>> eig;
  for (Element h : stab) {
    std::vector<int> perm(fixed.size());
    for (std::size_t i = 0; i < fixed.size(); ++i) {
      const int y = X(h, fixed[i]);
      perm[i] = static_cast<int>(std::lower_bound(fixed.begin(), fixed.end(), y) - fixed.begin());
    }
    eig.push_back(permutation_eigenphases(perm));
  }
  e.eigenphases = std::move(eig);
  return e;
}

inline std::pair<Element, Subgroup> loop_component(const FiniteGroup& G,
                                                   const std::vector<Element>& cls) {
  return {cls.front(), centralizer(G, cls.front())};
}

}  // namespace detail

/// Degree-0 data of a finite G-set: H^0(X^g) = C[X^g] with Z acting by
/// permutation.
inline CohomologyData cohomology_from_gset(const FiniteGroup& G, const GSet& X, Geometry geometry) {
  CohomologyData d{geometry, {}};
  if (geometry == Geometry::Loop) {
    for (const auto& cls : conjugacy_classes(G)) {
      const auto [g, z] = detail::loop_component(G, cls);
      const Element gs[] = {g};
      d.components.push_back({detail::fixed_set_entry(X, fixed_points(X, gs), z)});
    }
  } else {
    for (const auto& o : pair_orbits(G)) {
      const Element gs[] = {o.representative.g1, o.representative.g2};
      d.components.push_back({detail::fixed_set_entry(X, fixed_points(X, gs), o.stabilizer)});
    }
  }
  return d;
}

inline CohomologyData point_data(const FiniteGroup& G, Geometry geometry) {
  return cohomology_from_gset(G, point_gset(G), geometry);
}

// ---------------------------------------------------------------------------
// Regular classes and orbits

/// Conjugacy classes whose stabilizer character chi_g is trivial.
inline std::vector<std::vector<Element>> regular_classes(const FiniteGroup& G, const Cochain2& alpha) {
  require_cocycle(alpha);
  std::vector<std::vector<Element>> out;
  for (auto& cls : conjugacy_classes(G))
    if (chi_g(alpha, cls.front()).is_trivial()) out.push_back(std::move(cls));
  return out;
}

/// Pair orbits whose stabilizer character chi_{g1,g2} is trivial.
inline std::vector<PairOrbit> regular_pair_orbits(const FiniteGroup& G, const Cochain3& alpha) {
  require_cocycle(alpha);
  std::vector<PairOrbit> out;
  for (auto& o : pair_orbits(G))
    if (chi_pair(alpha, o.representative).is_trivial()) out.push_back(std::move(o));
  return out;
}

// ---------------------------------------------------------------------------
// Projector traces

namespace detail {

// dim (H (x) chi)^Z = (1/|Z|) sum_h tr(h) chi(h)
inline int isotypic_dimension(const CohomologyEntry& e, const StabilizerCharacter& chi,
                              const std::string& where) {
  const std::size_t z = chi.subgroup.size();
  if (e.dim < 0) throw InputError(where + ": negative dimension");
  if (e.eigenphases) {
    if (e.eigenphases->size() != z)
      throw InputError(where + ": character table needs " + std::to_string(z) + " columns");
    CyclotomicSum s;
    for (std::size_t i = 0; i < z; ++i) {
      const auto& eig = (*e.eigenphases)[i];
      if (static_cast<int>(eig.size()) != e.dim)
        throw InputError(where + ": eigenvalue list length differs from dimension");
      for (const Phase& q : eig) s.add(q + chi.phase[i]);
    }
    const auto v = s.scaled(Rational(1, static_cast<std::int64_t>(z))).rational_value();
    if (!v || v->denominator() != 1 || v->numerator() < 0)
      throw InputError(where + ": projector trace is not a nonnegative integer");
    return static_cast<int>(v->numerator());
  }
  if (e.traces) {
    if (e.traces->size() != z)
      throw InputError(where + ": character table needs " + std::to_string(z) + " columns");
    std::complex<double> s = 0;
    for (std::size_t i = 0; i < z; ++i) s += (*e.traces)[i] * chi.phase[i].to_complex();
    s /= static_cast<double>(z);
    const double r = std::round(s.real());
    if (std::abs(s - std::complex<double>(r, 0.0)) > 1e-6 || r < 0)
      throw InputError(where + ": projector trace is not a nonnegative integer");
    return static_cast<int>(r);
  }
  throw InputError(where + ": cohomology entry carries no character data");
}

inline std::string basis_label(const std::string& base, int degree, int copy, int copies) {
  std::string s = base;
  if (degree != 0) s += "^" + std::to_string(degree);
  if (copies > 1) s += "#" + std::to_string(copy);
  return s;
}

}  // namespace detail

enum class Parity { Even, Odd };

/// Rank of the twisted equivariant K-theory with complex coefficients in the
/// given parity: sum over classes [g] of dim (H^parity(X^g) (x) chi_g)^{Z(g)}.
inline SectionSpace ktheory_dim(const FiniteGroup& G, const CohomologyData& data, const Cochain2& alpha,
                                Parity parity) {
  require_cocycle(alpha);
  const auto classes = conjugacy_classes(G);
  if (data.geometry != Geometry::Loop || data.components.size() != classes.size())
    throw InputError("cohomology data must cover every conjugacy class");
  SectionSpace out;
  out.weight = out.degree = (parity == Parity::Even ? 0 : 1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const Element g = classes[c].front();
    const auto chi = chi_g(alpha, g);
    for (const auto& e : data.components[c]) {
      if ((e.degree % 2 == 0) != (parity == Parity::Even)) continue;
      const int m = detail::isotypic_dimension(e, chi, "class [" + G.name(g) + "]");
      for (int i = 0; i < m; ++i)
        out.basis.push_back(detail::basis_label("[" + G.name(g) + "]", e.degree, i, m));
      out.dimension += m;
    }
  }
  return out;
}

/// Coefficient ranks of twisted elliptic cohomology in total weight k.
struct EllRank {
  SectionSpace total;                 // degree 0, modular weight k; dimension summed over all i
  std::vector<SectionSpace> by_degree;  // one entry per form degree i present, j = k - i
};

inline EllRank ell_rank(const FiniteGroup& G, const CohomologyData& data, const Cochain3& alpha, int k) {
  require_cocycle(alpha);
  const auto orbits = pair_orbits(G);
  if (data.geometry != Geometry::Torus || data.components.size() != orbits.size())
    throw InputError("cohomology data must cover every commuting-pair orbit");
  std::map<int, SectionSpace> per;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    const auto p = orbits[o].representative;
    const auto chi = chi_pair(alpha, p);
    const std::string label = "[" + G.name(p.g1) + "," + G.name(p.g2) + "]";
    for (const auto& e : data.components[o]) {
      auto& s = per[e.degree];
      s.weight = k;
      s.degree = e.degree;
      s.modular_weight = k - e.degree;
      const int m = detail::isotypic_dimension(e, chi, "orbit " + label);
      for (int i = 0; i < m; ++i) s.basis.push_back(detail::basis_label(label, e.degree, i, m));
      s.dimension += m;
    }
  }
  EllRank r;
  r.total.weight = r.total.modular_weight = k;
  for (auto& [i, s] : per) {
    r.total.dimension += s.dimension;
    r.total.basis.insert(r.total.basis.end(), s.basis.begin(), s.basis.end());
    r.by_degree.push_back(std::move(s));
  }
  return r;
}

// ---------------------------------------------------------------------------
// SL2(Z) blocks

struct SL2ZBlocks {
  int regular_orbits = 0;  // |regular C[G] orbits|
  int blocks = 0;          // SL2(Z)-orbits consisting of regular orbits
  bool stable = true;      // regular set is a union of SL2(Z)-orbits
  std::vector<std::vector<int>> partition;  // SL2(Z)-orbits as pair_orbits indices
  /// Identifying `blocks` with the rank of the SL2(Z)-invariant part assumes
  /// the SL2(Z) arrows act trivially on lines over their stabilizers.
  static constexpr const char* assumption =
      "blocks equals the invariant rank only if SL2(Z) arrow phases are trivial on stabilizers";
};

/// Regular-orbit SL2(Z) stability without throwing.
inline SL2ZBlocks sl2z_blocks(const FiniteGroup& G, const Cochain3& alpha) {
  require_cocycle(alpha);
  const PairIndex index(G);
  SL2ZBlocks r;
  r.partition = sl2z_orbits(G, index);
  std::vector<char> regular(index.orbits().size(), 0);
  for (std::size_t o = 0; o < index.orbits().size(); ++o) {
    regular[o] = chi_pair(alpha, index.orbits()[o].representative).is_trivial();
    r.regular_orbits += regular[o];
  }
  for (const auto& block : r.partition) {
    const auto n = std::count_if(block.begin(), block.end(), [&](int o) { return regular[o]; });
    if (n == static_cast<long>(block.size()))
      ++r.blocks;
    else if (n != 0)
      r.stable = false;
  }
  return r;
}

/// Number of SL2(Z)-orbits of regular pair orbits; throws ConsistencyError
/// when the regular set is not SL2(Z)-stable.
inline int sl2z_block_count(const FiniteGroup& G, const Cochain3& alpha) {
  const auto r = sl2z_blocks(G, alpha);
  if (!r.stable)
    throw ConsistencyError("regular pair orbits are not stable under SL2(Z) generators S, T");
  return r.blocks;
}

// ---------------------------------------------------------------------------
// Renormalization-group weight bookkeeping

/// Which first-order operator to apply in the torus geometry.
///
/// Both operators have the form (vol / (d vol / d lbar_k)) d/d lbar_k with
/// vol = lbar1 l2 - lbar2 l1. For k = 2 one may also write the coefficient vol / l1,
/// which differs from vol / (d vol / d lbar2) = -vol / l1 by a sign;
/// `SecondPlusSign` uses that form.
enum class RGField { First, Second, SecondPlusSign };

namespace detail {
enum Sym : int { kR, kVol, kL1, kL2, kLb1, kLb2, kF };
}

/// (operator - deg/2) applied to the generator r^a (x) w (Loop) or
/// vol^a F(l1, l2) (x) w (Torus), w a form of degree i. Zero iff the
/// generator is RG invariant.
inline sym::Expr rg_residual(Geometry geometry, Rational a, int i, RGField field = RGField::First) {
  using sym::Expr;
  using namespace detail;
  const Rational half_deg(i, 2);
  if (geometry == Geometry::Loop) {
    const Expr f = Expr::symbol(kR, a);
    return Expr::symbol(kR) * sym::diff(f, kR) - half_deg * f;
  }
  const Expr vol_poly = Expr::symbol(kLb1) * Expr::symbol(kL2) - Expr::symbol(kLb2) * Expr::symbol(kL1);
  const int var = field == RGField::First ? kLb1 : kLb2;
  const Expr dvol = sym::diff(vol_poly, var);  // l2 or -l1
  // F is holomorphic: no chain rule entry, so d F / d lbar = 0
  const Expr f = Expr::symbol(kVol, a) * Expr::symbol(kF);
  const Expr df = sym::diff(f, var, {{kVol, dvol}});
  Expr coeff;
  if (field == RGField::SecondPlusSign)
    coeff = Expr::symbol(kVol) * Expr::symbol(kL1, -1);
  else
    coeff = Expr::symbol(kVol) * (field == RGField::First ? Expr::symbol(kL2, -1) : Rational(-1) * Expr::symbol(kL1, -1));
  return coeff * df - half_deg * f;
}

/// True iff the weight-a generator with a degree-i form is annihilated by the
/// RG operator(s) of the geometry; both torus operators must annihilate it.
inline bool rg_weight_check(Geometry geometry, Rational a, int i) {
  if (geometry == Geometry::Loop) return rg_residual(geometry, a, i).is_zero();
  return rg_residual(geometry, a, i, RGField::First).is_zero() &&
         rg_residual(geometry, a, i, RGField::Second).is_zero();
}

}  // namespace twell

#endif
