#ifndef TWELL_INDUCTION_HPP
#define TWELL_INDUCTION_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "twell/cochain.hpp"
#include "twell/error.hpp"
#include "twell/group.hpp"
#include "twell/inertia.hpp"
#include "twell/transgression.hpp"

namespace twell {

using Complex = std::complex<double>;

/// A section of a transgressed line over G//G or C(G)//G, optionally over the
/// fixed points of a G-set. values[object * space.size + x]; objects are
/// elements (Loop) or positions in commuting_pairs (Torus). Entries with x
/// not fixed by the object are ignored and kept at zero.
struct EquivariantSection {
  Geometry geometry = Geometry::Loop;
  FiniteGroup group;
  GSet space;
  std::vector<Complex> values;

  EquivariantSection() = default;
  EquivariantSection(Geometry geom, FiniteGroup G) : EquivariantSection(geom, G, point_gset(G)) {}
  EquivariantSection(Geometry geom, FiniteGroup G, GSet X)
      : geometry(geom), group(std::move(G)), space(std::move(X)) {
    values.assign(static_cast<std::size_t>(object_count()) * space.size, Complex(0));
  }

  int object_count() const {
    return geometry == Geometry::Loop ? group.order() : static_cast<int>(commuting_pairs(group).size());
  }
  Complex& at(int object, int x = 0) { return values[static_cast<std::size_t>(object) * space.size + x]; }
  const Complex& at(int object, int x = 0) const {
    return values[static_cast<std::size_t>(object) * space.size + x];
  }
};

/// The line a section lives in: tau of a 2-cocycle or rho of a 3-cocycle.
inline ActionCocycle line_for(const Cochain2& alpha) { return transgress2(alpha); }
inline ActionCocycle line_for(const Cochain3& alpha) { return transgress3(alpha); }

namespace detail {

// element(s) making up an object, for fixed-point tests
inline std::vector<Element> object_elements(const LoopGroupoid& L, int object) {
  if (L.kind() == Geometry::Loop) return {object};
  const auto p = L.pairs().pairs()[object];
  return {p.g1, p.g2};
}

inline bool fixes(const GSet& X, const std::vector<Element>& gs, int x) {
  return std::all_of(gs.begin(), gs.end(), [&](Element g) { return X(g, x) == x; });
}

inline void check_section_shape(const EquivariantSection& s, const LoopGroupoid& L) {
  if (s.geometry != L.kind()) throw InputError("section geometry does not match the twist");
  if (!s.group.same_as(L.group())) throw InputError("section lives on a different group");
  if (s.values.size() != static_cast<std::size_t>(L.object_count()) * s.space.size)
    throw InputError("section has " + std::to_string(s.values.size()) + " values, expected " +
                     std::to_string(L.object_count() * s.space.size));
}

}  // namespace detail

/// max |s(h.o, h.x) - exp(2 pi i phase(h, o)) s(o, x)|, together with any
/// value placed off the fixed-point set.
inline double equivariance_defect(const EquivariantSection& s, const ActionCocycle& line) {
  const LoopGroupoid& L = line.groupoid();
  detail::check_section_shape(s, L);
  const FiniteGroup& G = L.group();
  double worst = 0;
  for (int o = 0; o < L.object_count(); ++o) {
    const auto gs = detail::object_elements(L, o);
    for (int x = 0; x < s.space.size; ++x) {
      if (!detail::fixes(s.space, gs, x)) {
        worst = std::max(worst, std::abs(s.at(o, x)));
        continue;
      }
      for (Element h = 0; h < G.order(); ++h) {
        const Complex want = line(h, o).to_complex() * s.at(o, x);
        worst = std::max(worst, std::abs(s.at(L.act(h, o), s.space(h, x)) - want));
      }
    }
  }
  return worst;
}

template <int N>
bool is_equivariant(const EquivariantSection& s, const Cochain<N>& alpha, double tol = 1e-9) {
  return equivariance_defect(s, line_for(alpha)) <= tol;
}

/// Averages arbitrary values into an equivariant section (Reynolds operator).
inline EquivariantSection make_equivariant(const EquivariantSection& s, const ActionCocycle& line) {
  const LoopGroupoid& L = line.groupoid();
  detail::check_section_shape(s, L);
  const FiniteGroup& G = L.group();
  EquivariantSection out(s.geometry, s.group, s.space);
  for (int o = 0; o < L.object_count(); ++o) {
    const auto gs = detail::object_elements(L, o);
    for (int x = 0; x < s.space.size; ++x) {
      if (!detail::fixes(s.space, gs, x)) continue;
      for (Element h = 0; h < G.order(); ++h)
        out.at(L.act(h, o), s.space(h, x)) += line(h, o).to_complex() * s.at(o, x) / static_cast<double>(G.order());
    }
  }
  return out;
}

/// X viewed as an H-set through f.
inline GSet restrict_gset(const Homomorphism& f, const GSet& X) {
  GSet Y{X.size, {}};
  for (Element h = 0; h < f.source.order(); ++h) Y.act.push_back(X.act[f(h)]);
  return Y;
}

/// f^* s: the value at h (or (h1, h2)) is s at f(h) (or (f(h1), f(h2))).
inline EquivariantSection restrict_section(const Homomorphism& f, const EquivariantSection& s) {
  if (!s.group.same_as(f.target)) throw InputError("section does not live on the target group");
  EquivariantSection out(s.geometry, f.source, restrict_gset(f, s.space));
  if (s.geometry == Geometry::Loop) {
    for (Element h = 0; h < f.source.order(); ++h)
      for (int x = 0; x < s.space.size; ++x) out.at(h, x) = s.at(f(h), x);
  } else {
    const PairIndex H2(f.source), G2(f.target);
    for (std::size_t i = 0; i < H2.size(); ++i) {
      const auto p = H2.pairs()[i];
      const int j = G2.index({f(p.g1), f(p.g2)});
      for (int x = 0; x < s.space.size; ++x) out.at(static_cast<int>(i), x) = s.at(j, x);
    }
  }
  return out;
}

namespace detail {

// source inertia objects mapped to target inertia objects
struct PushData {
  std::vector<int> image;  // source object -> target object
  LoopGroupoid target;
};

inline PushData push_data(const Homomorphism& f, Geometry geom) {
  PushData d{{}, LoopGroupoid(f.target, geom)};
  if (geom == Geometry::Loop) {
    for (Element h = 0; h < f.source.order(); ++h) d.image.push_back(f(h));
  } else {
    for (const auto& p : commuting_pairs(f.source)) d.image.push_back(d.target.pairs().index({f(p.g1), f(p.g2)}));
  }
  return d;
}

inline void check_induction_input(const Homomorphism& f, const EquivariantSection& s, const GSet& X) {
  if (!s.group.same_as(f.source)) throw InputError("section does not live on the source group");
  if (static_cast<int>(X.act.size()) != f.target.order()) throw InputError("G-set is not a G-set of the target group");
  if (s.space.size != X.size) throw InputError("section points do not match the G-set");
}

// f_!(s) by the averaged sum over (kappa, source object)
inline EquivariantSection induce_formula(const Homomorphism& f, const ActionCocycle& line, const EquivariantSection& s,
                                         const GSet& X) {
  check_induction_input(f, s, X);
  const auto d = push_data(f, s.geometry);
  const FiniteGroup& G = f.target;
  EquivariantSection out(s.geometry, G, X);
  const double scale = 1.0 / f.source.order();
  for (std::size_t ho = 0; ho < d.image.size(); ++ho) {
    const int o = d.image[ho];
    const auto fs = object_elements(d.target, o);
    for (int y = 0; y < X.size; ++y) {
      if (!fixes(X, fs, y)) continue;
      const Complex v = s.at(static_cast<int>(ho), y);
      if (v == Complex(0)) continue;
      for (Element k = 0; k < G.order(); ++k)
        out.at(d.target.act(k, o), X(k, y)) += line(k, o).to_complex() * v * scale;
    }
  }
  return out;
}

// f_!(s) as a sum over isomorphism classes of the homotopy fiber, weighted by
// 1/|Aut|
inline EquivariantSection induce_fiber(const Homomorphism& f, const ActionCocycle& line, const EquivariantSection& s,
                                       const GSet& X) {
  check_induction_input(f, s, X);
  const auto d = push_data(f, s.geometry);
  const LoopGroupoid source(f.source, s.geometry);
  const FiniteGroup& G = f.target;
  const FiniteGroup& H = f.source;
  EquivariantSection out(s.geometry, G, X);
  const int ng = G.order();
  for (int o = 0; o < d.target.object_count(); ++o) {
    // fiber objects (ho, kappa) with kappa . f(ho) = o, encoded ho * |G| + kappa
    std::vector<int> objects;
    for (std::size_t ho = 0; ho < d.image.size(); ++ho)
      for (Element k = 0; k < ng; ++k)
        if (d.target.act(k, d.image[ho]) == o) objects.push_back(static_cast<int>(ho) * ng + k);
    std::sort(objects.begin(), objects.end());
    std::vector<char> seen(objects.size(), 0);
    const auto slot = [&](int code) {
      return static_cast<std::size_t>(std::lower_bound(objects.begin(), objects.end(), code) - objects.begin());
    };
    const auto gs = object_elements(d.target, o);
    for (std::size_t i = 0; i < objects.size(); ++i) {
      if (seen[i]) continue;
      const int ho = objects[i] / ng;
      const Element k = objects[i] % ng;
      int aut = 0;
      for (Element eta = 0; eta < H.order(); ++eta) {
        const int ho2 = source.act(eta, ho);
        const Element k2 = G.mul(k, G.inv(f(eta)));
        const std::size_t j = slot(ho2 * ng + k2);
        seen[j] = 1;
        if (j == i) ++aut;
      }
      const double weight = 1.0 / aut;
      for (int x = 0; x < X.size; ++x) {
        if (!fixes(X, gs, x)) continue;
        const int y = X(G.inv(k), x);
        out.at(o, x) += line(k, d.image[ho]).to_complex() * s.at(ho, y) * weight;
      }
    }
  }
  return out;
}

}  // namespace detail

/// Frobenius-type pushforward along f: H -> G for a 2-cocycle alpha on G and a
/// section over (H, f^* alpha):
///   f_!(s)(g, x) = 1/|H| sum_{kappa, h : kappa f(h) kappa^-1 = g}
///                  exp(2 pi i tau(kappa; f(h))) s(h, kappa^-1 x).
inline EquivariantSection induce_k(const Homomorphism& f, const Cochain2& alpha, const EquivariantSection& s,
                                   const GSet* X = nullptr) {
  if (s.geometry != Geometry::Loop) throw InputError("induce_k needs a loop-geometry section");
  return detail::induce_formula(f, transgress2(alpha), s, X ? *X : point_gset(f.target));
}

/// Same pushforward computed from the homotopy-fiber groupoid and its measure.
inline EquivariantSection induce_k_fiber(const Homomorphism& f, const Cochain2& alpha, const EquivariantSection& s,
                                         const GSet* X = nullptr) {
  if (s.geometry != Geometry::Loop) throw InputError("induce_k needs a loop-geometry section");
  return detail::induce_fiber(f, transgress2(alpha), s, X ? *X : point_gset(f.target));
}

/// Elliptic pushforward: 1/|H| sum over commuting (h1, h2) and kappa with
/// kappa f(h_i) kappa^-1 = g_i of rho((f h1, f h2); kappa) s(h1, h2).
inline EquivariantSection induce_ell(const Homomorphism& f, const Cochain3& alpha, const EquivariantSection& s,
                                     const GSet* X = nullptr) {
  if (s.geometry != Geometry::Torus) throw InputError("induce_ell needs a torus-geometry section");
  return detail::induce_formula(f, transgress3(alpha), s, X ? *X : point_gset(f.target));
}

inline EquivariantSection induce_ell_fiber(const Homomorphism& f, const Cochain3& alpha, const EquivariantSection& s,
                                           const GSet* X = nullptr) {
  if (s.geometry != Geometry::Torus) throw InputError("induce_ell needs a torus-geometry section");
  return detail::induce_fiber(f, transgress3(alpha), s, X ? *X : point_gset(f.target));
}

inline double max_difference(const EquivariantSection& a, const EquivariantSection& b) {
  if (a.values.size() != b.values.size()) throw InputError("sections have different shapes");
  double worst = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
  return worst;
}

// ---------------------------------------------------------------------------
// Fiberwise pushforward

/// Invariant sections along one homotopy fiber of f, over the base component
/// of `base_object`.
///
/// fiber_dim counts components of the fiber groupoid on which the pulled-back
/// line has trivial monodromy. invariant_dim also divides out the
/// automorphisms of the base object, which identifies fiber components lying
/// over the same H-class.
struct FiberDimension {
  int base_object = 0;
  int fiber_dim = 0;
  int invariant_dim = 0;
};

struct FiberwisePushforward {
  Geometry geometry;
  std::vector<FiberDimension> components;  // one per base component, in canonical order
  int total_invariant = 0;
};

namespace detail {

inline FiberwisePushforward pushforward_impl(const Homomorphism& f, const ActionCocycle& line) {
  const LoopGroupoid& source = line.groupoid();
  const Geometry geom = source.kind();
  const auto d = push_data(f, geom);
  const FiniteGroup& G = f.target;
  const FiniteGroup& H = f.source;
  const int ng = G.order();
  FiberwisePushforward r{geom, {}, 0};
  for (const auto& comp : d.target.components()) {
    const int o = comp.front();
    std::vector<Element> base_aut;
    for (Element z = 0; z < ng; ++z)
      if (d.target.act(z, o) == o) base_aut.push_back(z);
    std::vector<int> objects;
    for (std::size_t ho = 0; ho < d.image.size(); ++ho)
      for (Element k = 0; k < ng; ++k)
        if (d.target.act(k, d.image[ho]) == o) objects.push_back(static_cast<int>(ho) * ng + k);
    const auto slot = [&](int code) {
      return static_cast<std::size_t>(std::lower_bound(objects.begin(), objects.end(), code) - objects.begin());
    };
    FiberDimension fd{o, 0, 0};
    // arrows eta in H only, then eta together with base automorphisms z
    for (int pass = 0; pass < 2; ++pass) {
      const std::vector<Element> zs = pass == 0 ? std::vector<Element>{0} : base_aut;
      std::vector<char> seen(objects.size(), 0);
      for (std::size_t i = 0; i < objects.size(); ++i) {
        if (seen[i]) continue;
        const int ho = objects[i] / ng;
        const Element k = objects[i] % ng;
        bool trivial = true;
        for (Element eta = 0; eta < H.order(); ++eta)
          for (Element z : zs) {
            const int ho2 = source.act(eta, ho);
            const Element k2 = G.mul(G.mul(z, k), G.inv(f(eta)));
            const std::size_t j = slot(ho2 * ng + k2);
            seen[j] = 1;
            if (j == i && !line(eta, ho).is_zero()) trivial = false;
          }
        (pass == 0 ? fd.fiber_dim : fd.invariant_dim) += trivial;
      }
    }
    r.total_invariant += fd.invariant_dim;
    r.components.push_back(fd);
  }
  return r;
}

}  // namespace detail

/// f_!^{YM}: beta a 2-cocycle on H.
inline FiberwisePushforward pushforward_fiberwise(const Homomorphism& f, const Cochain2& beta) {
  if (!beta.group().same_as(f.source)) throw InputError("twist must live on the source group");
  return detail::pushforward_impl(f, transgress2(beta));
}

/// f_!^{CS}: beta a 3-cocycle on H.
inline FiberwisePushforward pushforward_fiberwise(const Homomorphism& f, const Cochain3& beta) {
  if (!beta.group().same_as(f.source)) throw InputError("twist must live on the source group");
  return detail::pushforward_impl(f, transgress3(beta));
}

}  // namespace twell

#endif
