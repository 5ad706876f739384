#ifndef TWELL_TRANSGRESSION_HPP
#define TWELL_TRANSGRESSION_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twell/cochain.hpp"
#include "twell/group.hpp"
#include "twell/inertia.hpp"
#include "twell/parallel.hpp"
#include "twell/phase.hpp"

namespace twell {

/// A U(1)-valued 1-cocycle on an inertia groupoid: phase(h, x) is the scalar by
/// which the arrow h: x -> h.x acts on the transgressed line.
class ActionCocycle {
public:
  explicit ActionCocycle(LoopGroupoid groupoid)
      : groupoid_(std::move(groupoid)),
        table_(static_cast<std::size_t>(groupoid_.object_count()) * groupoid_.group().order()) {}

  const LoopGroupoid& groupoid() const { return groupoid_; }
  const Phase& operator()(Element h, int object) const { return table_[slot(h, object)]; }
  Phase& operator()(Element h, int object) { return table_[slot(h, object)]; }

  /// First (h', h, x) violating phase(h', h.x) + phase(h, x) = phase(h'h, x).
  struct Violation {
    Element outer, inner;
    int object;
  };
  std::optional<Violation> composition_violation() const {
    const FiniteGroup& G = groupoid_.group();
    const int n = G.order();
    const int objects = groupoid_.object_count();
    const std::size_t chunks = default_chunks(static_cast<std::size_t>(objects));
    std::vector<std::optional<Violation>> found(chunks);
    parallel_chunks(static_cast<std::size_t>(objects), chunks,
                    [&](std::size_t ci, std::size_t b, std::size_t e) {
                      for (auto x = static_cast<int>(b); x < static_cast<int>(e); ++x)
                        for (Element h = 0; h < n; ++h) {
                          const int hx = groupoid_.act(h, x);
                          for (Element h2 = 0; h2 < n; ++h2)
                            if ((*this)(h2, hx) + (*this)(h, x) != (*this)(G.mul(h2, h), x)) {
                              found[ci] = Violation{h2, h, x};
                              return;
                            }
                        }
                    });
    for (auto& v : found)
      if (v) return v;
    return std::nullopt;
  }
  bool satisfies_composition() const { return !composition_violation(); }

private:
  std::size_t slot(Element h, int object) const {
    return static_cast<std::size_t>(object) * groupoid_.group().order() + static_cast<std::size_t>(h);
  }

  LoopGroupoid groupoid_;
  std::vector<Phase> table_;
};

/// A U(1)-character of a stabilizer subgroup, phase[i] on subgroup[i].
struct StabilizerCharacter {
  Subgroup subgroup;
  std::vector<Phase> phase;

  const Phase& at(Element h) const {
    const auto it = std::lower_bound(subgroup.begin(), subgroup.end(), h);
    if (it == subgroup.end() || *it != h)
      throw InputError("element " + std::to_string(h) + " is not in the stabilizer");
    return phase[static_cast<std::size_t>(it - subgroup.begin())];
  }

  bool is_trivial() const {
    return std::all_of(phase.begin(), phase.end(), [](const Phase& p) { return p.is_zero(); });
  }

  bool is_homomorphism(const FiniteGroup& G) const {
    for (std::size_t i = 0; i < subgroup.size(); ++i)
      for (std::size_t j = 0; j < subgroup.size(); ++j)
        if (at(G.mul(subgroup[i], subgroup[j])) != phase[i] + phase[j]) return false;
    return true;
  }
};

// ---------------------------------------------------------------------------
// Loops: 2-cocycles

/// tau(h; g) = alpha(h g h^{-1}, h) - alpha(h, g); unchecked.
inline Phase tau(const Cochain2& alpha, Element h, Element g) {
  const FiniteGroup& G = alpha.group();
  return alpha(G.conj(h, g), h) - alpha(h, g);
}

/// Transgression of a 2-cocycle to an action cocycle on G//G.
inline ActionCocycle transgress2(const Cochain2& alpha) {
  require_cocycle(alpha);
  const FiniteGroup& G = alpha.group();
  ActionCocycle t(LoopGroupoid(G, Geometry::Loop));
  for (Element g = 0; g < G.order(); ++g)
    for (Element h = 0; h < G.order(); ++h) t(h, g) = tau(alpha, h, g);
  return t;
}

/// chi_g(h) = alpha(h, g) - alpha(g, h) on Z(g).
inline StabilizerCharacter chi_g(const Cochain2& alpha, Element g) {
  const FiniteGroup& G = alpha.group();
  StabilizerCharacter c{centralizer(G, g), {}};
  for (Element h : c.subgroup) c.phase.push_back(alpha(h, g) - alpha(g, h));
  return c;
}

// ---------------------------------------------------------------------------
// Tori: 3-cocycles

/// rho_{g1,g2}(h): the double-transgression phase of the arrow h out of
/// (g1, g2); unchecked.
inline Phase rho(const Cochain3& a, CommutingPair p, Element h) {
  const FiniteGroup& G = a.group();
  const Element g1 = p.g1, g2 = p.g2;
  const Element c1 = G.conj(h, g1), c2 = G.conj(h, g2);
  return a(h, g2, g1) + a(c1, h, g2) + a(c2, c1, h) - a(h, g1, g2) - a(c2, h, g1) - a(c1, c2, h);
}

/// Double transgression of a 3-cocycle to an action cocycle on C(G)//G.
inline ActionCocycle transgress3(const Cochain3& alpha) {
  require_cocycle(alpha);
  const FiniteGroup& G = alpha.group();
  ActionCocycle t(LoopGroupoid(G, Geometry::Torus));
  const auto& pairs = t.groupoid().pairs().pairs();
  for (std::size_t x = 0; x < pairs.size(); ++x)
    for (Element h = 0; h < G.order(); ++h) t(h, static_cast<int>(x)) = rho(alpha, pairs[x], h);
  return t;
}

/// chi_{g1,g2}(h) = a(h,g1,g2) + a(g2,h,g1) + a(g1,g2,h)
///                - a(g1,h,g2) - a(h,g2,g1) - a(g2,g1,h)   on Z(g1, g2).
inline StabilizerCharacter chi_pair(const Cochain3& a, CommutingPair p) {
  const FiniteGroup& G = a.group();
  if (!G.commute(p.g1, p.g2)) throw InputError("chi_pair needs a commuting pair");
  StabilizerCharacter c{centralizer_pair(G, p), {}};
  const Element g1 = p.g1, g2 = p.g2;
  for (Element h : c.subgroup)
    c.phase.push_back(a(h, g1, g2) + a(g2, h, g1) + a(g1, g2, h) - a(g1, h, g2) - a(h, g2, g1) -
                      a(g2, g1, h));
  return c;
}

/// Relations between an action cocycle restricted to stabilizers and the
/// stabilizer characters. The sign relation depends on conventions
/// the formulas alone do not pin down, so both are reported; only the
/// triviality equivalence is relied upon.
struct ConventionDiagnostics {
  bool triviality_agrees = true;     // restriction trivial <=> character trivial, per object
  bool restriction_is_inverse = true;  // restriction == -character pointwise
  bool restriction_is_equal = true;    // restriction == character pointwise
};

inline ConventionDiagnostics loop_conventions(const Cochain2& alpha) {
  const FiniteGroup& G = alpha.group();
  ConventionDiagnostics d;
  for (Element g = 0; g < G.order(); ++g) {
    const auto chi = chi_g(alpha, g);
    bool restr_trivial = true;
    for (std::size_t i = 0; i < chi.subgroup.size(); ++i) {
      const Phase t = tau(alpha, chi.subgroup[i], g);
      restr_trivial &= t.is_zero();
      d.restriction_is_inverse &= (t == -chi.phase[i]);
      d.restriction_is_equal &= (t == chi.phase[i]);
    }
    d.triviality_agrees &= (restr_trivial == chi.is_trivial());
  }
  return d;
}

inline ConventionDiagnostics torus_conventions(const Cochain3& alpha) {
  const FiniteGroup& G = alpha.group();
  ConventionDiagnostics d;
  for (const auto& p : commuting_pairs(G)) {
    const auto chi = chi_pair(alpha, p);
    bool restr_trivial = true;
    for (std::size_t i = 0; i < chi.subgroup.size(); ++i) {
      const Phase r = rho(alpha, p, chi.subgroup[i]);
      restr_trivial &= r.is_zero();
      d.restriction_is_inverse &= (r == -chi.phase[i]);
      d.restriction_is_equal &= (r == chi.phase[i]);
    }
    d.triviality_agrees &= (restr_trivial == chi.is_trivial());
  }
  return d;
}

}  // namespace twell

#endif
