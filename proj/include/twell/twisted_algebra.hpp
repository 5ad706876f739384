#ifndef TWELL_TWISTED_ALGEBRA_HPP
#define TWELL_TWISTED_ALGEBRA_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "twell/cochain.hpp"
#include "twell/error.hpp"
#include "twell/group.hpp"
#include "twell/transgression.hpp"

namespace twell {

/// C^alpha[G]: basis e_g with e_g e_h = exp(2 pi i alpha(g,h)) e_{gh}.
///
/// The table is not required to be a cocycle; is_associative() is exactly
/// the cocycle condition.
class TwistedGroupAlgebra {
public:
  explicit TwistedGroupAlgebra(Cochain2 alpha) : alpha_(std::move(alpha)) {}

  const FiniteGroup& group() const { return alpha_.group(); }
  const Cochain2& alpha() const { return alpha_; }
  int dimension() const { return group().order(); }

  bool has_unit() const { return alpha_.is_normalized(); }

  /// First (g, h, k) with (e_g e_h) e_k != e_g (e_h e_k).
  std::optional<std::array<Element, 3>> associativity_witness() const {
    const FiniteGroup& G = group();
    for (Element g = 0; g < G.order(); ++g)
      for (Element h = 0; h < G.order(); ++h)
        for (Element k = 0; k < G.order(); ++k)
          if (alpha_(g, h) + alpha_(G.mul(g, h), k) != alpha_(h, k) + alpha_(g, G.mul(h, k)))
            return std::array<Element, 3>{g, h, k};
    return std::nullopt;
  }
  bool is_associative() const { return !associativity_witness(); }

  /// Product of two elements given by coefficient vectors.
  Eigen::VectorXcd multiply(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) const {
    const FiniteGroup& G = group();
    Eigen::VectorXcd r = Eigen::VectorXcd::Zero(G.order());
    for (Element g = 0; g < G.order(); ++g) {
      if (x[g] == 0.0) continue;
      for (Element h = 0; h < G.order(); ++h) r[G.mul(g, h)] += x[g] * y[h] * alpha_(g, h).to_complex();
    }
    return r;
  }

private:
  Cochain2 alpha_;
};

// ---------------------------------------------------------------------------
// Center

/// One basis vector of the center: supported on a conjugacy class, with
/// coefficient exp(2 pi i phases[j]) on members[j].
struct CentralElement {
  Element representative;
  std::vector<Element> members;
  std::vector<Phase> phases;

  std::string label(const FiniteGroup& G) const {
    std::string s = "[" + G.name(representative) + "]:";
    for (std::size_t j = 0; j < members.size(); ++j)
      s += (j ? " " : "") + G.name(members[j]) + "@" + phases[j].str();
    return s;
  }
};

struct CenterResult {
  int dimension = 0;
  std::vector<CentralElement> basis;
  std::optional<int> numeric_dimension;  // SVD cross-check, when run
};

namespace detail {

// nullity of x -> (e_h x - x e_h)_h by SVD
inline int numeric_center_dim(const TwistedGroupAlgebra& A) {
  const FiniteGroup& G = A.group();
  const int n = G.order();
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n) * n, n);
  for (Element h = 0; h < n; ++h)
    for (Element g = 0; g < n; ++g) {
      // e_h e_g - e_g e_h
      M(static_cast<Eigen::Index>(h) * n + G.mul(h, g), g) += A.alpha()(h, g).to_complex();
      M(static_cast<Eigen::Index>(h) * n + G.mul(g, h), g) -= A.alpha()(g, h).to_complex();
    }
  const Eigen::BDCSVD<Eigen::MatrixXcd> svd(M);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    const double s = sv[i];
    if (s >= 1e-6)
      ++rank;
    else if (s >= 1e-9)
      throw ConsistencyError("center rank indeterminate: singular value " + std::to_string(s));
  }
  return n - rank;
}

}  // namespace detail

/// Largest group order for which center_dim runs the SVD cross-check.
inline constexpr int kNumericCenterLimit = 64;

/// Center of C^alpha[G]. Exact: x is central iff x_{hgh^-1} = x_g exp(-2 pi i
/// tau(h; g)), so each class carries at most one central element, present iff
/// the constraints around the class close up. Cross-checked numerically for
/// small groups and against the regular-class count.
inline CenterResult center_dim(const TwistedGroupAlgebra& A, bool numeric_check = true) {
  require_cocycle(A.alpha(), "twist");
  const FiniteGroup& G = A.group();
  CenterResult r;
  std::vector<std::optional<Phase>> pot(G.order());
  for (const auto& cls : conjugacy_classes(G)) {
    const Element g = cls.front();
    pot[g] = Phase();
    std::vector<Element> queue{g};
    bool consistent = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Element x = queue[qi];
      for (Element h = 0; h < G.order(); ++h) {
        const Element y = G.conj(h, x);
        const Phase p = *pot[x] - tau(A.alpha(), h, x);
        if (!pot[y]) {
          pot[y] = p;
          queue.push_back(y);
        } else if (*pot[y] != p) {
          consistent = false;
        }
      }
    }
    if (!consistent) continue;
    CentralElement c{g, cls, {}};
    for (Element m : cls) c.phases.push_back(*pot[m]);
    r.basis.push_back(std::move(c));
  }
  r.dimension = static_cast<int>(r.basis.size());
  if (numeric_check && G.order() <= kNumericCenterLimit) {
    r.numeric_dimension = detail::numeric_center_dim(A);
    if (*r.numeric_dimension != r.dimension)
      throw ConsistencyError("center dimension: exact " + std::to_string(r.dimension) + " vs numeric " +
                             std::to_string(*r.numeric_dimension));
  }
  int regular = 0;
  for (const auto& cls : conjugacy_classes(G)) regular += chi_g(A.alpha(), cls.front()).is_trivial();
  if (regular != r.dimension)
    throw ConsistencyError("center dimension " + std::to_string(r.dimension) + " differs from regular class count " +
                           std::to_string(regular));
  return r;
}

// ---------------------------------------------------------------------------
// Projective representations

/// rho(g) rho(h) = exp(2 pi i alpha(g,h)) rho(gh), rho(e) = 1.
struct ProjectiveRep {
  FiniteGroup group;
  int dimension = 0;
  std::vector<Eigen::MatrixXcd> matrices;

  /// Largest entrywise deviation from the defining relations.
  double defect(const Cochain2& alpha) const {
    const FiniteGroup& G = group;
    double worst = (matrices[0] - Eigen::MatrixXcd::Identity(dimension, dimension)).cwiseAbs().maxCoeff();
    for (Element g = 0; g < G.order(); ++g)
      for (Element h = 0; h < G.order(); ++h) {
        const Eigen::MatrixXcd d = matrices[g] * matrices[h] - alpha(g, h).to_complex() * matrices[G.mul(g, h)];
        worst = std::max(worst, d.cwiseAbs().maxCoeff());
      }
    return worst;
  }
  bool is_projective(const Cochain2& alpha, double tol = 1e-9) const { return defect(alpha) <= tol; }

  std::vector<std::complex<double>> character() const {
    std::vector<std::complex<double>> c;
    for (const auto& m : matrices) c.push_back(m.trace());
    return c;
  }
};

/// Left multiplication on C^alpha[G]: L_g has alpha(g,h) at (gh, h).
inline ProjectiveRep regular_rep(const TwistedGroupAlgebra& A) {
  const FiniteGroup& G = A.group();
  const int n = G.order();
  ProjectiveRep r{G, n, {}};
  for (Element g = 0; g < n; ++g) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (Element h = 0; h < n; ++h) m(G.mul(g, h), h) = A.alpha()(g, h).to_complex();
    r.matrices.push_back(std::move(m));
  }
  return r;
}

/// Tr rho(hgh^-1) = exp(2 pi i tau(h; g)) Tr rho(g) for all g, h.
inline bool character_transform_check(const ProjectiveRep& rep, const Cochain2& alpha, double tol = 1e-9) {
  const FiniteGroup& G = alpha.group();
  const auto chi = rep.character();
  for (Element g = 0; g < G.order(); ++g)
    for (Element h = 0; h < G.order(); ++h)
      if (std::abs(chi[G.conj(h, g)] - tau(alpha, h, g).to_complex() * chi[g]) > tol) return false;
  return true;
}

}  // namespace twell

#endif
