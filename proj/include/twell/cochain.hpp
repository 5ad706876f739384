#ifndef TWELL_COCHAIN_HPP
#define TWELL_COCHAIN_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "twell/error.hpp"
#include "twell/group.hpp"
#include "twell/parallel.hpp"
#include "twell/phase.hpp"

namespace twell {

/// A U(1)-valued n-cochain on BG with trivial coefficients, phases written
/// additively. Tables are indexed lexicographically by the argument tuple.
template <int N>
class Cochain {
  static_assert(N >= 1 && N <= 4);

public:
  using Args = std::array<Element, N>;

  Cochain() : Cochain(FiniteGroup()) {}
  explicit Cochain(FiniteGroup G)
      : group_(std::move(G)), table_(tuple_count(group_.order()), Phase()) {}

  const FiniteGroup& group() const { return group_; }
  std::size_t size() const { return table_.size(); }

  const Phase& operator[](const Args& a) const { return table_[offset(a)]; }
  Phase& operator[](const Args& a) { return table_[offset(a)]; }
  const Phase& at_offset(std::size_t i) const { return table_[i]; }
  Phase& at_offset(std::size_t i) { return table_[i]; }

  template <typename... E>
  const Phase& operator()(E... e) const {
    static_assert(sizeof...(E) == N);
    return (*this)[Args{static_cast<Element>(e)...}];
  }
  template <typename... E>
  Phase& operator()(E... e) {
    static_assert(sizeof...(E) == N);
    return (*this)[Args{static_cast<Element>(e)...}];
  }

  std::size_t offset(const Args& a) const {
    std::size_t o = 0;
    for (Element x : a) o = o * static_cast<std::size_t>(group_.order()) + static_cast<std::size_t>(x);
    return o;
  }
  Args args(std::size_t offset) const {
    Args a{};
    const auto n = static_cast<std::size_t>(group_.order());
    for (int i = N - 1; i >= 0; --i) {
      a[i] = static_cast<Element>(offset % n);
      offset /= n;
    }
    return a;
  }

  /// Vanishes whenever some argument is the identity.
  bool is_normalized() const {
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_[i].is_zero()) continue;
      const auto a = args(i);
      for (Element x : a)
        if (x == 0) return false;
    }
    return true;
  }

  bool is_zero() const {
    for (const auto& p : table_)
      if (!p.is_zero()) return false;
    return true;
  }

  /// lcm of all denominators in the table.
  std::int64_t common_denominator() const {
    std::int64_t d = 1;
    for (const auto& p : table_) d = std::lcm(d, p.den());
    return d;
  }

  friend Cochain operator+(Cochain a, const Cochain& b) {
    for (std::size_t i = 0; i < a.table_.size(); ++i) a.table_[i] += b.table_[i];
    return a;
  }
  friend Cochain operator-(Cochain a, const Cochain& b) {
    for (std::size_t i = 0; i < a.table_.size(); ++i) a.table_[i] -= b.table_[i];
    return a;
  }
  Cochain operator-() const {
    Cochain r(group_);
    for (std::size_t i = 0; i < table_.size(); ++i) r.table_[i] = -table_[i];
    return r;
  }
  friend bool operator==(const Cochain& a, const Cochain& b) { return a.table_ == b.table_; }

  static std::size_t tuple_count(int n) {
    std::size_t c = 1;
    for (int i = 0; i < N; ++i) c *= static_cast<std::size_t>(n);
    return c;
  }

private:
  FiniteGroup group_;
  std::vector<Phase> table_;
};

using Cochain1 = Cochain<1>;
using Cochain2 = Cochain<2>;
using Cochain3 = Cochain<3>;

namespace detail {

// Integer image of a cochain over a common denominator D: value[i] / D.
template <int N>
struct ScaledTable {
  std::int64_t den = 1;
  std::vector<std::int64_t> value;

  explicit ScaledTable(const Cochain<N>& c) : den(c.common_denominator()), value(c.size()) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Phase& p = c.at_offset(i);
      value[i] = p.num() * (den / p.den());
    }
  }
};

// (dc)(g_1..g_{N+1}) over the scaled table, not reduced.
template <int N>
std::int64_t coboundary_at(const FiniteGroup& G, const ScaledTable<N>& t,
                           const std::array<Element, N + 1>& g) {
  const auto n = static_cast<std::size_t>(G.order());
  const auto off = [&](auto&& pick) {
    std::size_t o = 0;
    for (int i = 0; i < N; ++i) o = o * n + static_cast<std::size_t>(pick(i));
    return o;
  };
  std::int64_t s = t.value[off([&](int i) { return g[i + 1]; })];
  for (int j = 1; j <= N; ++j) {
    // merge g_j and g_{j+1} (1-based)
    const std::int64_t v = t.value[off([&](int i) {
      if (i < j - 1) return g[i];
      if (i == j - 1) return G.mul(g[j - 1], g[j]);
      return g[i + 1];
    })];
    s += (j % 2 ? -v : v);
  }
  const std::int64_t last = t.value[off([&](int i) { return g[i]; })];
  s += ((N + 1) % 2 ? -last : last);
  return s;
}

}  // namespace detail

/// Bar-resolution coboundary with trivial coefficients:
/// (dc)(g_1..g_{n+1}) = c(g_2..g_{n+1}) + sum_i (-1)^i c(..,g_i g_{i+1},..)
///                      + (-1)^{n+1} c(g_1..g_n).
template <int N>
Cochain<N + 1> coboundary(const Cochain<N>& c) {
  const FiniteGroup& G = c.group();
  const detail::ScaledTable<N> t(c);
  Cochain<N + 1> out(G);
  parallel_chunks(out.size(), default_chunks(out.size()), [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i)
      out.at_offset(i) = Phase(detail::coboundary_at<N>(G, t, out.args(i)), t.den);
  });
  return out;
}

/// Outcome of a cocycle test; `witness` is the lexicographically first tuple
/// where the coboundary is nonzero.
template <int N>
struct CocycleCheck {
  bool ok = true;
  std::optional<std::array<Element, N + 1>> witness;
  Phase defect;

  explicit operator bool() const { return ok; }
};

template <int N>
CocycleCheck<N> is_cocycle(const Cochain<N>& c) {
  const FiniteGroup& G = c.group();
  const detail::ScaledTable<N> t(c);
  const std::size_t total = Cochain<N + 1>::tuple_count(G.order());
  const auto decode = [&](std::size_t o) {
    std::array<Element, N + 1> a{};
    const auto n = static_cast<std::size_t>(G.order());
    for (int i = N; i >= 0; --i) {
      a[i] = static_cast<Element>(o % n);
      o /= n;
    }
    return a;
  };
  const std::size_t chunks = default_chunks(total);
  std::vector<std::size_t> first_bad(chunks, total);
  parallel_chunks(total, chunks, [&](std::size_t ci, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      if (detail::coboundary_at<N>(G, t, decode(i)) % t.den != 0) {
        first_bad[ci] = i;
        return;
      }
    }
  });
  CocycleCheck<N> r;
  for (std::size_t i : first_bad)
    if (i < total) {
      r.ok = false;
      r.witness = decode(i);
      r.defect = Phase(detail::coboundary_at<N>(G, t, *r.witness), t.den);
      break;
    }
  return r;
}

/// Throws InputError naming the witness tuple when c is not a cocycle.
template <int N>
void require_cocycle(const Cochain<N>& c, const std::string& what = "twist") {
  if (!c.is_normalized()) throw InputError(what + " is not normalized");
  const auto r = is_cocycle(c);
  if (r.ok) return;
  std::string s = what + " is not a cocycle: coboundary is " + r.defect.str() + " at (";
  for (int i = 0; i <= N; ++i) s += (i ? "," : "") + std::to_string((*r.witness)[i]);
  throw InputError(s + ")");
}

// ---------------------------------------------------------------------------
// Builders

/// The standard generator of H^3(Z/n; U(1)) at level k:
/// alpha(a,b,c) = k a floor((b+c)/n) / n, elements as residues.
inline Cochain3 cyclic_3cocycle(int n, int k) {
  if (n < 1) throw InputError("cyclic_3cocycle needs n >= 1");
  if (k < 0 || k >= n) throw InputError("cyclic_3cocycle level k must satisfy 0 <= k < n");
  Cochain3 a(cyclic_group(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        a[{x, y, z}] = Phase(static_cast<std::int64_t>(k) * x * ((y + z) / n), n);
  return a;
}

/// The nondegenerate 2-cocycle on Z/2 x Z/2: alpha(a, b) = a_2 b_1 / 2, where
/// element index 2*a_1 + a_2 is (a_1, a_2).
inline Cochain2 klein_2cocycle() {
  Cochain2 a(direct_product(cyclic_group(2), cyclic_group(2)));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) a[{x, y}] = Phase((x % 2) * (y / 2), 2);
  return a;
}

/// f^* c for f: H -> G.
template <int N>
Cochain<N> pullback(const Homomorphism& f, const Cochain<N>& c) {
  Cochain<N> out(f.source);
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto a = out.args(i);
    for (auto& x : a) x = f(x);
    out.at_offset(i) = c[a];
  }
  return out;
}

/// A uniformly random normalized cochain with values in (1/den)Z/Z.
template <int N, typename Rng>
Cochain<N> random_cochain(const FiniteGroup& G, Rng& rng, std::int64_t den) {
  Cochain<N> c(G);
  std::uniform_int_distribution<std::int64_t> dist(0, den - 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto a = c.args(i);
    bool has_identity = false;
    for (Element x : a) has_identity |= (x == 0);
    if (!has_identity) c.at_offset(i) = Phase(dist(rng), den);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Cohomologous test

namespace detail {

struct ModSolver {
  static std::int64_t mod(__int128 x, std::int64_t m) {
    auto r = static_cast<std::int64_t>(x % m);
    return r < 0 ? r + m : r;
  }

  // returns g = gcd(a,b) >= 0 and u, v with u a + v b = g; when a > 0
  // divides b this is always (u, v) = (1, 0), which elimination relies on
  static std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& u, std::int64_t& v) {
    if (a > 0 && b % a == 0) {
      u = 1;
      v = 0;
      return a;
    }
    std::int64_t u0 = 1, v0 = 0, u1 = 0, v1 = 1;
    while (b != 0) {
      const std::int64_t q = a / b;
      std::int64_t t = a - q * b;
      a = b;
      b = t;
      t = u0 - q * u1;
      u0 = u1;
      u1 = t;
      t = v0 - q * v1;
      v0 = v1;
      v1 = t;
    }
    u = u0;
    v = v0;
    return a;
  }

  // Solves A x = b over Z/m. A is rows x cols, row-major; entries reduced.
  // Diagonalizes with integer-unimodular row and column operations; those
  // stay invertible mod m, so solvability is read off the diagonal.
  static std::optional<std::vector<std::int64_t>> solve(std::vector<std::int64_t> A, std::size_t rows,
                                                        std::size_t cols, std::vector<std::int64_t> b,
                                                        std::int64_t m) {
    const auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return A[r * cols + c]; };
    // V starts as identity (cols x cols), records column operations.
    std::vector<std::int64_t> V(cols * cols, 0);
    for (std::size_t i = 0; i < cols; ++i) V[i * cols + i] = 1;
    const auto row_op = [&](std::size_t r1, std::size_t r2, std::int64_t u, std::int64_t v,
                            std::int64_t p, std::int64_t q, std::size_t from) {
      // [r1; r2] <- [[u v]; [p q]] [r1; r2]
      for (std::size_t c = from; c < cols; ++c) {
        const std::int64_t x = at(r1, c), y = at(r2, c);
        at(r1, c) = mod(static_cast<__int128>(u) * x + static_cast<__int128>(v) * y, m);
        at(r2, c) = mod(static_cast<__int128>(p) * x + static_cast<__int128>(q) * y, m);
      }
      const std::int64_t x = b[r1], y = b[r2];
      b[r1] = mod(static_cast<__int128>(u) * x + static_cast<__int128>(v) * y, m);
      b[r2] = mod(static_cast<__int128>(p) * x + static_cast<__int128>(q) * y, m);
    };
    const auto col_op = [&](std::size_t c1, std::size_t c2, std::int64_t u, std::int64_t v,
                            std::int64_t p, std::int64_t q, std::size_t from) {
      // [c1 c2] <- [c1 c2] [[u p]; [v q]]
      for (std::size_t r = from; r < rows; ++r) {
        const std::int64_t x = at(r, c1), y = at(r, c2);
        at(r, c1) = mod(static_cast<__int128>(u) * x + static_cast<__int128>(v) * y, m);
        at(r, c2) = mod(static_cast<__int128>(p) * x + static_cast<__int128>(q) * y, m);
      }
      for (std::size_t r = 0; r < cols; ++r) {
        const std::int64_t x = V[r * cols + c1], y = V[r * cols + c2];
        V[r * cols + c1] = mod(static_cast<__int128>(u) * x + static_cast<__int128>(v) * y, m);
        V[r * cols + c2] = mod(static_cast<__int128>(p) * x + static_cast<__int128>(q) * y, m);
      }
    };

    std::size_t t = 0;
    for (; t < rows && t < cols; ++t) {
      // pivot: smallest nonzero entry in the trailing block
      std::size_t pr = rows, pc = cols;
      std::int64_t best = 0;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c) {
          const std::int64_t x = at(r, c);
          if (x != 0 && (best == 0 || x < best)) {
            best = x;
            pr = r;
            pc = c;
            if (best == 1) break;
          }
        }
      if (best == 0) break;
      if (pr != t) row_op(t, pr, 0, 1, 1, 0, 0);
      if (pc != t) col_op(t, pc, 0, 1, 1, 0, 0);
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (std::size_t r = t + 1; r < rows; ++r) {
          const std::int64_t a = at(t, t), y = at(r, t);
          if (y == 0) continue;
          std::int64_t u, v;
          const std::int64_t g = ext_gcd(a, y, u, v);
          row_op(t, r, u, v, -(y / g), a / g, t);
        }
        for (std::size_t c = t + 1; c < cols; ++c) {
          const std::int64_t a = at(t, t), y = at(t, c);
          if (y == 0) continue;
          std::int64_t u, v;
          const std::int64_t g = ext_gcd(a, y, u, v);
          col_op(t, c, u, v, -(y / g), a / g, t);
          dirty = true;
        }
        if (dirty) {
          dirty = false;
          for (std::size_t r = t + 1; r < rows; ++r)
            if (at(r, t) != 0) dirty = true;
        }
      }
    }
    const std::size_t rank = t;
    for (std::size_t r = rank; r < rows; ++r)
      if (b[r] != 0) return std::nullopt;
    std::vector<std::int64_t> y(cols, 0);
    for (std::size_t i = 0; i < rank; ++i) {
      const std::int64_t d = at(i, i);
      std::int64_t u, v;
      const std::int64_t g = ext_gcd(d, m, u, v);
      if (b[i] % g != 0) return std::nullopt;
      const std::int64_t mg = m / g;
      y[i] = mod(static_cast<__int128>(b[i] / g) * mod(u, mg), mg);
    }
    std::vector<std::int64_t> x(cols, 0);
    for (std::size_t r = 0; r < cols; ++r) {
      __int128 s = 0;
      for (std::size_t c = 0; c < cols; ++c) s += static_cast<__int128>(V[r * cols + c]) * y[c];
      x[r] = mod(s, m);
    }
    return x;
  }
};

}  // namespace detail

/// Finds a normalized beta with d(beta) = c - c2, or nothing if the two
/// cocycles are not cohomologous.
///
/// Works exactly over Z/M with M = lcm(denominators of c - c2) * |G|: if any
/// solution in Q/Z exists, one with values in (1/M)Z/Z does, because |G|
/// annihilates the cohomology of G.
template <int N>
std::optional<Cochain<N - 1>> cohomologous(const Cochain<N>& c, const Cochain<N>& c2) {
  static_assert(N >= 2);
  require_cocycle(c, "first cochain");
  require_cocycle(c2, "second cochain");
  const FiniteGroup& G = c.group();
  if (G.order() != c2.group().order()) throw InputError("cochains live on different groups");
  const Cochain<N> delta = c - c2;
  Cochain<N - 1> beta(G);
  if (delta.is_zero()) return beta;
  const int n = G.order();
  const std::int64_t M = delta.common_denominator() * n;

  // unknowns: beta on tuples of non-identity elements
  std::vector<std::size_t> var_of(beta.size(), static_cast<std::size_t>(-1));
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const auto a = beta.args(i);
    bool nz = true;
    for (Element x : a) nz &= (x != 0);
    if (nz) {
      var_of[i] = vars.size();
      vars.push_back(i);
    }
  }
  std::vector<std::size_t> eqs;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const auto a = delta.args(i);
    bool nz = true;
    for (Element x : a) nz &= (x != 0);
    if (nz) eqs.push_back(i);
  }
  const std::size_t rows = eqs.size(), cols = vars.size();
  std::vector<std::int64_t> A(rows * cols, 0), b(rows, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto g = delta.args(eqs[r]);
    const auto add = [&](std::array<Element, N - 1> a, int sign) {
      const std::size_t v = var_of[beta.offset(a)];
      if (v == static_cast<std::size_t>(-1)) return;
      A[r * cols + v] = detail::ModSolver::mod(A[r * cols + v] + sign, M);
    };
    std::array<Element, N - 1> a{};
    for (int i = 0; i < N - 1; ++i) a[i] = g[i + 1];
    add(a, 1);
    for (int j = 1; j <= N - 1; ++j) {
      for (int i = 0; i < N - 1; ++i)
        a[i] = i < j - 1 ? g[i] : (i == j - 1 ? G.mul(g[j - 1], g[j]) : g[i + 1]);
      add(a, j % 2 ? -1 : 1);
    }
    for (int i = 0; i < N - 1; ++i) a[i] = g[i];
    add(a, N % 2 ? -1 : 1);
    const Phase& p = delta.at_offset(eqs[r]);
    b[r] = p.num() * (M / p.den());
  }
  const auto x = detail::ModSolver::solve(std::move(A), rows, cols, std::move(b), M);
  if (!x) return std::nullopt;
  for (std::size_t v = 0; v < cols; ++v) beta.at_offset(vars[v]) = Phase((*x)[v], M);
  if (!(coboundary(beta) == delta))
    throw ConsistencyError("cohomologous: solver returned beta with d(beta) != c - c'");
  return beta;
}

}  // namespace twell

#endif
