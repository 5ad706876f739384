#ifndef TWELL_SYMBOLIC_HPP
#define TWELL_SYMBOLIC_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace twell {

using Rational = boost::rational<std::int64_t>;

namespace sym {

/// Product of symbols raised to rational powers; zero powers are dropped.
using Monomial = std::map<int, Rational>;

/// Finite sum of rational multiples of monomials. Symbols are opaque ids; a
/// symbol may stand for a composite quantity whose partial derivatives are
/// supplied at differentiation time (chain rule).
class Expr {
public:
  Expr() = default;
  explicit Expr(Rational c) {
    if (c != Rational(0)) terms_[{}] = c;
  }
  static Expr symbol(int id, Rational power = 1) {
    Expr e;
    if (power == Rational(0))
      e.terms_[{}] = 1;
    else
      e.terms_[{{id, power}}] = 1;
    return e;
  }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend Expr operator+(Expr a, const Expr& b) {
    for (const auto& [m, c] : b.terms_) a.add(m, c);
    return a;
  }
  friend Expr operator-(Expr a, const Expr& b) {
    for (const auto& [m, c] : b.terms_) a.add(m, -c);
    return a;
  }
  friend Expr operator*(const Expr& a, const Expr& b) {
    Expr r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma;
        for (const auto& [s, p] : mb) {
          const Rational q = (m.count(s) ? m[s] : Rational(0)) + p;
          if (q == Rational(0))
            m.erase(s);
          else
            m[s] = q;
        }
        r.add(m, ca * cb);
      }
    return r;
  }
  friend Expr operator*(Rational k, Expr a) {
    if (k == Rational(0)) return Expr();
    for (auto& [m, c] : a.terms_) c *= k;
    return a;
  }
  friend bool operator==(const Expr&, const Expr&) = default;

  std::string str(const std::map<int, std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      os << (first ? "" : " + ") << c;
      for (const auto& [s, p] : m) {
        const auto it = names.find(s);
        os << "*" << (it != names.end() ? it->second : "s" + std::to_string(s));
        if (p != Rational(1)) os << "^(" << p << ")";
      }
      first = false;
    }
    return os.str();
  }

private:
  void add(const Monomial& m, Rational c) {
    if (c == Rational(0)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (it->second == Rational(0)) terms_.erase(it);
  }

  std::map<Monomial, Rational> terms_;
};

/// Partial derivative with respect to `var`. `chain` gives d(symbol)/d(var)
/// for composite symbols; any other symbol is independent of var.
inline Expr diff(const Expr& e, int var, const std::map<int, Expr>& chain = {}) {
  Expr r;
  for (const auto& [m, c] : e.terms()) {
    for (const auto& [s, p] : m) {
      Expr inner;
      if (s == var)
        inner = Expr(1);
      else if (auto it = chain.find(s); it != chain.end())
        inner = it->second;
      else
        continue;
      Expr rest(c * p);
      for (const auto& [s2, p2] : m) rest = rest * Expr::symbol(s2, s2 == s ? p2 - 1 : p2);
      r = r + rest * inner;
    }
  }
  return r;
}

}  // namespace sym
}  // namespace twell

#endif
