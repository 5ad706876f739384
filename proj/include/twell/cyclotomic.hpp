#ifndef TWELL_CYCLOTOMIC_HPP
#define TWELL_CYCLOTOMIC_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <vector>

#include "twell/phase.hpp"
#include "twell/symbolic.hpp"

namespace twell {

namespace detail {

/// Coefficients (low degree first) of the n-th cyclotomic polynomial.
inline const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n) {
  static std::map<std::int64_t, std::vector<std::int64_t>> cache;
  static std::recursive_mutex guard;
  const std::lock_guard lock(guard);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto& q = cyclotomic_polynomial(d);  // monic
    const auto qd = static_cast<std::ptrdiff_t>(q.size()) - 1;
    std::vector<std::int64_t> quot(p.size() - q.size() + 1, 0);
    for (auto i = static_cast<std::ptrdiff_t>(p.size()) - 1; i >= qd; --i) {
      const std::int64_t lead = p[static_cast<std::size_t>(i)];
      quot[static_cast<std::size_t>(i - qd)] = lead;
      for (std::ptrdiff_t j = 0; j <= qd; ++j) p[static_cast<std::size_t>(i - qd + j)] -= lead * q[static_cast<std::size_t>(j)];
    }
    p = quot;
  }
  return cache.emplace(n, std::move(p)).first->second;
}

}  // namespace detail

/// Exact Q-linear combination of roots of unity, sum c_q exp(2 pi i q).
class CyclotomicSum {
public:
  void add(const Phase& q, Rational c = 1) {
    if (c == Rational(0)) return;
    terms_[q] += c;
  }
  CyclotomicSum& operator+=(const CyclotomicSum& o) {
    for (const auto& [q, c] : o.terms_) add(q, c);
    return *this;
  }
  CyclotomicSum scaled(Rational k) const {
    CyclotomicSum r;
    for (const auto& [q, c] : terms_) r.add(q, c * k);
    return r;
  }

  /// The value as a rational number, if it is one. Reduces the polynomial
  /// sum c_k x^k modulo Phi_N, N the common order of all roots involved.
  std::optional<Rational> rational_value() const {
    std::int64_t N = 1;
    for (const auto& [q, c] : terms_)
      if (c != Rational(0)) N = std::lcm(N, q.den());
    std::vector<Rational> poly(static_cast<std::size_t>(N), Rational(0));
    for (const auto& [q, c] : terms_) poly[static_cast<std::size_t>(q.num() * (N / q.den()))] += c;
    const auto& phi = detail::cyclotomic_polynomial(N);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
      const Rational lead = poly[i];
      if (lead == Rational(0)) continue;
      for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= lead * phi[j];
    }
    for (std::size_t i = 1; i < std::min(deg, poly.size()); ++i)
      if (poly[i] != Rational(0)) return std::nullopt;
    return poly.empty() ? Rational(0) : poly[0];
  }

  std::complex<double> numeric() const {
    std::complex<double> s = 0;
    for (const auto& [q, c] : terms_)
      s += boost::rational_cast<double>(c) * q.to_complex();
    return s;
  }

private:
  std::map<Phase, Rational> terms_;
};

}  // namespace twell

#endif
