#ifndef TWELL_PHASE_HPP
#define TWELL_PHASE_HPP

#include <cmath>
#include <complex>
#include <compare>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <ostream>
#include <string>

#include "twell/error.hpp"

namespace twell {

/// An element of Q/Z, standing for the unit complex number exp(2 pi i q).
///
/// U(1) is written additively throughout the library: multiplying phases is
/// addition here, inverting is negation. The representation is canonical,
/// 0 <= num < den with gcd(num, den) = 1, so equality is structural.
class Phase {
public:
  constexpr Phase() = default;

  Phase(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InputError("phase with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    num %= den;
    if (num < 0) num += den;
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  static Phase zero() { return Phase(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Phase operator-() const { return Phase(-num_, den_); }

  friend Phase operator+(const Phase& a, const Phase& b) {
    if (a.den_ == b.den_) return Phase(a.num_ + b.num_, a.den_);
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const std::int64_t l = a.den_ / g * b.den_;
    return Phase(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
  }
  friend Phase operator-(const Phase& a, const Phase& b) { return a + (-b); }
  Phase& operator+=(const Phase& o) { return *this = *this + o; }
  Phase& operator-=(const Phase& o) { return *this = *this - o; }

  /// Integer multiple, i.e. the k-th power of the unit complex number.
  friend Phase operator*(std::int64_t k, const Phase& p) {
    const std::int64_t r = (k % p.den_) * p.num_;
    return Phase(r, p.den_);
  }

  friend bool operator==(const Phase&, const Phase&) = default;
  friend auto operator<=>(const Phase& a, const Phase& b) {
    // compare num/den as rationals in [0,1)
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

  double as_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::complex<double> to_complex() const {
    if (num_ == 0) return {1.0, 0.0};
    const double t = 2.0 * std::numbers::pi * as_double();
    return {std::cos(t), std::sin(t)};
  }

  std::string str() const {
    if (num_ == 0) return "0";
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Phase& p) { return os << p.str(); }

}  // namespace twell

#endif
