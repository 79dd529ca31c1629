#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qcubic {

// Exact rational with 64-bit numerator/denominator, reduced, den > 0.
// Wide enough for every exact constant here (alpha, polytope volume,
// Ehrhart interpolation); overflow throws rather than wrapping.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool operator==(const Rational&) const = default;

  long double value() const {
    return static_cast<long double>(num) / static_cast<long double>(den);
  }

  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }
};

namespace detail {
inline std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error("Rational: 64-bit overflow");
  return static_cast<std::int64_t>(v);
}
}  // namespace detail

namespace detail {
inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a == 0 ? 1 : a;
}
}  // namespace detail

inline Rational operator+(const Rational& x, const Rational& y) {
  const __int128 n = static_cast<__int128>(x.num) * y.den +
                     static_cast<__int128>(y.num) * x.den;
  const __int128 d = static_cast<__int128>(x.den) * y.den;
  const __int128 g = detail::gcd128(n, d);
  return Rational(detail::checked(n / g), detail::checked(d / g));
}

inline Rational operator-(const Rational& x) { return Rational(-x.num, x.den); }
inline Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

inline Rational operator*(const Rational& x, const Rational& y) {
  const __int128 n = static_cast<__int128>(x.num) * y.num;
  const __int128 d = static_cast<__int128>(x.den) * y.den;
  const __int128 g = detail::gcd128(n, d);
  return Rational(detail::checked(n / g), detail::checked(d / g));
}

inline Rational operator/(const Rational& x, const Rational& y) {
  if (y.num == 0) throw std::invalid_argument("Rational: division by zero");
  return x * Rational(y.den, y.num);
}

}  // namespace qcubic
