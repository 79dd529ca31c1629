#pragma once

#include <cassert>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcubic/field.hpp"

namespace qcubic {

using int128 = __int128;
using uint128 = unsigned __int128;

// Element a + b*omega of O in coordinates over the integral basis {1, omega}.
struct QuadInt {
  std::int64_t a = 0;
  std::int64_t b = 0;
  bool operator==(const QuadInt&) const = default;
};

inline constexpr QuadInt kOne{1, 0};

inline bool is_zero(const QuadInt& x) { return x.a == 0 && x.b == 0; }
inline QuadInt neg(const QuadInt& x) { return {-x.a, -x.b}; }
inline QuadInt add(const QuadInt& x, const QuadInt& y) {
  return {x.a + y.a, x.b + y.b};
}
inline QuadInt sub(const QuadInt& x, const QuadInt& y) {
  return {x.a - y.a, x.b - y.b};
}

// (a1 + b1 w)(a2 + b2 w) with w^2 = l*w + c.
inline std::pair<int128, int128> mul_wide(const Field& F, const QuadInt& x,
                                          const QuadInt& y) {
  const int128 bb = static_cast<int128>(x.b) * y.b;
  const int128 ra = static_cast<int128>(x.a) * y.a + F.omega_const() * bb;
  const int128 rb = static_cast<int128>(x.a) * y.b +
                    static_cast<int128>(x.b) * y.a + F.omega_lin() * bb;
  return {ra, rb};
}

inline QuadInt mul(const Field& F, const QuadInt& x, const QuadInt& y) {
  const auto [ra, rb] = mul_wide(F, x, y);
  assert(ra >= INT64_MIN && ra <= INT64_MAX && rb >= INT64_MIN && rb <= INT64_MAX);
  return {static_cast<std::int64_t>(ra), static_cast<std::int64_t>(rb)};
}

inline QuadInt mul_omega(const Field& F, const QuadInt& x) {
  return mul(F, x, QuadInt{0, 1});
}

// |sigma(x)|^2, a nonnegative rational integer:
//   a^2 + |n| b^2                for omega = sqrt(n),
//   a^2 + a b + b^2 (1 - n)/4    for omega = (1 + sqrt(n))/2.
inline uint128 norm_wide(const Field& F, const QuadInt& x) {
  int128 v;
  if (F.omega_kind == OmegaKind::SqrtN) {
    v = static_cast<int128>(x.a) * x.a +
        static_cast<int128>(-F.n) * (static_cast<int128>(x.b) * x.b);
  } else {
    v = static_cast<int128>(x.a) * x.a + static_cast<int128>(x.a) * x.b +
        ((1 - static_cast<int128>(F.n)) / 4) * (static_cast<int128>(x.b) * x.b);
  }
  assert(v >= 0);
  return static_cast<uint128>(v);
}

inline std::uint64_t norm(const Field& F, const QuadInt& x) {
  const uint128 v = norm_wide(F, x);
  assert(v <= UINT64_MAX);
  return static_cast<std::uint64_t>(v);
}

inline QuadInt conj(const Field& F, const QuadInt& x) {
  // conj(omega) = -omega resp. 1 - omega
  if (F.omega_kind == OmegaKind::SqrtN) return {x.a, -x.b};
  return {x.a + x.b, -x.b};
}

inline bool is_unit(const Field& F, const QuadInt& x) {
  return norm_wide(F, x) == 1;
}

// The canonical associate of x is the unique one of its w associates whose
// complex argument lies in the sector [0, 2*pi/w); decided by exact sign
// tests (Im sign = sign of b; the w = 4, 6 sectors reduce to a > 0, b >= 0).
inline bool is_canonical(const Field& F, const QuadInt& x) {
  if (is_zero(x)) return false;
  if (F.w == 2) return x.b > 0 || (x.b == 0 && x.a > 0);
  return x.a > 0 && x.b >= 0;
}

// The w roots of unity, starting at 1, in rotation order.
std::vector<QuadInt> units(const Field& F);

// Returns (canonical, u) with canonical = u * x. Throws on x = 0.
std::pair<QuadInt, QuadInt> canonical_associate(const Field& F, const QuadInt& x);

// x / y when y divides x exactly in O; nullopt otherwise. Throws on y = 0.
inline std::optional<QuadInt> div_exact(const Field& F, const QuadInt& x,
                                        const QuadInt& y) {
  if (is_zero(y)) throw std::invalid_argument("div_exact: division by zero");
  const auto [qa, qb] = mul_wide(F, x, conj(F, y));
  const int128 n = static_cast<int128>(norm_wide(F, y));
  if (qa % n != 0 || qb % n != 0) return std::nullopt;
  const int128 ra = qa / n, rb = qb / n;
  assert(ra >= INT64_MIN && ra <= INT64_MAX && rb >= INT64_MIN && rb <= INT64_MAX);
  return QuadInt{static_cast<std::int64_t>(ra), static_cast<std::int64_t>(rb)};
}

// Index [O : (x, y)] of the ideal generated by x and y, i.e. the norm of
// gcd(x, y). Throws if both are zero.
std::uint64_t ideal_index(const Field& F, const QuadInt& x, const QuadInt& y);

inline bool coprime(const Field& F, const QuadInt& x, const QuadInt& y) {
  if (is_zero(x)) return is_unit(F, y);
  if (is_zero(y)) return is_unit(F, x);
  if (std::gcd(norm(F, x), norm(F, y)) == 1) return true;
  return ideal_index(F, x, y) == 1;
}

// Canonical generator of the ideal (x, y). Works uniformly in all nine
// rings (four of them are not Euclidean): build the rank-2 lattice spanned
// by {x, x*omega, y, y*omega}, triangularize, and Gauss-reduce under the
// norm form; the shortest vector generates since h = 1.
QuadInt gcd(const Field& F, const QuadInt& x, const QuadInt& y);

// Canonical gcd of any number of elements, not all zero.
QuadInt gcd_all(const Field& F, std::span<const QuadInt> xs);

std::complex<long double> embed(const Field& F, const QuadInt& x);

std::string to_string(const QuadInt& x);

}  // namespace qcubic
