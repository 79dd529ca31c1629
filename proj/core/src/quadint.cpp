#include "qcubic/quadint.hpp"

#include <array>
#include <cmath>

namespace qcubic {

std::vector<QuadInt> units(const Field& F) {
  // Powers of a primitive w-th root of unity. For w = 4 that is omega = i;
  // for w = 6 it is omega = (1 + sqrt(-3))/2 = e^(i pi/3).
  std::vector<QuadInt> us;
  us.reserve(F.w);
  const QuadInt g = F.w == 2 ? QuadInt{-1, 0} : QuadInt{0, 1};
  QuadInt u = kOne;
  for (int k = 0; k < F.w; ++k) {
    us.push_back(u);
    u = mul(F, u, g);
  }
  assert(u == kOne);
  return us;
}

std::pair<QuadInt, QuadInt> canonical_associate(const Field& F, const QuadInt& x) {
  if (is_zero(x)) throw std::invalid_argument("canonical_associate: x = 0");
  for (const QuadInt& u : units(F)) {
    const QuadInt y = mul(F, u, x);
    if (is_canonical(F, y)) return {y, u};
  }
  throw std::logic_error("canonical_associate: no associate in the sector");
}

namespace {

struct Vec2 {
  int128 a = 0, b = 0;
};

int128 iabs(int128 v) { return v < 0 ? -v : v; }

// g = gcd(x, y) >= 0 with g = s*x + t*y.
int128 ext_gcd(int128 x, int128 y, int128& s, int128& t) {
  int128 old_r = x, r = y;
  int128 old_s = 1, s1 = 0;
  int128 old_t = 0, t1 = 1;
  while (r != 0) {
    const int128 q = old_r / r;
    int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s1;
    old_s = s1;
    s1 = tmp;
    tmp = old_t - q * t1;
    old_t = t1;
    t1 = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

// Triangular basis (p, 0), (q, r) with p, r > 0 of the lattice spanned by
// the given generators together with their omega-multiples. The span is an
// ideal, hence of full rank whenever some generator is nonzero.
bool triangular_basis(const Field& F, std::span<const QuadInt> gens, int128& p,
                      int128& q, int128& r) {
  q = 0;
  r = 0;
  p = 0;
  auto absorb_a = [&](int128 va) {
    if (va == 0) return;
    int128 s, t;
    p = ext_gcd(p, va, s, t);
  };
  auto feed = [&](int128 va, int128 vb) {
    if (vb == 0) {
      absorb_a(va);
      return;
    }
    int128 s, t;
    const int128 g = ext_gcd(r, vb, s, t);
    const int128 nq = s * q + t * va;
    // leftovers land on the a-axis
    absorb_a(q - (r / g) * nq);
    absorb_a(va - (vb / g) * nq);
    q = nq;
    r = g;
  };
  for (const QuadInt& z : gens) {
    if (is_zero(z)) continue;
    const QuadInt zw = mul_omega(F, z);
    feed(z.a, z.b);
    feed(zw.a, zw.b);
  }
  if (r == 0 || p == 0) return false;
  q %= p;
  if (q < 0) q += p;
  return true;
}

int128 qform(const Field& F, const Vec2& v) {
  if (F.omega_kind == OmegaKind::SqrtN)
    return v.a * v.a + static_cast<int128>(-F.n) * (v.b * v.b);
  return v.a * v.a + v.a * v.b +
         ((1 - static_cast<int128>(F.n)) / 4) * (v.b * v.b);
}

// 2 * B(u, v) for the bilinear form B of the norm form.
int128 bform2(const Field& F, const Vec2& u, const Vec2& v) {
  if (F.omega_kind == OmegaKind::SqrtN)
    return 2 * (u.a * v.a) + 2 * static_cast<int128>(-F.n) * (u.b * v.b);
  return 2 * (u.a * v.a) + (u.a * v.b + u.b * v.a) +
         2 * ((1 - static_cast<int128>(F.n)) / 4) * (u.b * v.b);
}

int128 round_div(int128 num, int128 den) {
  assert(den > 0);
  if (num >= 0) return (num + den / 2) / den;
  return -((-num + den / 2) / den);
}

// Gauss-Lagrange reduction; returns a shortest nonzero vector of the
// lattice with basis {u, v}. The pair is reduced once Q(u) <= Q(v) and
// |2B(u,v)| <= Q(u); the rounded update enforces the bilinear bound, so the
// loop ends as soon as the shorter vector stops improving.
Vec2 shortest_vector(const Field& F, Vec2 u, Vec2 v) {
  for (int iter = 0; iter < 4096; ++iter) {
    if (qform(F, u) > qform(F, v)) std::swap(u, v);
    const int128 t = round_div(bform2(F, u, v), 2 * qform(F, u));
    if (t == 0) return u;
    v.a -= t * u.a;
    v.b -= t * u.b;
    if (qform(F, v) >= qform(F, u)) return u;
  }
  throw std::logic_error("shortest_vector: reduction did not terminate");
}

}  // namespace

std::uint64_t ideal_index(const Field& F, const QuadInt& x, const QuadInt& y) {
  const std::array<QuadInt, 2> gens{x, y};
  int128 p, q, r;
  if (!triangular_basis(F, gens, p, q, r))
    throw std::invalid_argument("ideal_index: zero ideal");
  const uint128 idx = static_cast<uint128>(iabs(p)) * static_cast<uint128>(iabs(r));
  assert(idx <= UINT64_MAX);
  return static_cast<std::uint64_t>(idx);
}

QuadInt gcd(const Field& F, const QuadInt& x, const QuadInt& y) {
  const std::array<QuadInt, 2> gens{x, y};
  int128 p, q, r;
  if (!triangular_basis(F, gens, p, q, r))
    throw std::invalid_argument("gcd: gcd(0, 0) is undefined");
  const Vec2 g = shortest_vector(F, Vec2{p, 0}, Vec2{q, r});
  assert(iabs(g.a) <= INT64_MAX && iabs(g.b) <= INT64_MAX);
  const QuadInt gi{static_cast<std::int64_t>(g.a), static_cast<std::int64_t>(g.b)};
  return canonical_associate(F, gi).first;
}

QuadInt gcd_all(const Field& F, std::span<const QuadInt> xs) {
  QuadInt g{0, 0};
  for (const QuadInt& x : xs) {
    if (is_zero(x)) continue;
    g = is_zero(g) ? x : gcd(F, g, x);
    if (is_unit(F, g)) return kOne;
  }
  if (is_zero(g)) throw std::invalid_argument("gcd_all: all elements are zero");
  return canonical_associate(F, g).first;
}

std::complex<long double> embed(const Field& F, const QuadInt& x) {
  const long double sq = sqrtl(static_cast<long double>(-F.n));
  if (F.omega_kind == OmegaKind::SqrtN)
    return {static_cast<long double>(x.a), static_cast<long double>(x.b) * sq};
  return {static_cast<long double>(x.a) + static_cast<long double>(x.b) / 2.0L,
          static_cast<long double>(x.b) * sq / 2.0L};
}

std::string to_string(const QuadInt& x) {
  std::string s = std::to_string(x.a);
  if (x.b != 0) {
    s += (x.b > 0 ? "+" : "-");
    s += std::to_string(x.b < 0 ? -x.b : x.b);
    s += "w";
  }
  return s;
}

}  // namespace qcubic
