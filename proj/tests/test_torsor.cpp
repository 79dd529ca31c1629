#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>
#include <set>
#include <span>

#include "qcubic/counting.hpp"
#include "qcubic/factorization.hpp"
#include "qcubic/moebius_poly.hpp"
#include "qcubic/torsor.hpp"
#include "test_support.hpp"

using namespace qcubic;
using qcubic::testsupport::cube_identity;
using qcubic::testsupport::random_nonzero;

namespace {

TorsorTuple random_tuple(std::mt19937_64& rng, std::int64_t radius) {
  TorsorTuple t;
  for (auto& z : t.y) z = random_nonzero(rng, radius);
  return t;
}

TorsorTuple random_coprime_tuple(const Field& F, std::mt19937_64& rng) {
  for (;;) {
    TorsorTuple t = random_tuple(rng, 3);
    if (is_coprime(F, t)) return t;
  }
}

// Fully materialized surface enumeration, kept deliberately naive: list the
// canonical divisor pairs of x0^3 with QuadInt arithmetic and decide
// primitivity with ideal gcds.
std::uint64_t naive_surface_count(const Field& F, std::uint64_t B) {
  const std::uint64_t w2 = static_cast<std::uint64_t>(F.w) * F.w;
  std::uint64_t total = 0;
  for (const QuadInt& x0 : canonical_elements_up_to(F, B)) {
    const QuadInt cube = mul(F, mul(F, x0, x0), x0);
    for (const QuadInt& d1 : divisors(F, cube)) {
      if (norm(F, d1) > B) continue;
      const QuadInt rest = *div_exact(F, cube, d1);
      for (const QuadInt& d2 : divisors(F, rest)) {
        if (norm(F, d2) > B) continue;
        const QuadInt d3 = *div_exact(F, rest, d2);
        if (norm(F, d3) > B) continue;
        const std::array<QuadInt, 4> xs{x0, d1, d2, d3};
        if (is_unit(F, gcd_all(F, std::span<const QuadInt>(xs.data(), 4))))
          total += w2;
      }
    }
  }
  return total;
}

// Synthetic division by (x - 1); remainder is p(1).
std::pair<Poly, long long> divide_at_one(const Poly& p) {
  Poly q(p.size() > 1 ? p.size() - 1 : 1, 0);
  long long carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry += p[i];
    q[i - 1] = carry;
  }
  return {q, carry + p[0]};
}

}  // namespace

TEST_CASE("coprimality graph: 9 vertices, a single 9-cycle, 27 non-edges") {
  CHECK(kCycleEdges.size() == 9);
  CHECK(non_edges().size() == 27);

  std::array<int, kNumVertices> degree{};
  for (const auto& [u, v] : kCycleEdges) {
    ++degree[u];
    ++degree[v];
  }
  for (int d : degree) CHECK(d == 2);

  // connected 2-regular graph on 9 vertices = one cycle
  std::set<int> seen{V1};
  int cur = V1, prev = -1;
  for (int step = 0; step < kNumVertices; ++step) {
    for (const auto& [u, v] : kCycleEdges) {
      const int other = u == cur ? v : v == cur ? u : -1;
      if (other >= 0 && other != prev) {
        prev = cur;
        cur = other;
        seen.insert(cur);
        break;
      }
    }
  }
  CHECK(seen.size() == kNumVertices);

  for (const auto& [u, v] : non_edges()) CHECK_FALSE(is_edge(u, v));
}

TEST_CASE("psi0: examples and cube identity") {
  const Field Fi = make_field(-1);
  const auto ones = psi0(Fi, kOne, kOne, kOne);
  CHECK(ones == std::array<QuadInt, 4>{kOne, kOne, kOne, kOne});

  // (y23, y31, y12) = (1+i, 1, 1)
  const auto x = psi0(Fi, QuadInt{1, 1}, kOne, kOne);
  CHECK(x[0] == QuadInt{1, 1});
  CHECK(x[1] == kOne);
  CHECK(x[2] == QuadInt{1, 1});
  CHECK(x[3] == QuadInt{0, 2});  // (1+i)^2 = 2i

  std::mt19937_64 rng(21);
  for (const int n : kAdmissibleFields) {
    const Field F = make_field(n);
    for (int t = 0; t < 112; ++t) {
      const auto xs = psi0(F, random_nonzero(rng, 9), random_nonzero(rng, 9),
                           random_nonzero(rng, 9));
      REQUIRE(cube_identity(F, xs));
    }
  }
  CHECK_THROWS_AS(psi0(Fi, QuadInt{0, 0}, kOne, kOne), std::invalid_argument);
}

TEST_CASE("psi1: examples, cube identity, reduction to psi0") {
  const Field Fi = make_field(-1);
  std::array<QuadInt, 6> ones;
  ones.fill(kOne);
  CHECK(psi1(Fi, ones) == std::array<QuadInt, 4>{kOne, kOne, kOne, kOne});

  std::mt19937_64 rng(22);
  for (const int n : kAdmissibleFields) {
    const Field F = make_field(n);
    for (int t = 0; t < 112; ++t) {
      std::array<QuadInt, 6> y;
      for (auto& z : y) z = random_nonzero(rng, 5);
      REQUIRE(cube_identity(F, psi1(F, y)));
    }
    // y21 = y13 = y32 = 1 recovers psi0(y23, y31, y12)
    for (int t = 0; t < 50; ++t) {
      const QuadInt y12 = random_nonzero(rng, 9);
      const QuadInt y31 = random_nonzero(rng, 9);
      const QuadInt y23 = random_nonzero(rng, 9);
      const std::array<QuadInt, 6> y{y12, kOne, kOne, y31, y23, kOne};
      CHECK(psi1(F, y) == psi0(F, y23, y31, y12));
    }
  }
  CHECK_THROWS_AS(psi1(Fi, std::array<QuadInt, 6>{}), std::invalid_argument);
}

TEST_CASE("psi2: examples and cube identity") {
  const Field Fi = make_field(-1);
  TorsorTuple ones;
  ones.y.fill(kOne);
  CHECK(psi2(Fi, ones) == std::array<QuadInt, 4>{kOne, kOne, kOne, kOne});

  // y1 = 1+i, all other coordinates 1: only x0 and x1 involve y1
  TorsorTuple t = ones;
  t.y[V1] = QuadInt{1, 1};
  const auto x = psi2(Fi, t);
  CHECK(x[0] == QuadInt{1, 1});
  CHECK(x[1] == mul(Fi, QuadInt{1, 1}, mul(Fi, QuadInt{1, 1}, QuadInt{1, 1})));
  CHECK(x[2] == kOne);
  CHECK(x[3] == kOne);
  CHECK(cube_identity(Fi, x));

  std::mt19937_64 rng(23);
  for (const int n : kAdmissibleFields) {
    const Field F = make_field(n);
    for (int tr = 0; tr < 112; ++tr)
      REQUIRE(cube_identity(F, psi2(F, random_tuple(rng, 3))));
  }
}

TEST_CASE("height: examples and the coprime-tuple reduction") {
  const Field Fi = make_field(-1);
  CHECK(height(Fi, {QuadInt{2, 0}, QuadInt{2, 0}, QuadInt{2, 0}, QuadInt{2, 0}}) == 1);
  CHECK(height(Fi, {kOne, kOne, kOne, QuadInt{1, 1}}) == 2);
  CHECK_THROWS_AS(height(Fi, {QuadInt{0, 0}, QuadInt{0, 0}, QuadInt{0, 0},
                              QuadInt{0, 0}}),
                  std::invalid_argument);

  std::mt19937_64 rng(24);
  for (const int n : {-1, -3, -7}) {
    const Field F = make_field(n);
    for (int t = 0; t < 60; ++t) {
      const TorsorTuple y = random_coprime_tuple(F, rng);
      const auto x = psi2(F, y);
      const std::uint64_t want =
          std::max({norm(F, x[1]), norm(F, x[2]), norm(F, x[3])});
      REQUIRE(height(F, x) == want);
    }
  }
}

TEST_CASE("is_coprime: examples and unit invariance") {
  const Field Fi = make_field(-1);
  TorsorTuple ones;
  ones.y.fill(kOne);
  CHECK(is_coprime(Fi, ones));

  TorsorTuple bad = ones;
  bad.y[V1] = QuadInt{1, 1};
  bad.y[V2] = QuadInt{1, 1};
  CHECK_FALSE(is_coprime(Fi, bad));  // {(1),(2)} is a non-edge

  TorsorTuple good = ones;
  good.y[V1] = QuadInt{1, 1};
  good.y[V21] = QuadInt{1, 1};
  CHECK(is_coprime(Fi, good));  // {(1),(2,1)} is an edge

  std::mt19937_64 rng(25);
  for (const int n : {-1, -3, -11}) {
    const Field F = make_field(n);
    const auto us = units(F);
    for (int t = 0; t < 80; ++t) {
      const TorsorTuple y = random_tuple(rng, 3);
      const bool base = is_coprime(F, y);
      TorsorTuple scaled = y;
      const int v = static_cast<int>(rng() % kNumVertices);
      scaled.y[v] = mul(F, us[rng() % us.size()], scaled.y[v]);
      REQUIRE(is_coprime(F, scaled) == base);
      // the three height monomials are norm products, hence unit-invariant
      const auto xa = psi2(F, y), xb = psi2(F, scaled);
      for (int j = 1; j <= 3; ++j) REQUIRE(norm(F, xa[j]) == norm(F, xb[j]));
    }
  }
}

TEST_CASE("psi2 image of a coprime tuple is itself coprime") {
  std::mt19937_64 rng(26);
  for (const int n : {-1, -2, -3, -19}) {
    const Field F = make_field(n);
    for (int t = 0; t < 40; ++t) {
      const TorsorTuple y = random_coprime_tuple(F, rng);
      const auto x = psi2(F, y);
      REQUIRE(is_unit(F, gcd_all(F, std::span<const QuadInt>(x.data(), 4))));
    }
  }
}

TEST_CASE("two-step gcd reduction lands on a coprime tuple with the same image") {
  std::mt19937_64 rng(27);
  for (const int n : {-1, -2, -3, -7, -43}) {
    const Field F = make_field(n);
    for (int t = 0; t < 40; ++t) {
      QuadInt y23 = random_nonzero(rng, 6);
      QuadInt y31 = random_nonzero(rng, 6);
      QuadInt y12 = random_nonzero(rng, 6);
      const std::array<QuadInt, 3> in0{y23, y31, y12};
      const QuadInt g = gcd_all(F, std::span<const QuadInt>(in0.data(), 3));
      y23 = *div_exact(F, y23, g);
      y31 = *div_exact(F, y31, g);
      y12 = *div_exact(F, y12, g);
      const auto image = psi0(F, y23, y31, y12);

      // first step: split off the pairwise gcds
      const QuadInt y32 = gcd(F, y12, y23);
      const QuadInt y13 = gcd(F, y23, y31);
      const QuadInt y21 = gcd(F, y31, y12);
      const auto d12 = div_exact(F, y12, mul(F, y21, y32));
      const auto d23 = div_exact(F, y23, mul(F, y32, y13));
      const auto d31 = div_exact(F, y31, mul(F, y13, y21));
      REQUIRE(d12.has_value());
      REQUIRE(d23.has_value());
      REQUIRE(d31.has_value());

      // second step: split off the vertex gcds
      const QuadInt y1 = gcd(F, y21, *d31);
      const QuadInt y2 = gcd(F, y32, *d12);
      const QuadInt y3 = gcd(F, y13, *d23);
      TorsorTuple out;
      out.y[V1] = y1;
      out.y[V2] = y2;
      out.y[V3] = y3;
      out.y[V21] = *div_exact(F, y21, y1);
      out.y[V31] = *div_exact(F, *d31, y1);
      out.y[V32] = *div_exact(F, y32, y2);
      out.y[V12] = *div_exact(F, *d12, y2);
      out.y[V13] = *div_exact(F, y13, y3);
      out.y[V23] = *div_exact(F, *d23, y3);

      REQUIRE(is_coprime(F, out));
      const auto x = psi2(F, out);
      for (int j = 1; j <= 3; ++j)
        REQUIRE(mul(F, x[j], image[0]) == mul(F, x[0], image[j]));
    }
  }
}

TEST_CASE("surface points normalize to a primitive representative") {
  const Field Fi = make_field(-1);
  const SurfacePoint p = make_surface_point(
      Fi, {QuadInt{2, 0}, QuadInt{2, 0}, QuadInt{2, 0}, QuadInt{2, 0}});
  CHECK(p.x == std::array<QuadInt, 4>{kOne, kOne, kOne, kOne});

  TorsorTuple t;
  t.y.fill(kOne);
  t.y[V12] = QuadInt{1, 1};
  auto xs = psi2(Fi, t);
  for (auto& xi : xs) xi = mul(Fi, QuadInt{0, 3}, xi);  // scale by 3i
  const SurfacePoint q = make_surface_point(Fi, xs);
  CHECK(is_canonical(Fi, q.x[0]));
  CHECK(is_unit(Fi, gcd_all(Fi, std::span<const QuadInt>(q.x.data(), 4))));
  CHECK(cube_identity(Fi, q.x));

  CHECK_THROWS_AS(make_surface_point(Fi, {kOne, kOne, kOne, QuadInt{1, 1}}),
                  std::invalid_argument);
}

TEST_CASE("count_torsor9: forced values at tiny bounds") {
  const Field Fi = make_field(-1);
  CHECK(count_torsor9(Fi, 0.5L) == 0);
  CHECK(count_torsor9(Fi, 0) == 0);
  CHECK(count_torsor9(Fi, 1) == 16);
  const Field F3 = make_field(-3);
  CHECK(count_torsor9(F3, 1) == 36);
  CHECK(count_divisor_oracle(Fi, 1) == 16);
  CHECK(count_divisor_oracle(F3, 1) == 36);
}

TEST_CASE("all three counting routes agree with the naive materialized scan") {
  const Field Fi = make_field(-1);
  const std::uint64_t naive50 = naive_surface_count(Fi, 50);
  CHECK(count_divisor_oracle(Fi, 50) == naive50);
  CHECK(count_torsor9(Fi, 50) == naive50);
  CHECK(count_torsor9(Fi, 50, 4) == naive50);

  const Field F2 = make_field(-2);
  const std::uint64_t naive30 = naive_surface_count(F2, 30);
  CHECK(count_divisor_oracle(F2, 30) == naive30);
  CHECK(count_torsor9(F2, 30) == naive30);

  const Field F3 = make_field(-3);
  const std::uint64_t naive20 = naive_surface_count(F3, 20);
  CHECK(count_divisor_oracle(F3, 20) == naive20);
  CHECK(count_torsor9(F3, 20) == naive20);
}

TEST_CASE("backends agree on the full grid and count monotonically") {
  for (const int n : kAdmissibleFields) {
    const Field F = make_field(n);
    std::uint64_t prev = 0;
    for (const long double B :
         {1.0L, 5.0L, 10.0L, 50.0L, 100.0L, 500.0L, 1000.0L}) {
      const std::uint64_t a = count_torsor9(F, B, 2);
      const std::uint64_t b = count_divisor_oracle(F, B, 2);
      REQUIRE(a == b);
      REQUIRE(a >= prev);
      prev = a;
    }
  }
}

TEST_CASE("moebius polynomial: both routes, symbolic expansion, roots") {
  const Poly red = moebius_polynomial_reduced();
  const Poly dir = moebius_polynomial_direct();
  REQUIRE(red == dir);

  Poly want = poly_mul(poly_pow(Poly{1, -1}, 7), Poly{1, 7, 1});
  want.resize(10, 0);
  CHECK(red == want);

  CHECK(red[0] == 1);  // only the empty divisor vector contributes x^0

  // multiplicity >= 7 at x = 1
  Poly cur = red;
  for (int k = 0; k < 7; ++k) {
    const auto [quot, rem] = divide_at_one(cur);
    REQUIRE(rem == 0);
    cur = quot;
  }

  long long abs_sum = 0;
  for (const long long c : dir) abs_sum += c < 0 ? -c : c;
  CHECK(abs_sum <= (1LL << 27));
}

TEST_CASE("tiny-bound moebius-inversion counter matches the enumeration") {
  const Field Fi = make_field(-1);
  for (const long double B : {1.0L, 2.0L, 3.0L, 4.0L, 5.0L})
    REQUIRE(count_moebius_inversion_tiny(Fi, B) == count_torsor9(Fi, B));
  CHECK(count_moebius_inversion_tiny(Fi, 0.5L) == 0);
}
