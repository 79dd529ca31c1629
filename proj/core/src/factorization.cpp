#include "qcubic/factorization.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcubic/primes.hpp"

namespace qcubic {

namespace {

// Divides x by pi as often as it goes, at most cap times; returns the count.
int divide_out(const Field& F, QuadInt& x, const QuadInt& pi, int cap) {
  int k = 0;
  while (k < cap) {
    const auto q = div_exact(F, x, pi);
    if (!q) break;
    x = *q;
    ++k;
  }
  return k;
}

}  // namespace

Factorization factor(const Field& F, const QuadInt& x0) {
  if (is_zero(x0)) throw std::invalid_argument("factor: x = 0");
  QuadInt x = x0;
  std::uint64_t nx = norm(F, x);
  Factorization out;

  auto handle_rational_prime = [&](std::uint64_t p, int e) {
    switch (splitting_type(F, p)) {
      case SplittingType::Inert: {
        // norm(p) = p^2, so the exponent of p in norm(x) is even
        if (e % 2 != 0) throw std::logic_error("factor: odd inert exponent");
        const QuadInt pi{static_cast<std::int64_t>(p), 0};
        const int k = divide_out(F, x, pi, e / 2);
        if (k != e / 2) throw std::logic_error("factor: inert division failed");
        out.factors.emplace_back(pi, k);
        break;
      }
      case SplittingType::Ramified: {
        const QuadInt pi = primes_above(F, p)[0];
        const int k = divide_out(F, x, pi, e);
        if (k != e) throw std::logic_error("factor: ramified division failed");
        out.factors.emplace_back(pi, k);
        break;
      }
      case SplittingType::Split: {
        const auto above = primes_above(F, p);
        const int k1 = divide_out(F, x, above[0], e);
        const int k2 = divide_out(F, x, above[1], e - k1);
        if (k1 + k2 != e) throw std::logic_error("factor: split division failed");
        if (k1 > 0) out.factors.emplace_back(above[0], k1);
        if (k2 > 0) out.factors.emplace_back(above[1], k2);
        break;
      }
    }
  };

  for (std::uint64_t p = 2; static_cast<uint128>(p) * p <= nx; p += p == 2 ? 1 : 2) {
    if (nx % p != 0) continue;
    int e = 0;
    while (nx % p == 0) {
      nx /= p;
      ++e;
    }
    handle_rational_prime(p, e);
  }
  if (nx > 1) handle_rational_prime(nx, 1);

  if (!is_unit(F, x)) throw std::logic_error("factor: non-unit remainder");
  out.unit = x;
  std::sort(out.factors.begin(), out.factors.end(),
            [&](const auto& l, const auto& r) {
              const std::uint64_t nl = norm(F, l.first), nr = norm(F, r.first);
              if (nl != nr) return nl < nr;
              if (l.first.a != r.first.a) return l.first.a < r.first.a;
              return l.first.b < r.first.b;
            });
  return out;
}

std::vector<QuadInt> divisors(const Field& F, const QuadInt& x) {
  const Factorization fac = factor(F, x);
  std::vector<QuadInt> out;
  out.push_back(kOne);
  for (const auto& [pi, e] : fac.factors) {
    const std::size_t base = out.size();
    QuadInt pw = pi;
    for (int k = 1; k <= e; ++k) {
      for (std::size_t i = 0; i < base; ++i)
        out.push_back(mul(F, out[i], pw));
      if (k < e) pw = mul(F, pw, pi);
    }
  }
  for (QuadInt& d : out) d = canonical_associate(F, d).first;
  std::sort(out.begin(), out.end(), [&](const QuadInt& l, const QuadInt& r) {
    const std::uint64_t nl = norm(F, l), nr = norm(F, r);
    if (nl != nr) return nl < nr;
    if (l.a != r.a) return l.a < r.a;
    return l.b < r.b;
  });
  return out;
}

std::uint64_t divisor_count(const Field& F, const QuadInt& x) {
  const Factorization fac = factor(F, x);
  std::uint64_t c = 1;
  for (const auto& [pi, e] : fac.factors) c *= static_cast<std::uint64_t>(e) + 1;
  return c;
}

int moebius(const Field& F, const QuadInt& x) {
  const Factorization fac = factor(F, x);
  for (const auto& [pi, e] : fac.factors)
    if (e >= 2) return 0;
  return fac.factors.size() % 2 == 0 ? 1 : -1;
}

}  // namespace qcubic
