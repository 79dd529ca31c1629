// Exhaustive point counting on x0^3 = x1 x2 x3.
//
// The torsor backend enumerates 9-tuples y (one canonical representative
// per coordinate-wise unit orbit) subject to the three monomial height
// bounds
//     norm(y_j)^3 norm(y_jk) norm(y_jl) norm(y_kj)^2 norm(y_lj)^2 <= B
// and to coprimality across the 27 non-edges of the cycle graph. Variables
// are fixed in the order y1, y2, y3, y21, y31, y32, y13, y12, y23 (largest
// exponents first); every level gets the min over its constraints of the
// e-th root of the remaining budget, and coprimality against already-fixed
// partners prunes as soon as a pair shares a factor.

#include "qcubic/counting.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

#include "qcubic/factorization.hpp"
#include "qcubic/torsor.hpp"

namespace qcubic {

namespace {

std::uint64_t isqrt_u64(std::uint64_t x) {
  if (x == 0) return 0;
  std::uint64_t r = static_cast<std::uint64_t>(sqrtl(static_cast<long double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::uint64_t icbrt_u64(std::uint64_t x) {
  if (x == 0) return 0;
  std::uint64_t r = static_cast<std::uint64_t>(cbrtl(static_cast<long double>(x)));
  while (r > 0 && r * r * r > x) --r;
  while ((r + 1) * (r + 1) * (r + 1) <= x) ++r;
  return r;
}

// Checks preconditions and truncates: monomial norms are integers, so a
// real bound B counts the same points as floor(B).
std::uint64_t effective_bound(long double B, std::uint64_t cap, const char* who) {
  if (!(B >= 0)) throw std::invalid_argument(std::string(who) + ": bound must be >= 0");
  if (B > static_cast<long double>(cap))
    throw std::invalid_argument(std::string(who) + ": bound exceeds supported range");
  return static_cast<std::uint64_t>(floorl(B));
}

void scan_disc(const Field& F, std::uint64_t C, bool canonical_only,
               std::vector<QuadInt>& out) {
  const std::uint64_t m = static_cast<std::uint64_t>(-F.n);
  auto push = [&](std::int64_t a, std::int64_t b) {
    const QuadInt z{a, b};
    if (is_zero(z)) return;
    if (!canonical_only || is_canonical(F, z)) out.push_back(z);
  };
  if (F.omega_kind == OmegaKind::SqrtN) {
    for (std::int64_t b = 0; m * static_cast<std::uint64_t>(b) * b <= C; ++b) {
      const std::uint64_t amax = isqrt_u64(C - m * b * b);
      for (std::int64_t a = -static_cast<std::int64_t>(amax);
           a <= static_cast<std::int64_t>(amax); ++a) {
        push(a, b);
        if (b != 0) push(a, -b);
      }
    }
  } else {
    for (std::int64_t b = 0; m * static_cast<std::uint64_t>(b) * b <= 4 * C; ++b) {
      const std::uint64_t smax = isqrt_u64(4 * C - m * b * b);
      // x = 2a + b runs over [-smax, smax] with x = b mod 2
      std::int64_t x = -static_cast<std::int64_t>(smax);
      if (((x - b) % 2 + 2) % 2 != 0) ++x;
      for (; x <= static_cast<std::int64_t>(smax); x += 2) {
        push((x - b) / 2, b);
        if (b != 0) push((x + b) / 2, -b);
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](const QuadInt& l, const QuadInt& r) {
    const std::uint64_t nl = norm(F, l), nr = norm(F, r);
    if (nl != nr) return nl < nr;
    if (l.a != r.a) return l.a < r.a;
    return l.b < r.b;
  });
}

struct ElemTable {
  std::vector<QuadInt> elems;
  std::vector<std::uint64_t> norms;

  ElemTable(const Field& F, std::uint64_t C, bool canonical_only) {
    scan_disc(F, C, canonical_only, elems);
    norms.reserve(elems.size());
    for (const QuadInt& z : elems) norms.push_back(norm(F, z));
  }

  std::size_t prefix(std::uint64_t bound) const {
    return static_cast<std::size_t>(
        std::upper_bound(norms.begin(), norms.end(), bound) - norms.begin());
  }
};

// Variable order and per-constraint exponents, indexed by Vertex.
constexpr std::array<int, 9> kOrder{V1, V2, V3, V21, V31, V32, V13, V12, V23};
constexpr int kExp[3][9] = {
    {3, 0, 0, 1, 2, 1, 2, 0, 0},  // norm(y1)^3 y12 y13 y21^2 y31^2
    {0, 3, 0, 2, 1, 0, 0, 1, 2},  // norm(y2)^3 y23 y21 y32^2 y12^2
    {0, 0, 3, 0, 0, 2, 1, 2, 1},  // norm(y3)^3 y31 y32 y13^2 y23^2
};

// Earlier-fixed non-edge partners per level of kOrder.
const std::array<std::vector<int>, 9>& partner_levels() {
  static const auto table = [] {
    std::array<std::vector<int>, 9> t{};
    for (int lv = 0; lv < 9; ++lv)
      for (int prev = 0; prev < lv; ++prev)
        if (!is_edge(kOrder[lv], kOrder[prev])) t[lv].push_back(prev);
    return t;
  }();
  return table;
}

struct Enumerator {
  const Field& F;
  const ElemTable& tab;
  std::array<std::uint64_t, 3> caps;
  bool check_coprimality;
  std::array<QuadInt, 9> y{};
  std::array<std::uint64_t, 9> ynorm{};
  std::uint64_t leaves = 0;

  std::uint64_t bound_for(int level, const std::array<std::uint64_t, 3>& prod) const {
    const int v = kOrder[level];
    std::uint64_t bound = UINT64_MAX;
    for (int c = 0; c < 3; ++c) {
      const int e = kExp[c][v];
      if (e == 0) continue;
      if (prod[c] > caps[c]) return 0;
      const std::uint64_t room = caps[c] / prod[c];
      const std::uint64_t be =
          e == 1 ? room : e == 2 ? isqrt_u64(room) : icbrt_u64(room);
      bound = std::min(bound, be);
    }
    return bound;
  }

  void recurse(int level, const std::array<std::uint64_t, 3>& prod) {
    if (level == 9) {
      ++leaves;
      return;
    }
    const std::uint64_t bound = bound_for(level, prod);
    if (bound == 0) return;
    const std::size_t hi = tab.prefix(bound);
    const int v = kOrder[level];
    const auto& partners = partner_levels()[level];
    for (std::size_t i = 0; i < hi; ++i) {
      if (check_coprimality) {
        bool ok = true;
        for (const int pl : partners)
          if (!coprime(F, tab.elems[i], y[kOrder[pl]])) {
            ok = false;
            break;
          }
        if (!ok) continue;
      }
      y[v] = tab.elems[i];
      ynorm[v] = tab.norms[i];
      std::array<std::uint64_t, 3> next = prod;
      for (int c = 0; c < 3; ++c)
        for (int e = 0; e < kExp[c][v]; ++e) next[c] *= ynorm[v];
      recurse(level + 1, next);
    }
  }
};

}  // namespace

std::vector<QuadInt> canonical_elements_up_to(const Field& F, std::uint64_t C) {
  std::vector<QuadInt> out;
  scan_disc(F, C, true, out);
  return out;
}

std::vector<QuadInt> elements_up_to(const Field& F, std::uint64_t C) {
  std::vector<QuadInt> out;
  scan_disc(F, C, false, out);
  return out;
}

std::uint64_t count_torsor9(const Field& F, long double B, int workers) {
  const std::uint64_t Beff = effective_bound(B, 100'000'000ULL, "count_torsor9");
  if (Beff < 1) return 0;

  const ElemTable tab(F, Beff, true);
  const std::array<std::uint64_t, 3> caps{Beff, Beff, Beff};

  // Flatten the first two levels (y1, y2, both capped at B^(1/3)) into a
  // task grid; workers pull tasks through an atomic cursor.
  const std::size_t n1 = tab.prefix(icbrt_u64(Beff));
  const std::size_t tasks = n1 * n1;
  std::atomic<std::size_t> cursor{0};
  std::atomic<std::uint64_t> total{0};

  auto run = [&]() {
    Enumerator en{F, tab, caps, true};
    std::uint64_t local = 0;
    for (;;) {
      const std::size_t t = cursor.fetch_add(1, std::memory_order_relaxed);
      if (t >= tasks) break;
      const std::size_t i1 = t / n1, i2 = t % n1;
      if (!coprime(F, tab.elems[i1], tab.elems[i2])) continue;  // {V1,V2} non-edge
      en.y[V1] = tab.elems[i1];
      en.ynorm[V1] = tab.norms[i1];
      en.y[V2] = tab.elems[i2];
      en.ynorm[V2] = tab.norms[i2];
      std::array<std::uint64_t, 3> prod{1, 1, 1};
      for (int e = 0; e < 3; ++e) prod[0] *= en.ynorm[V1];
      for (int e = 0; e < 3; ++e) prod[1] *= en.ynorm[V2];
      if (prod[0] > Beff || prod[1] > Beff) continue;
      en.leaves = 0;
      en.recurse(2, prod);
      local += en.leaves;
    }
    total.fetch_add(local, std::memory_order_relaxed);
  };

  const int nthreads = std::clamp(workers, 1, 256);
  if (nthreads <= 1 || tasks <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(run);
    for (auto& th : pool) th.join();
  }

  return total.load() * static_cast<std::uint64_t>(F.w) * F.w;
}

std::uint64_t count_divisor_oracle(const Field& F, long double B, int workers) {
  const std::uint64_t Beff = effective_bound(B, 2'000'000ULL, "count_divisor_oracle");
  if (Beff < 1) return 0;

  const std::vector<QuadInt> x0s = canonical_elements_up_to(F, Beff);
  std::atomic<std::size_t> cursor{0};
  std::atomic<std::uint64_t> total{0};

  auto run = [&]() {
    std::uint64_t local = 0;
    for (;;) {
      const std::size_t t = cursor.fetch_add(1, std::memory_order_relaxed);
      if (t >= x0s.size()) break;
      const Factorization fac = factor(F, x0s[t]);
      const std::size_t np = fac.factors.size();

      // x0^3 = unit^3 * prod(pi^(3e)); split each exponent 3e as f + g + h
      // over (d1, d2, d3). The point is primitive iff no prime lands in all
      // three parts (it always divides x0), and the w^2 unit twists of
      // (d1, d2) stand or fall together.
      std::vector<std::uint64_t> pnorm(np);
      std::vector<int> pexp(np);
      for (std::size_t i = 0; i < np; ++i) {
        pnorm[i] = norm(F, fac.factors[i].first);
        pexp[i] = 3 * fac.factors[i].second;
      }
      std::uint64_t accepted = 0;
      auto rec = [&](auto&& self, std::size_t i, std::uint64_t n1, std::uint64_t n2,
                     std::uint64_t n3, bool primitive) -> void {
        if (i == np) {
          if (primitive && n1 <= Beff && n2 <= Beff && n3 <= Beff) ++accepted;
          return;
        }
        const int E = pexp[i];
        std::uint64_t f_pow = 1;
        for (int f = 0; f <= E; ++f) {
          const std::uint64_t m1 = n1 * f_pow;
          if (m1 > Beff) break;
          std::uint64_t g_pow = 1;
          for (int g = 0; g + f <= E; ++g) {
            const std::uint64_t m2 = n2 * g_pow;
            if (m2 > Beff) break;
            const int h = E - f - g;
            std::uint64_t h_pow = 1;
            for (int e = 0; e < h; ++e) h_pow *= pnorm[i];
            self(self, i + 1, m1, m2, n3 * h_pow,
                 primitive && (f == 0 || g == 0 || h == 0));
            g_pow *= pnorm[i];
          }
          f_pow *= pnorm[i];
        }
      };
      rec(rec, 0, 1, 1, 1, true);
      local += accepted;
    }
    total.fetch_add(local, std::memory_order_relaxed);
  };

  const int nthreads = std::clamp(workers, 1, 256);
  if (nthreads <= 1 || x0s.size() <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(run);
    for (auto& th : pool) th.join();
  }

  return total.load() * static_cast<std::uint64_t>(F.w) * F.w;
}

std::uint64_t count_moebius_inversion_tiny(const Field& F, long double B) {
  const std::uint64_t Beff = effective_bound(B, 16, "count_moebius_inversion_tiny");
  if (Beff < 1) return 0;

  // Candidate divisor values: canonical squarefree elements of norm <= B
  // (norm above B forces an empty inner count), with their Moebius signs.
  struct Cand {
    QuadInt d;
    int mu;
    bool unit;
  };
  std::vector<Cand> cands;
  for (const QuadInt& z : canonical_elements_up_to(F, Beff)) {
    const int mu = moebius(F, z);
    if (mu != 0) cands.push_back({z, mu, is_unit(F, z)});
  }

  const ElemTable ztab(F, Beff, true);

  // Inner unconstrained count, memoized on the residual caps: tuples of
  // canonical z with the three monomial bounds, times w^9 for the full count
  // (conditions are coordinate-wise unit-invariant).
  std::map<std::array<std::uint64_t, 3>, std::uint64_t> memo;
  auto boxed = [&](const std::array<std::uint64_t, 3>& caps) -> std::uint64_t {
    auto it = memo.find(caps);
    if (it != memo.end()) return it->second;
    Enumerator en{F, ztab, caps, false};
    en.recurse(0, {1, 1, 1});
    memo.emplace(caps, en.leaves);
    return en.leaves;
  };

  const auto& pairs = non_edges();
  std::array<QuadInt, 9> r;
  r.fill(kOne);
  long long acc = 0;

  auto monomials_ok = [&](std::array<std::uint64_t, 3>& caps) {
    for (int c = 0; c < 3; ++c) {
      uint128 m = 1;
      for (int v = 0; v < 9; ++v)
        for (int e = 0; e < kExp[c][v]; ++e) m *= norm(F, r[v]);
      if (m > Beff) return false;
      caps[c] = Beff / static_cast<std::uint64_t>(m);
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t t, int sign) -> void {
    if (t == pairs.size()) {
      std::array<std::uint64_t, 3> caps{};
      if (!monomials_ok(caps)) return;
      acc += static_cast<long long>(sign) * static_cast<long long>(boxed(caps));
      return;
    }
    const auto [u, v] = pairs[t];
    for (const Cand& c : cands) {
      if (c.unit) {
        self(self, t + 1, sign);
        continue;
      }
      const QuadInt ru = r[u], rv = r[v];
      // lcm via gcd; stays canonical
      auto lcm = [&](const QuadInt& x, const QuadInt& y) {
        const QuadInt g = gcd(F, x, y);
        return canonical_associate(F, mul(F, *div_exact(F, x, g), y)).first;
      };
      r[u] = lcm(ru, c.d);
      r[v] = lcm(rv, c.d);
      std::array<std::uint64_t, 3> caps{};
      if (monomials_ok(caps)) self(self, t + 1, sign * c.mu);
      r[u] = ru;
      r[v] = rv;
    }
  };
  rec(rec, 0, 1);

  if (acc < 0)
    throw std::logic_error("count_moebius_inversion_tiny: negative total");
  return static_cast<std::uint64_t>(acc) * static_cast<std::uint64_t>(F.w) * F.w;
}

}  // namespace qcubic
