#include "qcubic/primes.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <stdexcept>

namespace qcubic {

namespace {

std::uint64_t isqrt_u64(std::uint64_t x) {
  if (x == 0) return 0;
  std::uint64_t r = static_cast<std::uint64_t>(sqrtl(static_cast<long double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  uint128 acc = 1, b = base % m;
  while (exp) {
    if (exp & 1) acc = acc * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

// Legendre symbol (d / p) for odd prime p.
int legendre(std::int64_t d, std::uint64_t p) {
  std::int64_t dm = d % static_cast<std::int64_t>(p);
  if (dm < 0) dm += static_cast<std::int64_t>(p);
  if (dm == 0) return 0;
  const std::uint64_t e = mod_pow(static_cast<std::uint64_t>(dm), (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

bool key_less(const Field& F, const QuadInt& x, const QuadInt& y) {
  const std::uint64_t nx = norm(F, x), ny = norm(F, y);
  if (nx != ny) return nx < ny;
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

// All canonical solutions of norm(z) = p.
std::vector<QuadInt> norm_form_solutions(const Field& F, std::uint64_t p) {
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::vector<QuadInt> out;
  auto push = [&](std::int64_t a, std::int64_t b) {
    const QuadInt z{a, b};
    if (!is_canonical(F, z)) return;
    if (seen.insert({a, b}).second) out.push_back(z);
  };
  const std::uint64_t m = static_cast<std::uint64_t>(-F.n);
  if (F.omega_kind == OmegaKind::SqrtN) {
    // a^2 + m b^2 = p
    for (std::uint64_t b = 0; m * b * b <= p; ++b) {
      const std::uint64_t rem = p - m * b * b;
      const std::uint64_t a = isqrt_u64(rem);
      if (a * a != rem) continue;
      for (const int sa : {1, -1})
        for (const int sb : {1, -1})
          push(sa * static_cast<std::int64_t>(a), sb * static_cast<std::int64_t>(b));
    }
  } else {
    // (2a + b)^2 + m b^2 = 4p
    for (std::uint64_t b = 0; m * b * b <= 4 * p; ++b) {
      const std::uint64_t rem = 4 * p - m * b * b;
      const std::uint64_t s = isqrt_u64(rem);
      if (s * s != rem) continue;
      if ((s % 2) != (b % 2)) continue;
      for (const int ss : {1, -1})
        for (const int sb : {1, -1}) {
          const std::int64_t bb = sb * static_cast<std::int64_t>(b);
          const std::int64_t xx = ss * static_cast<std::int64_t>(s);
          push((xx - bb) / 2, bb);
        }
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const QuadInt& x, const QuadInt& y) { return key_less(F, x, y); });
  return out;
}

std::vector<QuadInt> sieve_primes(const Field& F, std::uint64_t X) {
  std::vector<QuadInt> out;
  if (X < 2) return out;
  std::vector<bool> composite(X + 1, false);
  for (std::uint64_t p = 2; p <= X; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t k = p * p; k <= X; k += p) composite[k] = true;
    switch (splitting_type(F, p)) {
      case SplittingType::Inert:
        if (p <= X / p) out.push_back(QuadInt{static_cast<std::int64_t>(p), 0});
        break;
      case SplittingType::Split:
      case SplittingType::Ramified: {
        const auto above = primes_above(F, p);
        out.insert(out.end(), above.begin(), above.end());
        break;
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const QuadInt& x, const QuadInt& y) { return key_less(F, x, y); });
  return out;
}

struct CacheEntry {
  std::uint64_t bound = 0;
  std::shared_ptr<const std::vector<QuadInt>> primes;
};

std::shared_mutex g_cache_mutex;
std::map<int, CacheEntry> g_cache;

std::vector<QuadInt> prefix_up_to(const Field& F, const std::vector<QuadInt>& all,
                                  std::uint64_t X) {
  auto it = std::partition_point(all.begin(), all.end(), [&](const QuadInt& z) {
    return norm(F, z) <= X;
  });
  return {all.begin(), it};
}

}  // namespace

SplittingType splitting_type(const Field& F, std::uint64_t p) {
  if (!is_prime_u64(p))
    throw std::invalid_argument("splitting_type: p is not prime");
  const std::int64_t disc = F.disc;
  if (p == 2) {
    if (disc % 2 == 0) return SplittingType::Ramified;
    // (disc / 2): split iff disc = 1 mod 8
    const std::int64_t d8 = ((disc % 8) + 8) % 8;
    return d8 == 1 ? SplittingType::Split : SplittingType::Inert;
  }
  if (static_cast<std::uint64_t>(-disc) % p == 0) return SplittingType::Ramified;
  return legendre(disc, p) == 1 ? SplittingType::Split : SplittingType::Inert;
}

std::vector<QuadInt> primes_above(const Field& F, std::uint64_t p) {
  const SplittingType st = splitting_type(F, p);
  if (st == SplittingType::Inert)
    return {QuadInt{static_cast<std::int64_t>(p), 0}};
  auto sols = norm_form_solutions(F, p);
  const std::size_t expected = st == SplittingType::Split ? 2 : 1;
  if (sols.size() != expected)
    throw std::logic_error("primes_above: norm form solution count mismatch");
  return sols;
}

std::vector<QuadInt> primes_up_to(const Field& F, std::uint64_t X) {
  {
    std::shared_lock lock(g_cache_mutex);
    auto it = g_cache.find(F.n);
    if (it != g_cache.end() && it->second.bound >= X)
      return prefix_up_to(F, *it->second.primes, X);
  }
  std::unique_lock lock(g_cache_mutex);
  auto it = g_cache.find(F.n);
  if (it == g_cache.end() || it->second.bound < X) {
    CacheEntry e;
    e.bound = X;
    e.primes = std::make_shared<const std::vector<QuadInt>>(sieve_primes(F, X));
    it = g_cache.insert_or_assign(F.n, std::move(e)).first;
  }
  return prefix_up_to(F, *it->second.primes, X);
}

std::filesystem::path prime_cache_path(const std::filesystem::path& dir,
                                       const Field& F) {
  return dir / ("qprimes_" + std::to_string(F.n) + ".txt");
}

void write_prime_cache(const std::filesystem::path& file, const Field& F,
                       std::uint64_t bound, const std::vector<QuadInt>& primes) {
  std::FILE* f = std::fopen(file.string().c_str(), "w");
  if (!f) throw std::runtime_error("write_prime_cache: cannot open " + file.string());
  std::fprintf(f, "# qprimes v1 n=%d bound=%" PRIu64 "\n", F.n, bound);
  for (const QuadInt& z : primes)
    std::fprintf(f, "%" PRId64 " %" PRId64 " %" PRIu64 "\n", z.a, z.b, norm(F, z));
  std::fclose(f);
}

std::optional<PrimeCacheFile> read_prime_cache(const std::filesystem::path& file,
                                               const Field& F) {
  std::FILE* f = std::fopen(file.string().c_str(), "r");
  if (!f) return std::nullopt;
  PrimeCacheFile out;
  int n = 0;
  std::uint64_t bound = 0;
  char header[128];
  if (!std::fgets(header, sizeof header, f) ||
      std::sscanf(header, "# qprimes v1 n=%d bound=%" SCNu64, &n, &bound) != 2 ||
      n != F.n) {
    std::fclose(f);
    return std::nullopt;
  }
  out.bound = bound;
  std::int64_t a, b;
  std::uint64_t nm;
  int got;
  while ((got = std::fscanf(f, "%" SCNd64 " %" SCNd64 " %" SCNu64, &a, &b, &nm)) == 3) {
    const QuadInt z{a, b};
    // reject corrupted bodies: wrong norm, norm above the claimed bound, or
    // entries out of the (norm, a, b) order the writer produces
    if (norm(F, z) != nm || nm > bound) {
      std::fclose(f);
      return std::nullopt;
    }
    if (!out.primes.empty()) {
      const QuadInt& prev = out.primes.back();
      const std::uint64_t pn = norm(F, prev);
      if (pn > nm || (pn == nm && (prev.a > a || (prev.a == a && prev.b >= b)))) {
        std::fclose(f);
        return std::nullopt;
      }
    }
    out.primes.push_back(z);
  }
  std::fclose(f);
  if (got != EOF) return std::nullopt;  // trailing garbage or truncated line
  return out;
}

std::vector<QuadInt> primes_up_to_cached(const Field& F, std::uint64_t X,
                                         const std::filesystem::path& dir) {
  const auto file = prime_cache_path(dir, F);
  if (auto cached = read_prime_cache(file, F); cached && cached->bound >= X)
    return prefix_up_to(F, cached->primes, X);
  auto fresh = primes_up_to(F, X);
  std::filesystem::create_directories(dir);
  write_prime_cache(file, F, X, fresh);
  return fresh;
}

}  // namespace qcubic
