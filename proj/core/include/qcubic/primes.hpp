#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "qcubic/field.hpp"
#include "qcubic/quadint.hpp"

namespace qcubic {

enum class SplittingType { Split, Inert, Ramified };

// Decomposition of the rational prime p in O: ramified iff p | disc,
// otherwise split or inert by the Kronecker symbol (disc / p).
// Throws std::invalid_argument if p is not prime.
SplittingType splitting_type(const Field& F, std::uint64_t p);

// Canonical generators of the prime ideals above p: two of norm p (split),
// one of norm p (ramified), or p itself of norm p^2 (inert).
std::vector<QuadInt> primes_above(const Field& F, std::uint64_t p);

// One canonical prime per prime ideal of norm <= X, sorted by norm then by
// (a, b). Results are cached per field; the cache is read-mostly with an
// exclusive rebuild when a larger bound is requested.
std::vector<QuadInt> primes_up_to(const Field& F, std::uint64_t X);

// --- text cache file ---------------------------------------------------
// Header line:  # qprimes v1 n=<n> bound=<X>
// Body:         one line "a b norm" per prime, in the order above.

struct PrimeCacheFile {
  std::uint64_t bound = 0;
  std::vector<QuadInt> primes;
};

std::filesystem::path prime_cache_path(const std::filesystem::path& dir,
                                       const Field& F);

void write_prime_cache(const std::filesystem::path& file, const Field& F,
                       std::uint64_t bound, const std::vector<QuadInt>& primes);

// nullopt on missing file, header mismatch (version or field), or a
// malformed body; callers re-sieve in that case.
std::optional<PrimeCacheFile> read_prime_cache(const std::filesystem::path& file,
                                               const Field& F);

// File-backed variant: serves from dir when the cached bound suffices,
// otherwise sieves and rewrites the cache file.
std::vector<QuadInt> primes_up_to_cached(const Field& F, std::uint64_t X,
                                         const std::filesystem::path& dir);

}  // namespace qcubic
