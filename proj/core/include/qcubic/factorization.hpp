#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qcubic/field.hpp"
#include "qcubic/quadint.hpp"

namespace qcubic {

// unit * prod(prime^exp) = the factored element, with every prime canonical
// and the primes pairwise non-associate, sorted by norm then (a, b).
struct Factorization {
  QuadInt unit = kOne;
  std::vector<std::pair<QuadInt, int>> factors;
};

// Factors norm(x) over Z by trial division and distributes each rational
// prime's exponent between the (at most two) canonical primes above it by
// exact division of x. Throws on x = 0. Intended for norm(x) up to ~1e12;
// larger norms would need a faster rational factorizer.
Factorization factor(const Field& F, const QuadInt& x);

// All canonical divisors, one per divisor ideal, sorted by norm then (a, b).
std::vector<QuadInt> divisors(const Field& F, const QuadInt& x);

// prod(e_i + 1), without materializing the list.
std::uint64_t divisor_count(const Field& F, const QuadInt& x);

// 0 if x has a repeated prime factor, else (-1)^(number of prime factors).
int moebius(const Field& F, const QuadInt& x);

}  // namespace qcubic
