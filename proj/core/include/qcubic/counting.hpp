#pragma once

#include <cstdint>
#include <vector>

#include "qcubic/field.hpp"
#include "qcubic/quadint.hpp"

namespace qcubic {

// All canonical elements with 1 <= norm <= C, sorted by norm then (a, b).
std::vector<QuadInt> canonical_elements_up_to(const Field& F, std::uint64_t C);

// All nonzero elements with norm <= C, same order.
std::vector<QuadInt> elements_up_to(const Field& F, std::uint64_t C);

// N(B): number of projective points of U(K) of height <= B, by depth-first
// enumeration of coprime 9-tuples over the torsor. Canonical representatives
// are enumerated coordinate-wise (one per unit orbit) and the count is
// multiplied by w^2: the full tuple set is w^9 canonical copies of the
// canonical set and the parameterization is w^7-to-1.
//
// Bounds above 1e8 are rejected; all norms and partial products then fit in
// 64 bits (asserted throughout).
std::uint64_t count_torsor9(const Field& F, long double B, int workers = 1);

// N(B) again, independently: enumerate canonical x0 of norm <= B, factor it,
// and for each ordered pair of divisors d1, d2 of x0^3 with d1 d2 | x0^3 put
// x3 = x0^3/(d1 d2); the w^2 unit twists (u1 d1, u2 d2) all pass or fail the
// height and primitivity conditions together. Each point of height <= B is
// hit exactly once via its primitive representative with canonical x0.
//
// Bounds above 2e6 are rejected (x0^3 norms must stay within 64 bits).
std::uint64_t count_divisor_oracle(const Field& F, long double B, int workers = 1);

// Toy-scale evaluation of the full Moebius-inverted counter: a signed sum
// over canonical divisor tuples indexed by the 27 non-edges of unconstrained
// lattice counts. Exponential in nature; only intended to cross-check the
// other two backends at B <= ~16.
std::uint64_t count_moebius_inversion_tiny(const Field& F, long double B);

}  // namespace qcubic
