#pragma once

#include <vector>

namespace qcubic {

// Integer polynomial, coeffs[i] = coefficient of x^i.
using Poly = std::vector<long long>;

Poly poly_mul(const Poly& p, const Poly& q);
Poly poly_pow(const Poly& p, int k);

// The local Euler-factor polynomial A(x) of the coprimality system, two
// independent ways.
//
// Reduced route: after Moebius-inverting vertex by vertex, only indicator
// vectors supported on a clique of the cycle graph survive (empty set,
// single vertices, edges); each contributes (1-x)^(9-s) x^s.
Poly moebius_polynomial_reduced();

// Direct route: brute-force sum over all 2^27 indicator vectors on the
// non-edges, with sign (-1)^(number of chosen pairs) and exponent equal to
// the number of vertices covered.
Poly moebius_polynomial_direct();

}  // namespace qcubic
