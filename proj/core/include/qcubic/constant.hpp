#pragma once

#include <cstdint>
#include <vector>

#include "qcubic/field.hpp"
#include "qcubic/rational.hpp"

namespace qcubic {

// One Euler factor (1-q)^7 (1 + 7q + q^2) at q = 1/norm(p).
// Throws unless 0 < q <= 1/2 (the smallest prime norm is 2).
long double euler_factor(long double q);

struct EulerProduct {
  std::uint64_t bound = 0;     // norm bound of the partial product
  long double partial = 1.0L;  // product over prime norms <= bound
  long double tail_bound = 0;  // rigorous bound on |full/partial - 1|
};

// Partial Euler product over one canonical prime per ideal of norm <= X.
// The tail bound comes from |log f(q)| <= 28 q^2 on (0, 1/2], doubled for
// slack, and at most two prime ideals over each rational prime.
EulerProduct euler_product(const Field& F, std::uint64_t X);

// Lattice points of the k-th dilation of the height polytope: t in Z>=0^6,
// variables (t12, t21, t13, t31, t23, t32), subject to
//   t_jk + t_jl + 2 t_kj + 2 t_lj <= k   for cyclic (j,k,l).
std::uint64_t polytope_lattice_count(int k);

// Volume of the polytope, computed by exact interpolation of the Ehrhart
// polynomial on even dilations k = 2, 4, ..., 14 (even k avoids the other
// quasi-polynomial branch introduced by the coefficient-2 constraints) and
// validated against k = 16. Equals 1/2880. Throws std::logic_error if the
// counts fail to be polynomial of degree 6.
Rational polytope_volume();

// 1/25920, assembled as (1/120) / (3!)^3 and checked against 1/(36 * 6!).
Rational alpha_value();

enum class PlaceKind { Real, Complex };

// Local density at an archimedean place: the integral over (K_v^x)^2 of
//   1 / (max{1, |y1|_v, |y2|_v, |(y1 y2)^-1|_v} * |y1 y2|_v),
// with the complex measure normalized as twice Lebesgue on R^2. Evaluates
// to 36 (real) resp. 36 pi^2 (complex), here computed by adaptive
// quadrature after reduction to exponential coordinates, to relative
// accuracy ~1e-6 (well inside the 1e-4 target).
long double archimedean_density(PlaceKind kind);

// The integrand above as a function of the two norms |y1|_v, |y2|_v.
long double density_integrand(long double s1, long double s2);

// The cohomological factor of the prediction is 1 (the surface is split,
// the Galois action on the Picard lattice trivial), the regulator is 1 and
// the finite-place convergence factors (1 - 1/|p|)^-7 are already folded
// into the Euler factor, so everything beyond the fields below is absorbed
// into closed_form_prefactor; the archimedean density 36 pi^2 enters the
// same way and is exposed separately through archimedean_density().
struct ConstantBreakdown {
  int field_n = 0;
  std::uint64_t euler_bound = 0;
  Rational alpha;                        // 1/25920
  long double euler_partial = 0;
  long double euler_tail_bound = 0;
  long double closed_form_prefactor = 0; // 2^7 pi^9 / (6! w^7 delta^9)
  long double assembled_general = 0;     // 9^q/(4*6!) * ((2^r (2pi)^s)/delta)^9 * (hR/w)^7 * euler
  long double c_value = 0;               // prefactor * euler_partial
};

// Fills the breakdown and checks the closed form against the general
// assembly (an exact identity, 2^9/4 = 2^7) to 1e-12 relative.
ConstantBreakdown leading_constant(const Field& F, std::uint64_t euler_bound);

// Exact number of nonzero lattice points of O with norm <= C.
std::uint64_t circle_count(const Field& F, long double C);

// Sum of norm(x)^a over nonzero x with norm(x) <= B, for -1 <= a <= 0,
// computed exactly from the norm histogram in one pass.
long double power_sum(const Field& F, std::uint64_t B, long double a);

}  // namespace qcubic
