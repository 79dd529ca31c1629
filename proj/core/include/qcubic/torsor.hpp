#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "qcubic/field.hpp"
#include "qcubic/quadint.hpp"

namespace qcubic {

// Vertex labels of the coprimality graph, in tuple order
// (y1, y2, y3, y12, y21, y13, y31, y23, y32).
enum Vertex : int {
  V1 = 0,
  V2 = 1,
  V3 = 2,
  V12 = 3,
  V21 = 4,
  V13 = 5,
  V31 = 6,
  V23 = 7,
  V32 = 8,
};

inline constexpr int kNumVertices = 9;

// The 9-cycle (1)-(2,1)-(1,2)-(2)-(3,2)-(2,3)-(3)-(1,3)-(3,1)-(1).
inline constexpr std::array<std::pair<int, int>, 9> kCycleEdges{{
    {V1, V21},
    {V21, V12},
    {V12, V2},
    {V2, V32},
    {V32, V23},
    {V23, V3},
    {V3, V13},
    {V13, V31},
    {V31, V1},
}};

bool is_edge(int u, int v);

// The 27 unordered vertex pairs that are NOT cycle edges: exactly the pairs
// required to be coprime. Lexicographic (u, v) with u < v.
const std::array<std::pair<int, int>, 27>& non_edges();

struct TorsorTuple {
  std::array<QuadInt, kNumVertices> y{};
};

// The three parameterizing maps; all entries must be nonzero. Coordinate 0
// cubed always equals the product of coordinates 1..3.
std::array<QuadInt, 4> psi0(const Field& F, const QuadInt& y23,
                            const QuadInt& y31, const QuadInt& y12);
// Six-variable map; argument order (y12, y21, y13, y31, y23, y32).
std::array<QuadInt, 4> psi1(const Field& F, const std::array<QuadInt, 6>& y);
std::array<QuadInt, 4> psi2(const Field& F, const TorsorTuple& t);

// Anticanonical height of a projective point given by integral coordinates:
// divide by the gcd (a primitive representative exists since h = 1) and take
// the maximal coordinate norm. On primitive tuples the finite places all
// contribute 1, so this is the full product over places.
std::uint64_t height(const Field& F, const std::array<QuadInt, 4>& x);

// True iff gcd(y_u, y_v) is a unit for every non-edge {u, v}; fails fast.
bool is_coprime(const Field& F, const TorsorTuple& t);

// Point of U with x0^3 = x1 x2 x3 and all coordinates nonzero, stored as the
// unique primitive representative with canonical x0.
struct SurfacePoint {
  std::array<QuadInt, 4> x{};
};

SurfacePoint make_surface_point(const Field& F, std::array<QuadInt, 4> x);

}  // namespace qcubic
