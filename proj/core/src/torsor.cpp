#include "qcubic/torsor.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcubic {

bool is_edge(int u, int v) {
  for (const auto& [a, b] : kCycleEdges)
    if ((a == u && b == v) || (a == v && b == u)) return true;
  return false;
}

const std::array<std::pair<int, int>, 27>& non_edges() {
  static const std::array<std::pair<int, int>, 27> table = [] {
    std::array<std::pair<int, int>, 27> t{};
    std::size_t k = 0;
    for (int u = 0; u < kNumVertices; ++u)
      for (int v = u + 1; v < kNumVertices; ++v)
        if (!is_edge(u, v)) t.at(k++) = {u, v};
    if (k != 27) throw std::logic_error("non_edges: wrong pair count");
    return t;
  }();
  return table;
}

namespace {

void require_nonzero(std::initializer_list<QuadInt> xs, const char* who) {
  for (const QuadInt& x : xs)
    if (is_zero(x)) throw std::invalid_argument(std::string(who) + ": zero entry");
}

}  // namespace

std::array<QuadInt, 4> psi0(const Field& F, const QuadInt& y23,
                            const QuadInt& y31, const QuadInt& y12) {
  require_nonzero({y23, y31, y12}, "psi0");
  // x0 = y12 y31 y23,  x_j = y_{j,k} * y_{l,j}^2 for cyclic (j,k,l)
  return {
      mul(F, mul(F, y12, y31), y23),
      mul(F, y12, mul(F, y31, y31)),
      mul(F, y23, mul(F, y12, y12)),
      mul(F, y31, mul(F, y23, y23)),
  };
}

std::array<QuadInt, 4> psi1(const Field& F, const std::array<QuadInt, 6>& y) {
  const QuadInt &y12 = y[0], &y21 = y[1], &y13 = y[2], &y31 = y[3], &y23 = y[4],
                &y32 = y[5];
  require_nonzero({y12, y21, y13, y31, y23, y32}, "psi1");
  auto sq = [&](const QuadInt& z) { return mul(F, z, z); };
  return {
      mul(F, mul(F, mul(F, y12, y21), mul(F, y13, y31)), mul(F, y23, y32)),
      mul(F, mul(F, y12, y13), mul(F, sq(y21), sq(y31))),
      mul(F, mul(F, y23, y21), mul(F, sq(y32), sq(y12))),
      mul(F, mul(F, y31, y32), mul(F, sq(y13), sq(y23))),
  };
}

std::array<QuadInt, 4> psi2(const Field& F, const TorsorTuple& t) {
  for (const QuadInt& z : t.y)
    if (is_zero(z)) throw std::invalid_argument("psi2: zero entry");
  const auto& y = t.y;
  auto sq = [&](const QuadInt& z) { return mul(F, z, z); };
  const QuadInt all6 = mul(
      F, mul(F, mul(F, y[V12], y[V21]), mul(F, y[V13], y[V31])),
      mul(F, y[V23], y[V32]));
  auto coord = [&](int j, int yjk, int yjl, int ykj, int ylj) {
    const QuadInt cube = mul(F, mul(F, y[j], y[j]), y[j]);
    return mul(F, mul(F, cube, mul(F, y[yjk], y[yjl])),
               mul(F, sq(y[ykj]), sq(y[ylj])));
  };
  return {
      mul(F, mul(F, mul(F, y[V1], y[V2]), y[V3]), all6),
      coord(V1, V12, V13, V21, V31),
      coord(V2, V23, V21, V32, V12),
      coord(V3, V31, V32, V13, V23),
  };
}

std::uint64_t height(const Field& F, const std::array<QuadInt, 4>& x) {
  const QuadInt g = gcd_all(F, std::span<const QuadInt>(x.data(), x.size()));
  std::uint64_t h = 0;
  for (const QuadInt& xi : x) {
    if (is_zero(xi)) continue;
    const auto q = div_exact(F, xi, g);
    if (!q) throw std::logic_error("height: gcd does not divide a coordinate");
    h = std::max(h, norm(F, *q));
  }
  return h;
}

bool is_coprime(const Field& F, const TorsorTuple& t) {
  for (const auto& [u, v] : non_edges())
    if (!coprime(F, t.y[u], t.y[v])) return false;
  return true;
}

SurfacePoint make_surface_point(const Field& F, std::array<QuadInt, 4> x) {
  for (const QuadInt& xi : x)
    if (is_zero(xi))
      throw std::invalid_argument("make_surface_point: coordinate is zero");
  const QuadInt lhs = mul(F, mul(F, x[0], x[0]), x[0]);
  const QuadInt rhs = mul(F, mul(F, x[1], x[2]), x[3]);
  if (!(lhs == rhs))
    throw std::invalid_argument("make_surface_point: x0^3 != x1 x2 x3");
  const QuadInt g = gcd_all(F, std::span<const QuadInt>(x.data(), x.size()));
  for (QuadInt& xi : x) xi = *div_exact(F, xi, g);
  const QuadInt u = canonical_associate(F, x[0]).second;
  for (QuadInt& xi : x) xi = mul(F, u, xi);
  return SurfacePoint{x};
}

}  // namespace qcubic
