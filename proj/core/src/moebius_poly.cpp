#include "qcubic/moebius_poly.hpp"

#include <array>
#include <bit>
#include <cstdint>

#include "qcubic/torsor.hpp"

namespace qcubic {

Poly poly_mul(const Poly& p, const Poly& q) {
  Poly r(p.size() + q.size() - 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

Poly poly_pow(const Poly& p, int k) {
  Poly r{1};
  for (int i = 0; i < k; ++i) r = poly_mul(r, p);
  return r;
}

Poly moebius_polynomial_reduced() {
  const Poly one_minus_x{1, -1};
  std::array<Poly, kNumVertices + 1> pw;
  for (int k = 0; k <= kNumVertices; ++k) pw[k] = poly_pow(one_minus_x, k);

  Poly acc(kNumVertices + 1, 0);
  for (unsigned mask = 0; mask < (1u << kNumVertices); ++mask) {
    // the inner sum vanishes unless every pair in the support is a cycle edge
    bool clique = true;
    for (int u = 0; u < kNumVertices && clique; ++u) {
      if (!(mask >> u & 1)) continue;
      for (int v = u + 1; v < kNumVertices && clique; ++v)
        if ((mask >> v & 1) && !is_edge(u, v)) clique = false;
    }
    if (!clique) continue;
    const int s = std::popcount(mask);
    const Poly& term = pw[kNumVertices - s];  // (1-x)^(9-s) * x^s
    for (std::size_t i = 0; i < term.size(); ++i) acc[i + s] += term[i];
  }
  return acc;
}

Poly moebius_polynomial_direct() {
  const auto& pairs = non_edges();
  std::array<std::uint16_t, 27> vmask{};
  for (std::size_t i = 0; i < 27; ++i)
    vmask[i] = static_cast<std::uint16_t>((1u << pairs[i].first) |
                                          (1u << pairs[i].second));

  // Split the 27 indicator bits into 13 + 14 and tabulate (vertex mask,
  // sign) for each half; 2^27 combinations then reduce to a table join.
  constexpr int kLo = 13, kHi = 14;
  struct Entry {
    std::uint16_t cover;
    std::int8_t sign;
  };
  auto build = [&](int offset, int bits) {
    std::vector<Entry> t(std::size_t{1} << bits);
    t[0] = {0, 1};
    for (std::uint32_t m = 1; m < t.size(); ++m) {
      const int low = std::countr_zero(m);
      const Entry& prev = t[m & (m - 1)];
      t[m] = {static_cast<std::uint16_t>(prev.cover | vmask[offset + low]),
              static_cast<std::int8_t>(-prev.sign)};
    }
    return t;
  };
  const auto lo = build(0, kLo);
  const auto hi = build(kLo, kHi);

  std::array<long long, kNumVertices + 1> coeff{};
  for (const Entry& h : hi)
    for (const Entry& l : lo)
      coeff[std::popcount(static_cast<unsigned>(h.cover | l.cover))] +=
          h.sign * l.sign;

  return Poly(coeff.begin(), coeff.end());
}

}  // namespace qcubic
