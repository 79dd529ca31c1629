#pragma once

#include <array>
#include <cstdint>

namespace qcubic {

// Integral basis convention for O = Z[omega].
enum class OmegaKind : std::uint8_t {
  SqrtN,             // omega = sqrt(n)           (n = -1, -2)
  HalfOnePlusSqrtN,  // omega = (1 + sqrt(n))/2   (n = -3, -7, -11, -19, -43, -67, -163)
};

// One of the nine imaginary quadratic fields K = Q(sqrt(n)) with class
// number 1, together with all constants derived from n.
struct Field {
  int n;                   // squarefree negative radicand
  int w;                   // number of roots of unity in O
  int disc;                // field discriminant: 4n if n = 2,3 mod 4, else n
  std::int64_t delta_int;  // delta = delta_int * sqrt(delta_rad); delta^2 = |disc|
  std::int64_t delta_rad;
  OmegaKind omega_kind;
  int h;          // class number, always 1 here
  int regulator;  // unit group is finite, so 1
  int r;          // real embeddings: 0
  int s;          // pairs of complex embeddings: 1
  int q;          // r + s - 1 = 0

  std::uint64_t delta_sq() const {
    return static_cast<std::uint64_t>(-static_cast<std::int64_t>(disc));
  }
  long double delta() const;

  // omega satisfies omega^2 = omega_lin()*omega + omega_const()
  std::int64_t omega_const() const {
    return omega_kind == OmegaKind::SqrtN ? n : (n - 1) / 4;
  }
  std::int64_t omega_lin() const { return omega_kind == OmegaKind::SqrtN ? 0 : 1; }

  bool operator==(const Field&) const = default;
};

inline constexpr std::array<int, 9> kAdmissibleFields = {-1, -2, -3,  -7,  -11,
                                                         -19, -43, -67, -163};

bool is_admissible_field(int n);

// Throws std::invalid_argument unless n is one of the nine admissible values.
Field make_field(int n);

}  // namespace qcubic
