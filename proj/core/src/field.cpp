#include "qcubic/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qcubic {

bool is_admissible_field(int n) {
  return std::find(kAdmissibleFields.begin(), kAdmissibleFields.end(), n) !=
         kAdmissibleFields.end();
}

long double Field::delta() const {
  return static_cast<long double>(delta_int) *
         sqrtl(static_cast<long double>(delta_rad));
}

Field make_field(int n) {
  if (!is_admissible_field(n)) {
    throw std::invalid_argument(
        "make_field: n = " + std::to_string(n) +
        " is not an imaginary quadratic field of class number 1");
  }
  Field f{};
  f.n = n;
  f.w = (n == -1) ? 4 : (n == -3) ? 6 : 2;
  // n = -1, -2 are 3, 2 mod 4; the other seven are 1 mod 4.
  const bool one_mod_four = ((n % 4) + 4) % 4 == 1;
  f.omega_kind = one_mod_four ? OmegaKind::HalfOnePlusSqrtN : OmegaKind::SqrtN;
  f.disc = one_mod_four ? n : 4 * n;
  if (one_mod_four) {
    f.delta_int = 1;
    f.delta_rad = -n;
  } else {
    f.delta_int = 2;
    f.delta_rad = -n;  // |disc| = 4|n|, so delta = 2 sqrt(|n|)
  }
  f.h = 1;
  f.regulator = 1;
  f.r = 0;
  f.s = 1;
  f.q = 0;
  return f;
}

}  // namespace qcubic
