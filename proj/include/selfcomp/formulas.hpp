#pragma once

// Closed product formulas: boxed plane partitions, self-complementary plane
// partitions, and the magnitude of their (-1)-enumeration.

#include <cstdint>

#include "box.hpp"
#include "numeric.hpp"

namespace selfcomp {

/// Number of plane partitions in an a x b x c box,
/// prod_{i=1}^{a} (c+i)_b / (i)_b.
inline BigInt macmahon_B(std::int64_t a, std::int64_t b, std::int64_t c) {
  require_valid({a, b, c});
  BigInt num = 1;
  BigInt den = 1;
  for (std::int64_t i = 1; i <= a; ++i) {
    num *= rising(c + i, b);
    den *= rising(i, b);
  }
  return num / den;
}

inline BigInt macmahon_B(const BoxDims& d) { return macmahon_B(d.a, d.b, d.c); }

/// Number of self-complementary plane partitions in the box.
inline BigInt stanley_SC(const BoxDims& dims) {
  const NormalizedBox n = normalize(dims);
  const auto [a, b, c] = n.dims;
  switch (n.parity) {
    case ParityCase::EEE: {
      const BigInt half = macmahon_B(a / 2, b / 2, c / 2);
      return half * half;
    }
    case ParityCase::EOO:
      return macmahon_B(a / 2, (b + 1) / 2, (c - 1) / 2) * macmahon_B(a / 2, (b - 1) / 2, (c + 1) / 2);
    case ParityCase::OEE:
      return macmahon_B((a + 1) / 2, b / 2, c / 2) * macmahon_B((a - 1) / 2, b / 2, c / 2);
    case ParityCase::OOO:
      return 0;
  }
  return 0;
}

inline BigInt stanley_SC(std::int64_t a, std::int64_t b, std::int64_t c) { return stanley_SC(BoxDims{a, b, c}); }

struct ClosedForm {
  BigInt magnitude;
  /// Set exactly when the box falls in one of the vanishing residue classes.
  bool provably_zero = false;
};

/// True for a = 2 (mod 4) with b != c (mod 4), or a odd with b = c = 2 (mod 4),
/// read on the normalized box; also for all-odd boxes.
inline bool in_zero_class(const NormalizedBox& n) {
  const auto [a, b, c] = n.dims;
  switch (n.parity) {
    case ParityCase::EOO: return a % 4 == 2 && b % 4 != c % 4;
    case ParityCase::OEE: return b % 4 == 2 && c % 4 == 2;
    case ParityCase::OOO: return true;
    case ParityCase::EEE: return false;
  }
  return false;
}

/// Magnitude of the (-1)-enumeration of self-complementary plane partitions.
/// The sign is not part of the closed form; see the cross-method verifier.
inline ClosedForm minus_one_closed(const BoxDims& dims) {
  const NormalizedBox n = normalize(dims);
  const auto [a, b, c] = n.dims;
  ClosedForm out;
  switch (n.parity) {
    case ParityCase::EEE:
      out.magnitude = macmahon_B(a / 2, b / 2, c / 2);
      break;
    case ParityCase::EOO:
      out.magnitude = stanley_SC(a / 2, (b + 1) / 2, (c - 1) / 2) * stanley_SC(a / 2, (b - 1) / 2, (c + 1) / 2);
      break;
    case ParityCase::OEE:
      out.magnitude = stanley_SC((a + 1) / 2, b / 2, c / 2) * stanley_SC((a - 1) / 2, b / 2, c / 2);
      break;
    case ParityCase::OOO:
      out.magnitude = 0;
      break;
  }
  out.provably_zero = in_zero_class(n);
  return out;
}

inline ClosedForm minus_one_closed(std::int64_t a, std::int64_t b, std::int64_t c) {
  return minus_one_closed(BoxDims{a, b, c});
}

}  // namespace selfcomp
