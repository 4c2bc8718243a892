#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace selfcomp {

/// Side lengths of the bounding box, in the caller's order.
struct BoxDims {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  constexpr std::int64_t operator[](std::size_t k) const { return k == 0 ? a : (k == 1 ? b : c); }
  constexpr std::int64_t volume() const { return a * b * c; }
  friend constexpr bool operator==(const BoxDims&, const BoxDims&) = default;
  friend constexpr auto operator<=>(const BoxDims&, const BoxDims&) = default;
};

inline void require_valid(const BoxDims& d) {
  if (d.a < 0 || d.b < 0 || d.c < 0) throw std::invalid_argument("box side lengths must be nonnegative");
}

/// Parity class after moving the distinguished side to position a.
///   EEE  all even
///   EOO  a even, b and c odd
///   OEE  a odd, b and c even
///   OOO  all odd (no self-complementary plane partitions)
enum class ParityCase { EEE, EOO, OEE, OOO };

inline std::string_view to_string(ParityCase p) {
  switch (p) {
    case ParityCase::EEE: return "EEE";
    case ParityCase::EOO: return "EOO";
    case ParityCase::OEE: return "OEE";
    case ParityCase::OOO: return "OOO";
  }
  return "?";
}

inline ParityCase parse_parity(std::string_view s) {
  if (s == "EEE") return ParityCase::EEE;
  if (s == "EOO") return ParityCase::EOO;
  if (s == "OEE") return ParityCase::OEE;
  if (s == "OOO") return ParityCase::OOO;
  throw std::invalid_argument("unknown parity class '" + std::string(s) + "'");
}

/// Box with the distinguished side first and b <= c.
///
/// `perm[k]` is the position in the caller's triple that normalized side k
/// came from, so `input[perm[k]] == normalized[k]` for k = 0, 1, 2.
struct NormalizedBox {
  BoxDims dims;
  ParityCase parity = ParityCase::EEE;
  std::array<int, 3> perm{0, 1, 2};

  std::int64_t a() const { return dims.a; }
  std::int64_t b() const { return dims.b; }
  std::int64_t c() const { return dims.c; }
  /// (c - b) / 2; meaningful whenever the box is not all odd.
  std::int64_t x() const { return (dims.c - dims.b) / 2; }

  BoxDims original() const {
    std::array<std::int64_t, 3> out{};
    for (std::size_t k = 0; k < 3; ++k) out[static_cast<std::size_t>(perm[k])] = dims[k];
    return {out[0], out[1], out[2]};
  }
};

inline NormalizedBox normalize(const BoxDims& d) {
  require_valid(d);
  std::array<int, 3> idx{0, 1, 2};
  const auto by_value = [&](int l, int r) { return d[static_cast<std::size_t>(l)] < d[static_cast<std::size_t>(r)]; };
  std::stable_sort(idx.begin(), idx.end(), by_value);

  int evens = 0;
  for (std::size_t k = 0; k < 3; ++k) evens += d[k] % 2 == 0 ? 1 : 0;

  NormalizedBox out;
  if (evens == 3 || evens == 0) {
    out.parity = evens == 3 ? ParityCase::EEE : ParityCase::OOO;
    out.perm = idx;
  } else {
    const bool want_even = evens == 1;
    out.parity = want_even ? ParityCase::EOO : ParityCase::OEE;
    // distinguished side first, the remaining two keep ascending order
    const auto it = std::find_if(idx.begin(), idx.end(),
                                 [&](int k) { return (d[static_cast<std::size_t>(k)] % 2 == 0) == want_even; });
    std::rotate(idx.begin(), it, it + 1);
    out.perm = idx;
  }
  out.dims = {d[static_cast<std::size_t>(out.perm[0])], d[static_cast<std::size_t>(out.perm[1])],
              d[static_cast<std::size_t>(out.perm[2])]};
  return out;
}

}  // namespace selfcomp
