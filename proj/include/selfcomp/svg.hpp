#pragma once

// Lozenge tiling of the a,b,c,a,b,c hexagon as the (1,1,1)-projection of a
// plane partition, written as SVG 1.1.
//
// Geometry is kept on an integer lattice: the box point (X, Y, Z) maps to
// (u, v) = (Z - Y + b, 2X - Y - Z + b + c). A group transform scales u by
// 20 * sqrt(3) / 2 and v by 10, giving rhombi with 20px edges and the
// a-sides vertical.

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "plane_partition.hpp"

namespace selfcomp {

enum class RhombusKind { Top, FrontI, FrontJ };

struct Rhombus {
  RhombusKind kind;
  std::array<std::array<std::int64_t, 2>, 4> corners;  // lattice (u, v)
};

struct SvgOptions {
  std::optional<int> sign;            // (-1)-weight, recorded as metadata
  std::optional<std::int64_t> index;  // position in the enumeration
};

/// The a*b + b*c + a*c visible unit faces, in a fixed order.
inline std::vector<Rhombus> tiling_rhombi(const HeightMatrix& p) {
  const auto [a, b, c] = p.dims();
  const auto project = [&](std::int64_t x, std::int64_t y, std::int64_t z) -> std::array<std::int64_t, 2> {
    return {z - y + b, 2 * x - y - z + b + c};
  };
  std::vector<Rhombus> out;
  out.reserve(static_cast<std::size_t>(a * b + b * c + a * c));
  for (std::int64_t i = 1; i <= a; ++i) {
    for (std::int64_t j = 1; j <= b; ++j) {
      const std::int64_t h = p(i - 1, j - 1);
      out.push_back({RhombusKind::Top,
                     {project(i - 1, j - 1, h), project(i, j - 1, h), project(i, j, h), project(i - 1, j, h)}});
    }
  }
  for (std::int64_t j = 1; j <= b; ++j) {
    for (std::int64_t k = 1; k <= c; ++k) {
      std::int64_t depth = 0;
      while (depth < a && p(depth, j - 1) >= k) ++depth;
      out.push_back({RhombusKind::FrontI, {project(depth, j - 1, k - 1), project(depth, j, k - 1),
                                           project(depth, j, k), project(depth, j - 1, k)}});
    }
  }
  for (std::int64_t i = 1; i <= a; ++i) {
    for (std::int64_t k = 1; k <= c; ++k) {
      std::int64_t depth = 0;
      while (depth < b && p(i - 1, depth) >= k) ++depth;
      out.push_back({RhombusKind::FrontJ, {project(i - 1, depth, k - 1), project(i, depth, k - 1),
                                           project(i, depth, k), project(i - 1, depth, k)}});
    }
  }
  return out;
}

inline const char* rhombus_class(RhombusKind k) {
  switch (k) {
    case RhombusKind::Top: return "top";
    case RhombusKind::FrontI: return "side-a";
    case RhombusKind::FrontJ: return "side-b";
  }
  return "";
}

/// Deterministic SVG document for the tiling of `p`.
inline std::string render_svg(const HeightMatrix& p, const SvgOptions& opts = {}) {
  constexpr std::int64_t margin = 10;
  const auto [a, b, c] = p.dims();
  const auto rhombi = tiling_rhombi(p);
  std::array<std::int64_t, 3> kinds{};
  for (const auto& r : rhombi) ++kinds[static_cast<std::size_t>(r.kind)];

  // 17.320508... px per u unit, rounded up to whole pixels for the canvas
  const std::int64_t width = ((b + c) * 17320509 + 999999) / 1000000 + 2 * margin;
  const std::int64_t height = (2 * a + b + c) * 10 + 2 * margin;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\"";
  os << " data-a=\"" << a << "\" data-b=\"" << b << "\" data-c=\"" << c << "\" data-cubes=\"" << p.cube_count()
     << "\" data-rhombi=\"" << rhombi.size() << "\" data-rhombi-top=\"" << kinds[0] << "\" data-rhombi-side-a=\""
     << kinds[1] << "\" data-rhombi-side-b=\"" << kinds[2] << "\"";
  if (opts.index) os << " data-index=\"" << *opts.index << "\"";
  if (opts.sign) os << " data-sign=\"" << (*opts.sign > 0 ? "+1" : "-1") << "\"";
  os << ">\n";
  os << "<desc>plane partition " << p << " in a " << a << "x" << b << "x" << c << " box</desc>\n";
  os << "<style>.top{fill:#f2d479}.side-a{fill:#7aa6d6}.side-b{fill:#d67a7a}"
        "polygon{stroke:#222;stroke-width:1;vector-effect:non-scaling-stroke;stroke-linejoin:round}</style>\n";
  os << "<g transform=\"translate(" << margin << ' ' << margin << ") scale(17.320508075688775 10)\">\n";
  for (const auto& r : rhombi) {
    os << "<polygon class=\"" << rhombus_class(r.kind) << "\" points=\"";
    for (std::size_t k = 0; k < 4; ++k) os << (k ? " " : "") << r.corners[k][0] << ',' << r.corners[k][1];
    os << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace selfcomp
