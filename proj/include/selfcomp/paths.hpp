#pragma once

// Lattice path model for half of a centrally symmetric lozenge tiling.
//
// For a normalized box (a, b, c) with x = (c - b) / 2, path i starts at
// A_i = (i-1, b+i-1) and ends at one of E_j = (x+j-1, j-1), j = 1..a+b,
// using unit East and South steps. The chosen endpoints form a set closed
// under j <-> a+b+1-j. A path is weighted by (-1)^area, area being the sum
// of the heights of its East steps above the x-axis.
//
// When a + b is odd the area weight alone flips sign under every orbit move.
// When a + b is even (all sides even) a border move shifts the total area by
// the even number a + b, so each endpoint E_j with j <= (a+b)/2 carries an
// extra factor (-1)^j; see endpoint_sign().

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "box.hpp"
#include "budget.hpp"
#include "numeric.hpp"
#include "plane_partition.hpp"

namespace selfcomp {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend constexpr bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

enum class Step : char { East = 'E', South = 'S' };

struct MonotonePath {
  LatticePoint start;
  std::vector<Step> steps;

  LatticePoint end() const {
    LatticePoint p = start;
    for (Step s : steps) (s == Step::East ? p.x += 1 : p.y -= 1);
    return p;
  }

  std::vector<LatticePoint> vertices() const {
    std::vector<LatticePoint> out{start};
    LatticePoint p = start;
    for (Step s : steps) {
      (s == Step::East ? p.x += 1 : p.y -= 1);
      out.push_back(p);
    }
    return out;
  }

  /// Sum over East steps of the height at which they run.
  std::int64_t area() const {
    std::int64_t y = start.y, total = 0;
    for (Step s : steps) {
      if (s == Step::East)
        total += y;
      else
        --y;
    }
    return total;
  }
};

inline int parity_sign(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

/// A_i = (i-1, b+i-1), i = 1..a.
inline std::vector<LatticePoint> start_points(std::int64_t a, std::int64_t b) {
  std::vector<LatticePoint> pts;
  for (std::int64_t i = 1; i <= a; ++i) pts.push_back({i - 1, b + i - 1});
  return pts;
}

/// E_j = (x+j-1, j-1), j = 1..a+b.
inline std::vector<LatticePoint> end_points(std::int64_t a, std::int64_t b, std::int64_t x) {
  std::vector<LatticePoint> pts;
  for (std::int64_t j = 1; j <= a + b; ++j) pts.push_back({x + j - 1, j - 1});
  return pts;
}

/// Calls `visit(path)` on every East/South path from `from` to `to`.
template <typename Visitor>
void for_each_path(LatticePoint from, LatticePoint to, Visitor&& visit) {
  const std::int64_t east = to.x - from.x;
  const std::int64_t south = from.y - to.y;
  if (east < 0 || south < 0) return;
  MonotonePath path{from, {}};
  const auto rec = [&](const auto& self, std::int64_t e, std::int64_t s) -> void {
    if (e == 0 && s == 0) {
      visit(static_cast<const MonotonePath&>(path));
      return;
    }
    if (e > 0) {
      path.steps.push_back(Step::East);
      self(self, e - 1, s);
      path.steps.pop_back();
    }
    if (s > 0) {
      path.steps.push_back(Step::South);
      self(self, e, s - 1);
      path.steps.pop_back();
    }
  };
  rec(rec, east, south);
}

/// Brute-force sum of (-1)^area over all paths from `from` to `to`.
inline BigInt single_path_signed_count(LatticePoint from, LatticePoint to) {
  BigInt total = 0;
  for_each_path(from, to, [&](const MonotonePath& p) { total += parity_sign(p.area()); });
  return total;
}

/// Closed form of the single-path count from A_i to E_j:
/// (-1)^{(x+j-i)(j-1)} [b+x choose b+i-j]_{-1}. Indices are 1-based.
inline BigInt t_entry(std::int64_t i, std::int64_t j, std::int64_t /*a*/, std::int64_t b, std::int64_t x) {
  return parity_sign((x + j - i) * (j - 1)) * qbin_neg1(b + x, b + i - j);
}

/// Extra endpoint factor; nontrivial only when a + b is even.
inline int endpoint_sign(std::int64_t j, std::int64_t a, std::int64_t b) {
  if ((a + b) % 2 != 0) return 1;
  return j <= (a + b) / 2 ? parity_sign(j) : 1;
}

inline void require_path_model(const NormalizedBox& nb) {
  if (nb.parity == ParityCase::OOO) throw std::domain_error("path model needs a box with an even side");
}

/// Sorted 1-based endpoint index sets K of size a that are closed under
/// j <-> a+b+1-j. When a + b is odd the middle index is in K iff a is odd.
inline std::vector<std::vector<std::int64_t>> symmetric_selections(std::int64_t a, std::int64_t b) {
  std::vector<std::vector<std::int64_t>> out;
  const std::int64_t total = a + b;
  const std::int64_t half = total / 2;
  const bool middle = total % 2 == 1 && a % 2 == 1;
  if (a % 2 == 1 && total % 2 == 0) return out;
  const std::int64_t pairs = a / 2;
  std::vector<std::int64_t> low;
  const auto rec = [&](const auto& self, std::int64_t next) -> void {
    if (static_cast<std::int64_t>(low.size()) == pairs) {
      std::vector<std::int64_t> k = low;
      if (middle) k.push_back((total + 1) / 2);
      for (auto it = low.rbegin(); it != low.rend(); ++it) k.push_back(total + 1 - *it);
      out.push_back(std::move(k));
      return;
    }
    const std::int64_t last = half - (pairs - static_cast<std::int64_t>(low.size())) + 1;
    for (std::int64_t j = next; j <= last; ++j) {
      low.push_back(j);
      self(self, j + 1);
      low.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// Endpoint index j of a path ending on the E-line, or 0 if it does not.
inline std::int64_t endpoint_index(LatticePoint e, std::int64_t x) {
  const std::int64_t j = e.y + 1;
  return e.x == x + j - 1 ? j : 0;
}

/// (-1)-weight of a path family: product of the area signs and the
/// endpoint factors.
inline int family_weight(const std::vector<MonotonePath>& family, std::int64_t a, std::int64_t b, std::int64_t x) {
  int w = 1;
  for (const auto& p : family) {
    w *= parity_sign(p.area());
    const std::int64_t j = endpoint_index(p.end(), x);
    if (j == 0) throw std::invalid_argument("path does not end on the E-line");
    w *= endpoint_sign(j, a, b);
  }
  return w;
}

inline bool is_nonintersecting(const std::vector<MonotonePath>& family) {
  std::vector<LatticePoint> seen;
  for (const auto& p : family) {
    for (const auto& v : p.vertices()) seen.push_back(v);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

/// Half-tiling path family of a self-complementary partition given in the
/// normalized box. Row r of the height matrix is read as a path from
/// A_{r+1}: each unit drop in height is an East step, each column boundary a
/// South step; the first b + x steps are kept.
inline std::vector<MonotonePath> family_from_partition(const NormalizedBox& nb, const HeightMatrix& p) {
  require_path_model(nb);
  if (!(p.dims() == nb.dims)) throw std::invalid_argument("partition is not in the normalized box");
  const auto [a, b, c] = nb.dims;
  const std::int64_t half = b + nb.x();
  const auto starts = start_points(a, b);
  std::vector<MonotonePath> family;
  for (std::int64_t r = 0; r < a; ++r) {
    MonotonePath path{starts[static_cast<std::size_t>(r)], {}};
    std::int64_t level = c;
    for (std::int64_t s = 0; s <= b; ++s) {
      const std::int64_t next = s < b ? p(r, s) : 0;
      for (std::int64_t d = level; d > next; --d) path.steps.push_back(Step::East);
      if (s < b) path.steps.push_back(Step::South);
      level = next;
    }
    path.steps.resize(static_cast<std::size_t>(half));
    family.push_back(std::move(path));
  }
  return family;
}

/// Weight of the half-full reference partition's path family.
inline int reference_family_weight(const NormalizedBox& nb) {
  const auto family = family_from_partition(nb, reference_pp(nb.dims));
  return family_weight(family, nb.a(), nb.b(), nb.x());
}

/// Sign that makes the reference partition weigh +1:
/// (-1)^{a(a-2)/8} for a even and b, c odd, (-1)^{(a+b-1)c/4} for a odd and
/// b, c even. All-even boxes use the weight of the reference family.
inline int global_sign(const NormalizedBox& nb) {
  require_path_model(nb);
  const auto [a, b, c] = nb.dims;
  switch (nb.parity) {
    case ParityCase::EOO: return parity_sign(a * (a - 2) / 8);
    case ParityCase::OEE: return parity_sign((a + b - 1) * c / 4);
    case ParityCase::EEE: return reference_family_weight(nb);
    case ParityCase::OOO: break;
  }
  return 1;
}

inline int global_sign(const BoxDims& dims) { return global_sign(normalize(dims)); }

inline std::int64_t path_cells(const NormalizedBox& nb) { return nb.a() * (nb.b() + nb.x()); }

/// Calls `visit(family, weight)` for every nonintersecting family with a
/// symmetric endpoint set; `weight` excludes the global sign.
template <typename Visitor>
void enumerate_families(const NormalizedBox& nb, Visitor&& visit, const Budget& budget = {}) {
  require_path_model(nb);
  Budget::check("paths", path_cells(nb), budget.path_cells);
  const std::int64_t a = nb.a(), b = nb.b(), x = nb.x();
  const auto starts = start_points(a, b);
  const auto ends = end_points(a, b, x);

  // occupancy grid over the bounding rectangle of all paths
  const std::int64_t width = x + a + b + 1;
  const std::int64_t height = a + b + 1;
  std::vector<char> used(static_cast<std::size_t>(width * height), 0);
  const auto cell = [&](LatticePoint p) -> char& { return used[static_cast<std::size_t>(p.y * width + p.x)]; };

  for (const auto& sel : symmetric_selections(a, b)) {
    int end_factor = 1;
    for (auto j : sel) end_factor *= endpoint_sign(j, a, b);

    std::vector<MonotonePath> family;
    const auto place = [&](const auto& self, std::size_t i, int sign) -> void {
      if (i == sel.size()) {
        visit(static_cast<const std::vector<MonotonePath>&>(family), sign * end_factor);
        return;
      }
      const LatticePoint from = starts[i];
      const LatticePoint to = ends[static_cast<std::size_t>(sel[i] - 1)];
      if (to.x < from.x || to.y > from.y || cell(from)) return;
      MonotonePath path{from, {}};
      cell(from) = 1;
      // extend one step at a time, refusing occupied vertices
      const auto walk = [&](const auto& go, LatticePoint at, std::int64_t area) -> void {
        if (at == to) {
          family.push_back(path);
          self(self, i + 1, sign * parity_sign(area));
          family.pop_back();
          return;
        }
        if (at.x < to.x) {
          const LatticePoint nxt{at.x + 1, at.y};
          if (!cell(nxt)) {
            cell(nxt) = 1;
            path.steps.push_back(Step::East);
            go(go, nxt, area + at.y);
            path.steps.pop_back();
            cell(nxt) = 0;
          }
        }
        if (at.y > to.y) {
          const LatticePoint nxt{at.x, at.y - 1};
          if (!cell(nxt)) {
            cell(nxt) = 1;
            path.steps.push_back(Step::South);
            go(go, nxt, area);
            path.steps.pop_back();
            cell(nxt) = 0;
          }
        }
      };
      walk(walk, from, 0);
      cell(from) = 0;
    };
    place(place, 0, 1);
  }
}

/// Brute-force (-1)-enumeration over nonintersecting path families, global
/// sign included.
inline BigInt signed_count_paths(const BoxDims& dims, const Budget& budget = {}) {
  const NormalizedBox nb = normalize(dims);
  require_path_model(nb);
  BigInt total = 0;
  enumerate_families(nb, [&](const std::vector<MonotonePath>&, int w) { total += w; }, budget);
  return global_sign(nb) * total;
}

/// Number of nonintersecting families with symmetric endpoints (no weights).
inline BigInt count_families(const BoxDims& dims, const Budget& budget = {}) {
  BigInt total = 0;
  enumerate_families(normalize(dims), [&](const std::vector<MonotonePath>&, int) { ++total; }, budget);
  return total;
}

}  // namespace selfcomp
