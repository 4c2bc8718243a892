#pragma once

// Plane partitions as height matrices: exhaustive generation, the
// self-complementary subset, the half-full reference partition and the
// orbit-flip sign relative to it.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "box.hpp"
#include "budget.hpp"
#include "numeric.hpp"

namespace selfcomp {

/// Stack heights h(r, s) of a plane partition in an a x b x c box, with
/// 0-based row r < a and column s < b. Cube (r+1, s+1, k) is present iff
/// k <= h(r, s).
class HeightMatrix {
 public:
  HeightMatrix() = default;
  explicit HeightMatrix(BoxDims dims)
      : dims_(dims), h_(static_cast<std::size_t>(dims.a * dims.b), 0) {
    require_valid(dims);
  }
  HeightMatrix(BoxDims dims, std::vector<std::int64_t> row_major) : dims_(dims), h_(std::move(row_major)) {
    require_valid(dims);
    if (h_.size() != static_cast<std::size_t>(dims.a * dims.b))
      throw std::invalid_argument("height matrix size does not match a*b");
  }
  HeightMatrix(BoxDims dims, std::initializer_list<std::initializer_list<std::int64_t>> rows) : dims_(dims) {
    require_valid(dims);
    if (rows.size() != static_cast<std::size_t>(dims.a)) throw std::invalid_argument("expected a rows");
    for (const auto& row : rows) {
      if (row.size() != static_cast<std::size_t>(dims.b)) throw std::invalid_argument("expected b columns");
      h_.insert(h_.end(), row.begin(), row.end());
    }
  }

  const BoxDims& dims() const { return dims_; }
  std::int64_t rows() const { return dims_.a; }
  std::int64_t cols() const { return dims_.b; }

  std::int64_t operator()(std::int64_t r, std::int64_t s) const { return h_[index(r, s)]; }
  std::int64_t& operator()(std::int64_t r, std::int64_t s) { return h_[index(r, s)]; }

  const std::vector<std::int64_t>& row_major() const { return h_; }

  /// Cube membership, 1-based coordinates as in the order-ideal picture.
  bool contains(std::int64_t i, std::int64_t j, std::int64_t k) const {
    if (i < 1 || j < 1 || k < 1 || i > dims_.a || j > dims_.b || k > dims_.c) return false;
    return k <= (*this)(i - 1, j - 1);
  }

  std::int64_t cube_count() const {
    std::int64_t n = 0;
    for (auto v : h_) n += v;
    return n;
  }

  /// Heights in [0, c], weakly decreasing along rows and columns.
  bool is_plane_partition() const {
    for (std::int64_t r = 0; r < dims_.a; ++r) {
      for (std::int64_t s = 0; s < dims_.b; ++s) {
        const auto v = (*this)(r, s);
        if (v < 0 || v > dims_.c) return false;
        if (r > 0 && v > (*this)(r - 1, s)) return false;
        if (s > 0 && v > (*this)(r, s - 1)) return false;
      }
    }
    return true;
  }

  friend bool operator==(const HeightMatrix&, const HeightMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const HeightMatrix& m) {
    os << '[';
    for (std::int64_t r = 0; r < m.rows(); ++r) {
      os << (r ? ",[" : "[");
      for (std::int64_t s = 0; s < m.cols(); ++s) os << (s ? "," : "") << m(r, s);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t index(std::int64_t r, std::int64_t s) const { return static_cast<std::size_t>(r * dims_.b + s); }

  BoxDims dims_{};
  std::vector<std::int64_t> h_;
};

/// h(r, s) + h(a-1-r, b-1-s) == c everywhere, the height form of
/// (i,j,k) in P  <=>  (a+1-i, b+1-j, c+1-k) not in P.
inline bool is_self_complementary(const HeightMatrix& p) {
  const auto [a, b, c] = p.dims();
  for (std::int64_t r = 0; r < a; ++r)
    for (std::int64_t s = 0; s < b; ++s)
      if (p(r, s) + p(a - 1 - r, b - 1 - s) != c) return false;
  return true;
}

/// Calls `visit` on every plane partition in the box, in decreasing
/// lexicographic order of the row-major heights (the full box comes first).
template <typename Visitor>
void enumerate_pp(const BoxDims& dims, Visitor&& visit, const Budget& budget = {}) {
  require_valid(dims);
  Budget::check("enumerate_pp", dims.volume(), budget.pp_cells);
  HeightMatrix m(dims);
  const std::int64_t cells = dims.a * dims.b;
  const auto rec = [&](const auto& self, std::int64_t p) -> void {
    if (p == cells) {
      visit(static_cast<const HeightMatrix&>(m));
      return;
    }
    const std::int64_t r = p / dims.b;
    const std::int64_t s = p % dims.b;
    std::int64_t hi = dims.c;
    if (r > 0) hi = std::min(hi, m(r - 1, s));
    if (s > 0) hi = std::min(hi, m(r, s - 1));
    for (std::int64_t v = hi; v >= 0; --v) {
      m(r, s) = v;
      self(self, p + 1);
    }
    m(r, s) = 0;
  };
  rec(rec, 0);
}

inline std::int64_t count_pp(const BoxDims& dims, const Budget& budget = {}) {
  std::int64_t n = 0;
  enumerate_pp(dims, [&](const HeightMatrix&) { ++n; }, budget);
  return n;
}

/// Free cells guarded by the self-complementary generator.
inline std::int64_t sc_free_cells(const BoxDims& d) { return d.a * d.b * ((d.c + 1) / 2); }

/// Calls `visit` on every self-complementary plane partition in the box.
/// Only the first half of the cells (row-major) is chosen freely, the rest
/// is completed by h(a-1-r, b-1-s) = c - h(r, s). Order is decreasing
/// lexicographic, as for enumerate_pp.
template <typename Visitor>
void enumerate_sc(const BoxDims& dims, Visitor&& visit, const Budget& budget = {}) {
  require_valid(dims);
  Budget::check("enumerate_sc", sc_free_cells(dims), budget.sc_free_cells);
  const auto [a, b, c] = dims;
  const std::int64_t cells = a * b;
  if (cells % 2 == 1 && c % 2 == 1) return;  // the centre cell would need height c/2

  HeightMatrix m(dims);
  std::vector<char> set(static_cast<std::size_t>(cells), 0);
  const auto assigned = [&](std::int64_t r, std::int64_t s) {
    return r >= 0 && s >= 0 && r < a && s < b && set[static_cast<std::size_t>(r * b + s)];
  };
  // monotonicity against every neighbour that already has a value
  const auto consistent = [&](std::int64_t r, std::int64_t s) {
    const auto v = m(r, s);
    if (assigned(r - 1, s) && v > m(r - 1, s)) return false;
    if (assigned(r, s - 1) && v > m(r, s - 1)) return false;
    if (assigned(r + 1, s) && v < m(r + 1, s)) return false;
    if (assigned(r, s + 1) && v < m(r, s + 1)) return false;
    return true;
  };

  const auto rec = [&](const auto& self, std::int64_t p) -> void {
    const std::int64_t q = cells - 1 - p;
    if (p > q) {
      visit(static_cast<const HeightMatrix&>(m));
      return;
    }
    const std::int64_t r = p / b, s = p % b;
    const std::int64_t rq = q / b, sq = q % b;
    const std::int64_t lo = p == q ? c / 2 : 0;
    const std::int64_t hi = p == q ? c / 2 : c;
    for (std::int64_t v = hi; v >= lo; --v) {
      m(r, s) = v;
      m(rq, sq) = c - v;
      set[static_cast<std::size_t>(p)] = 1;
      set[static_cast<std::size_t>(q)] = 1;
      if (consistent(r, s) && consistent(rq, sq)) self(self, p + 1);
      set[static_cast<std::size_t>(p)] = 0;
      set[static_cast<std::size_t>(q)] = 0;
    }
  };
  rec(rec, 0);
}

inline std::int64_t count_sc(const BoxDims& dims, const Budget& budget = {}) {
  std::int64_t n = 0;
  enumerate_sc(dims, [&](const HeightMatrix&) { ++n; }, budget);
  return n;
}

inline std::vector<HeightMatrix> collect_sc(const BoxDims& dims, const Budget& budget = {}) {
  std::vector<HeightMatrix> out;
  enumerate_sc(dims, [&](const HeightMatrix& m) { out.push_back(m); }, budget);
  return out;
}

/// The half-full self-complementary partition that carries weight +1:
/// the slab i <= a/2 for a even, else the slab j <= b/2 for b even, else
/// the slab k <= c/2.
inline HeightMatrix reference_pp(const BoxDims& dims) {
  require_valid(dims);
  const auto [a, b, c] = dims;
  if (a % 2 == 1 && b % 2 == 1 && c % 2 == 1)
    throw std::invalid_argument("all-odd box has no self-complementary plane partition");
  HeightMatrix m(dims);
  for (std::int64_t r = 0; r < a; ++r) {
    for (std::int64_t s = 0; s < b; ++s) {
      if (a % 2 == 0)
        m(r, s) = r < a / 2 ? c : 0;
      else if (b % 2 == 0)
        m(r, s) = s < b / 2 ? c : 0;
      else
        m(r, s) = c / 2;
    }
  }
  return m;
}

/// |cubes(p) \ cubes(ref)|.
inline std::int64_t cubes_outside(const HeightMatrix& p, const HeightMatrix& ref) {
  if (!(p.dims() == ref.dims())) throw std::invalid_argument("partitions live in different boxes");
  std::int64_t n = 0;
  for (std::int64_t r = 0; r < p.rows(); ++r)
    for (std::int64_t s = 0; s < p.cols(); ++s) n += std::max<std::int64_t>(0, p(r, s) - ref(r, s));
  return n;
}

/// (-1)^{n(P)} with n(P) the number of cubes of p not in the reference.
inline int sign_of(const HeightMatrix& p, const HeightMatrix& ref) {
  return cubes_outside(p, ref) % 2 == 0 ? 1 : -1;
}

/// Brute-force (-1)-enumeration, sign included.
inline BigInt signed_count_pp(const BoxDims& dims, const Budget& budget = {}) {
  require_valid(dims);
  if (dims.a % 2 == 1 && dims.b % 2 == 1 && dims.c % 2 == 1) {
    Budget::check("enumerate_sc", sc_free_cells(dims), budget.sc_free_cells);
    return 0;
  }
  const HeightMatrix ref = reference_pp(dims);
  BigInt total = 0;
  enumerate_sc(dims, [&](const HeightMatrix& p) { total += sign_of(p, ref); }, budget);
  return total;
}

/// Re-expresses a partition in the box whose side k is side `perm[k]` of
/// the current box (same cube set, coordinates permuted).
inline HeightMatrix permute_axes(const HeightMatrix& p, const std::array<int, 3>& perm) {
  const BoxDims& d = p.dims();
  const BoxDims t{d[static_cast<std::size_t>(perm[0])], d[static_cast<std::size_t>(perm[1])],
                  d[static_cast<std::size_t>(perm[2])]};
  HeightMatrix out(t);
  std::array<std::int64_t, 3> src{};
  for (std::int64_t i = 1; i <= t.a; ++i) {
    for (std::int64_t j = 1; j <= t.b; ++j) {
      std::int64_t h = 0;
      for (std::int64_t k = 1; k <= t.c; ++k) {
        src[static_cast<std::size_t>(perm[0])] = i;
        src[static_cast<std::size_t>(perm[1])] = j;
        src[static_cast<std::size_t>(perm[2])] = k;
        if (p.contains(src[0], src[1], src[2])) h = k;
      }
      out(i - 1, j - 1) = h;
    }
  }
  return out;
}

}  // namespace selfcomp
