#pragma once

// Lindström–Gessel–Viennot determinants and the minor summation identities
// that turn a sum of minors into a single Pfaffian.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "paths.hpp"
#include "pfaffian.hpp"

namespace selfcomp {

/// det[entry(A_i, E_j)]. For point configurations where every pair of
/// "crossed" paths must meet, this is the weighted count of nonintersecting
/// families A_i -> E_i.
inline BigInt lgv_determinant(const std::vector<LatticePoint>& starts, const std::vector<LatticePoint>& ends,
                              const std::function<BigInt(LatticePoint, LatticePoint)>& entry) {
  if (starts.size() != ends.size()) throw std::invalid_argument("lgv_determinant: point lists differ in length");
  IntMatrix m(starts.size(), ends.size());
  for (std::size_t i = 0; i < starts.size(); ++i)
    for (std::size_t j = 0; j < ends.size(); ++j) m(i, j) = entry(starts[i], ends[j]);
  return det_bareiss(std::move(m));
}

/// Calls `visit(subset)` for every increasing k-subset of {0..n-1}.
template <typename Visitor>
void for_each_subset(std::size_t n, std::size_t k, Visitor&& visit) {
  std::vector<std::size_t> pick;
  const auto rec = [&](const auto& self, std::size_t next) -> void {
    if (pick.size() == k) {
      visit(static_cast<const std::vector<std::size_t>&>(pick));
      return;
    }
    for (std::size_t i = next; i + (k - pick.size()) <= n; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

struct IdentitySides {
  BigInt lhs;
  BigInt rhs;
  bool holds() const { return lhs == rhs; }
};

/// Both sides of the Ishikawa–Wakayama minor summation formula for a
/// skew-symmetric p x p matrix A and a p x n matrix T with n even:
///   sum_{K, |K| = n} Pf(A[K, K]) det(T[K, :])  and  Pf(T^t A T).
inline IdentitySides iw_sides(const IntMatrix& skew, const IntMatrix& t) {
  const std::size_t p = skew.rows();
  const std::size_t n = t.cols();
  if (!skew.is_skew_symmetric()) throw std::invalid_argument("iw: A must be skew-symmetric");
  if (t.rows() != p || n > p || n % 2 != 0) throw std::invalid_argument("iw: need T of shape p x n, n <= p, n even");
  IdentitySides out;
  std::vector<std::size_t> all_cols(n);
  for (std::size_t c = 0; c < n; ++c) all_cols[c] = c;
  for_each_subset(p, n, [&](const std::vector<std::size_t>& k) {
    const BigInt pf = pf_elimination(skew.submatrix(k, k));
    if (pf == 0) return;
    out.lhs += pf * det_bareiss(t.submatrix(k, all_cols));
  });
  out.rhs = pf_elimination(t.transpose() * skew * t);
  return out;
}

inline bool iw_identity_check(const IntMatrix& skew, const IntMatrix& t) { return iw_sides(skew, t).holds(); }

inline void require_okkor_shape(const IntMatrix& s) {
  if (s.rows() % 2 != 0 || s.cols() % 2 != 0 || s.rows() > s.cols())
    throw std::invalid_argument("okkor: S must be 2m x 2n with m <= n");
}

/// Pf(S* A S*^t) with S* = (S_1..S_n, S_2n..S_{n+1}) and A = [[0, I], [-I, 0]].
inline BigInt okkor_sum(const IntMatrix& s) {
  require_okkor_shape(s);
  const std::size_t n = s.cols() / 2;
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < n; ++k) order.push_back(k);
  for (std::size_t k = 0; k < n; ++k) order.push_back(2 * n - 1 - k);
  const IntMatrix star = s.select_columns(order);
  IntMatrix a(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    a(k, n + k) = 1;
    a(n + k, k) = -1;
  }
  return pf_elimination(star * a * star.transpose());
}

/// The skew matrix sum_k (S_ik S_{j,2n+1-k} - S_jk S_{i,2n+1-k}) (1-based k).
inline IntMatrix okkor_entry_matrix(const IntMatrix& s) {
  require_okkor_shape(s);
  const std::size_t rows = s.rows();
  const std::size_t n = s.cols() / 2;
  IntMatrix m(rows, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < rows; ++j)
      for (std::size_t k = 0; k < n; ++k) m(i, j) += s(i, k) * s(j, 2 * n - 1 - k) - s(j, k) * s(i, 2 * n - 1 - k);
  return m;
}

/// sum_{k_1 < ... < k_m <= n} det(S_{k_1}..S_{k_m}, S_{2n+1-k_m}..S_{2n+1-k_1}).
inline BigInt okkor_minor_sum(const IntMatrix& s) {
  require_okkor_shape(s);
  const std::size_t m = s.rows() / 2;
  const std::size_t n = s.cols() / 2;
  BigInt total = 0;
  for_each_subset(n, m, [&](const std::vector<std::size_t>& k) {
    std::vector<std::size_t> cols(k);
    for (auto it = k.rbegin(); it != k.rend(); ++it) cols.push_back(2 * n - 1 - *it);
    total += det_bareiss(s.select_columns(cols));
  });
  return total;
}

}  // namespace selfcomp
