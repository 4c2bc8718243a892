#pragma once

// Determinant and Pfaffian evaluations of the (-1)-enumeration and of the
// ordinary enumeration of self-complementary plane partitions.

#include <cstdint>
#include <functional>

#include "box.hpp"
#include "budget.hpp"
#include "matrix.hpp"
#include "minor_summation.hpp"
#include "paths.hpp"
#include "pfaffian.hpp"

namespace selfcomp {

/// a x (a+b) matrix of signed single-path counts A_i -> E_j, with the
/// endpoint factor folded into column j.
inline IntMatrix t_matrix(const NormalizedBox& nb) {
  require_path_model(nb);
  const std::int64_t a = nb.a(), b = nb.b(), x = nb.x();
  IntMatrix t(static_cast<std::size_t>(a), static_cast<std::size_t>(a + b));
  for (std::int64_t i = 1; i <= a; ++i)
    for (std::int64_t j = 1; j <= a + b; ++j)
      t(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          endpoint_sign(j, a, b) * t_entry(i, j, a, b, x);
  return t;
}

/// a x (a+b) matrix of ordinary path counts binom(b+x, b+i-j).
inline IntMatrix ordinary_t_matrix(const NormalizedBox& nb) {
  require_path_model(nb);
  const std::int64_t a = nb.a(), b = nb.b(), x = nb.x();
  IntMatrix t(static_cast<std::size_t>(a), static_cast<std::size_t>(a + b));
  for (std::int64_t i = 1; i <= a; ++i)
    for (std::int64_t j = 1; j <= a + b; ++j)
      t(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = binom(b + x, b + i - j);
  return t;
}

/// Number of symmetric endpoint selections that the minor sum visits.
inline BigInt minor_sum_terms(const NormalizedBox& nb) {
  return binom((nb.a() + nb.b()) / 2, nb.a() / 2);
}

/// Sum of the a x a minors of T over symmetric endpoint selections, times the
/// global sign.
inline BigInt minor_sum(const BoxDims& dims, const Budget& budget = {}) {
  const NormalizedBox nb = normalize(dims);
  require_path_model(nb);
  const BigInt terms = minor_sum_terms(nb);
  if (terms > budget.minor_terms) throw BudgetExceeded("minorsum", static_cast<std::int64_t>(std::min<BigInt>(terms, INT64_MAX)), budget.minor_terms);
  const IntMatrix t = t_matrix(nb);
  BigInt total = 0;
  for (const auto& sel : symmetric_selections(nb.a(), nb.b())) {
    std::vector<std::size_t> cols;
    for (auto j : sel) cols.push_back(static_cast<std::size_t>(j - 1));
    total += det_bareiss(t.select_columns(cols));
  }
  return global_sign(nb) * total;
}

/// Skew matrix M_ij = sum_{k=1}^{pairs} (T_ik T_{j,w+1-k} - T_jk T_{i,w+1-k})
/// with w = columns of T, bordered by the middle column (+T_{i,mid} in the
/// last column, -T_{j,mid} in the last row) when a is odd.
inline IntMatrix pairing_matrix(const IntMatrix& t, bool bordered) {
  const std::size_t a = t.rows();
  const std::size_t w = t.cols();
  const std::size_t pairs = w / 2;
  const std::size_t dim = bordered ? a + 1 : a;
  IntMatrix m(dim, dim);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j)
      for (std::size_t k = 0; k < pairs; ++k) m(i, j) += t(i, k) * t(j, w - 1 - k) - t(j, k) * t(i, w - 1 - k);
  if (bordered) {
    const std::size_t mid = w / 2;
    for (std::size_t i = 0; i < a; ++i) {
      m(i, a) = t(i, mid);
      m(a, i) = -t(i, mid);
    }
  }
  return m;
}

/// The single-Pfaffian matrix for the (-1)-enumeration (no signs applied).
inline IntMatrix pfaffian_method_matrix(const NormalizedBox& nb) {
  return pairing_matrix(t_matrix(nb), nb.a() % 2 == 1);
}

/// (-1)-enumeration as one Pfaffian: global sign, an extra (-1)^{(a-1)/2}
/// for odd a (the border plays an extra start point), times Pf.
inline BigInt pfaffian_method(const BoxDims& dims) {
  const NormalizedBox nb = normalize(dims);
  require_path_model(nb);
  const IntMatrix m = pfaffian_method_matrix(nb);
  int sign = global_sign(nb);
  if (nb.a() % 2 == 1) sign *= parity_sign((nb.a() - 1) / 2);
  return sign * pfaffian(m);
}

inline IntMatrix ord_pfaffian_matrix(const NormalizedBox& nb) {
  return pairing_matrix(ordinary_t_matrix(nb), nb.a() % 2 == 1);
}

/// Ordinary enumeration of self-complementary plane partitions as a Pfaffian
/// with binomial entries.
inline BigInt ord_pfaffian(const BoxDims& dims) {
  const NormalizedBox nb = normalize(dims);
  if (nb.parity == ParityCase::OOO) return 0;
  const BigInt pf = pfaffian(ord_pfaffian_matrix(nb));
  return nb.a() % 2 == 1 ? parity_sign((nb.a() - 1) / 2) * pf : pf;
}

}  // namespace selfcomp
