#pragma once

// Exact determinants and Pfaffians.
//
// Two independent Pfaffian routes are kept on purpose: the definition as a
// signed sum over perfect matchings (small sizes only) and skew-symmetric
// Gaussian elimination over the rationals.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace selfcomp {

/// Fraction-free (Bareiss) determinant. Every intermediate is an exact
/// integer because each division is by the previous pivot.
inline BigInt det_bareiss(IntMatrix m) {
  if (!m.square()) throw std::invalid_argument("det_bareiss: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Laplace expansion along the first row; exponential, test-sized inputs.
inline BigInt det_cofactor(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("det_cofactor: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigInt total = 0;
  std::vector<std::size_t> rows, cols;
  for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
  for (std::size_t skip = 0; skip < n; ++skip) {
    if (m(0, skip) == 0) continue;
    cols.clear();
    for (std::size_t c = 0; c < n; ++c)
      if (c != skip) cols.push_back(c);
    const BigInt minor = det_cofactor(m.submatrix(rows, cols));
    total += (skip % 2 == 0 ? 1 : -1) * m(0, skip) * minor;
  }
  return total;
}

/// Sign of a permutation given as a sequence of distinct integers, by
/// counting inversions.
inline int permutation_sign(const std::vector<std::size_t>& seq) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) inversions += seq[i] > seq[j] ? 1 : 0;
  return inversions % 2 == 0 ? 1 : -1;
}

/// Perfect matching of {0..2n-1} in canonical form: pairs (m[2k], m[2k+1])
/// with m[2k] < m[2k+1] and m[0] < m[2] < ... < m[2n-2].
using PerfectMatching = std::vector<std::size_t>;

/// Calls `visit` on every perfect matching of {0..size-1}, canonical form.
template <typename Visitor>
void for_each_perfect_matching(std::size_t size, Visitor&& visit) {
  if (size % 2 != 0) return;
  PerfectMatching m;
  std::vector<char> used(size, 0);
  const auto rec = [&](const auto& self) -> void {
    std::size_t first = 0;
    while (first < size && used[first]) ++first;
    if (first == size) {
      visit(static_cast<const PerfectMatching&>(m));
      return;
    }
    used[first] = 1;
    for (std::size_t partner = first + 1; partner < size; ++partner) {
      if (used[partner]) continue;
      used[partner] = 1;
      m.push_back(first);
      m.push_back(partner);
      self(self);
      m.pop_back();
      m.pop_back();
      used[partner] = 0;
    }
    used[first] = 0;
  };
  rec(rec);
}

inline constexpr std::size_t kMaxCombinatorialPfaffianSize = 12;

/// Pfaffian from its definition, sum over perfect matchings of
/// sgn(m) * prod M(m[2k], m[2k+1]).
inline BigInt pf_combinatorial(const IntMatrix& m) {
  if (!m.square() || m.rows() % 2 != 0)
    throw std::invalid_argument("pf_combinatorial: needs an even-dimensional square matrix");
  if (m.rows() > kMaxCombinatorialPfaffianSize)
    throw std::invalid_argument("pf_combinatorial: dimension above 12, use pf_elimination");
  if (!m.is_skew_symmetric()) throw std::invalid_argument("pf_combinatorial: matrix is not skew-symmetric");
  BigInt total = 0;
  for_each_perfect_matching(m.rows(), [&](const PerfectMatching& pm) {
    BigInt term = permutation_sign(pm);
    for (std::size_t k = 0; k < pm.size(); k += 2) {
      term *= m(pm[k], pm[k + 1]);
      if (term == 0) return;
    }
    total += term;
  });
  return total;
}

/// Pfaffian by skew-symmetric elimination over the rationals. Each step
/// pivots on the 2x2 block (k, k+1), multiplies the running Pfaffian by the
/// pivot and replaces the trailing block by its Schur complement.
inline BigInt pf_elimination(const IntMatrix& input) {
  if (!input.square() || input.rows() % 2 != 0)
    throw std::invalid_argument("pf_elimination: needs an even-dimensional square matrix");
  if (!input.is_skew_symmetric()) throw std::invalid_argument("pf_elimination: matrix is not skew-symmetric");
  RatMatrix m = to_rational(input);
  const std::size_t n = m.rows();
  BigRational pf = 1;
  for (std::size_t k = 0; k < n; k += 2) {
    std::size_t p = k + 1;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k + 1, c), m(p, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(m(r, k + 1), m(r, p));
      pf = -pf;
    }
    const BigRational pivot = m(k, k + 1);
    pf *= pivot;
    for (std::size_t i = k + 2; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        m(i, j) -= (m(k, i) * m(k + 1, j) - m(k, j) * m(k + 1, i)) / pivot;
        m(j, i) = -m(i, j);
      }
    }
  }
  if (boost::multiprecision::denominator(pf) != 1) throw std::logic_error("pf_elimination: non-integral Pfaffian");
  return boost::multiprecision::numerator(pf);
}

/// Pfaffian of a skew-symmetric integer matrix; an empty matrix gives 1.
inline BigInt pfaffian(const IntMatrix& m) { return pf_elimination(m); }

}  // namespace selfcomp
