#pragma once

// Exact integer combinatorics: binomials, rising factorials and Gaussian
// binomial coefficients (both the closed form at q = -1 and the full
// polynomial, which serves as its oracle).

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace selfcomp {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const BigRational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// C(n, k), with the convention that out-of-range arguments give 0.
inline BigInt binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

/// Rising factorial a (a+1) ... (a+n-1); 1 for n == 0.
inline BigInt rising(std::int64_t a, std::int64_t n) {
  BigInt r = 1;
  for (std::int64_t i = 0; i < n; ++i) r *= a + i;
  return r;
}

/// Gaussian binomial coefficient evaluated at q = -1.
inline BigInt qbin_neg1(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n % 2 == 0 && k % 2 != 0) return 0;
  return binom(n / 2, k / 2);
}

/// Integer polynomial, coefficient i belongs to q^i.
using IntPoly = std::vector<BigInt>;

/// Coefficients of the Gaussian polynomial [n choose k]_q, built with the
/// division-free recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].
inline IntPoly gaussian_poly(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return {};
  // row[j] holds [m choose j]_q for the current m, j = 0..k
  std::vector<IntPoly> row(static_cast<std::size_t>(k) + 1);
  row[0] = {1};
  for (std::int64_t m = 1; m <= n; ++m) {
    for (std::int64_t j = std::min(m, k); j >= 1; --j) {
      const IntPoly& lower = row[static_cast<std::size_t>(j - 1)];
      const IntPoly& same = row[static_cast<std::size_t>(j)];
      IntPoly next(std::max(lower.size(), same.empty() ? 0 : same.size() + static_cast<std::size_t>(j)));
      for (std::size_t d = 0; d < lower.size(); ++d) next[d] += lower[d];
      for (std::size_t d = 0; d < same.size(); ++d) next[d + static_cast<std::size_t>(j)] += same[d];
      row[static_cast<std::size_t>(j)] = std::move(next);
    }
  }
  return row[static_cast<std::size_t>(k)];
}

template <typename Scalar>
Scalar evaluate(const IntPoly& p, const Scalar& q) {
  Scalar acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * q + Scalar(*it);
  return acc;
}

/// Gaussian binomial coefficient as an exact polynomial, evaluated at q.
inline BigRational qbin_poly_at(std::int64_t n, std::int64_t k, const BigRational& q) {
  return evaluate(gaussian_poly(n, k), q);
}

}  // namespace selfcomp
