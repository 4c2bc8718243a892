#pragma once

// Four-parameter deformation of the Pfaffian matrix for a even, b odd:
// each occurrence of (b+x-1)/2 in the split form is replaced by one of
// m1, m2, n1, n2. The experiment samples univariate slices of its Pfaffian,
// interpolates them exactly and looks for a splitting into rational linear
// factors. It reports what it finds and asserts nothing.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "numeric.hpp"
#include "pfaffian.hpp"

namespace selfcomp {

struct RemarkParams {
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;

  std::int64_t& operator[](std::size_t v) { return v == 0 ? m1 : v == 1 ? m2 : v == 2 ? n1 : n2; }
  std::int64_t operator[](std::size_t v) const { return v == 0 ? m1 : v == 1 ? m2 : v == 2 ? n1 : n2; }
};

inline constexpr std::array<const char*, 4> kRemarkVariables{"m1", "m2", "n1", "n2"};

inline std::int64_t floor_div(std::int64_t p, std::int64_t q) {
  std::int64_t r = p / q;
  if ((p % q != 0) && ((p < 0) != (q < 0))) --r;
  return r;
}

inline std::int64_t ceil_div(std::int64_t p, std::int64_t q) { return -floor_div(-p, q); }

inline void require_remark_shape(std::int64_t a, std::int64_t b) {
  if (a < 0 || a % 2 != 0) throw std::invalid_argument("remark matrix needs a even and nonnegative");
  if (b < 0 || b % 2 != 1) throw std::invalid_argument("remark matrix needs b odd and positive");
}

/// Calls `slot(variable, lower)` for every binomial C(variable, lower)
/// appearing in entry (i, j), 1-based; variable indexes m1, m2, n1, n2.
template <typename Slot>
void for_each_remark_binomial(std::int64_t i, std::int64_t j, std::int64_t a, std::int64_t b, Slot&& slot) {
  const std::int64_t hb = (b - 1) / 2;
  const std::int64_t ha = a / 2;
  const std::int64_t odd_terms = floor_div(a + b - 1, 4);
  const std::int64_t even_terms = ceil_div(a + b - 1, 4);
  for (std::int64_t l = 1; l <= odd_terms; ++l) {
    slot(2, hb + floor_div(i - 1, 2) - l + 1);
    slot(0, -ha + floor_div(j - 1, 2) + l);
    slot(2, hb + floor_div(j - 1, 2) - l + 1);
    slot(0, -ha + floor_div(i - 1, 2) + l);
  }
  for (std::int64_t l = 1; l <= even_terms; ++l) {
    slot(3, hb + i / 2 - l + 1);
    slot(1, -ha + j / 2 + l - 1);
    slot(3, hb + j / 2 - l + 1);
    slot(1, -ha + i / 2 + l - 1);
  }
}

/// a x a skew matrix M_ij(m1, m2, n1, n2, a, b), i, j = 1..a.
inline IntMatrix remark_matrix(const RemarkParams& v, std::int64_t a, std::int64_t b) {
  require_remark_shape(a, b);
  const std::int64_t hb = (b - 1) / 2;
  const std::int64_t ha = a / 2;
  const std::int64_t odd_terms = floor_div(a + b - 1, 4);
  const std::int64_t even_terms = ceil_div(a + b - 1, 4);
  IntMatrix m(static_cast<std::size_t>(a), static_cast<std::size_t>(a));
  for (std::int64_t i = 1; i <= a; ++i) {
    for (std::int64_t j = 1; j <= a; ++j) {
      BigInt first = 0;
      for (std::int64_t l = 1; l <= odd_terms; ++l) {
        first += binom(v.n1, hb + floor_div(i - 1, 2) - l + 1) * binom(v.m1, -ha + floor_div(j - 1, 2) + l) -
                 binom(v.n1, hb + floor_div(j - 1, 2) - l + 1) * binom(v.m1, -ha + floor_div(i - 1, 2) + l);
      }
      BigInt second = 0;
      for (std::int64_t l = 1; l <= even_terms; ++l) {
        second += binom(v.n2, hb + i / 2 - l + 1) * binom(v.m2, -ha + j / 2 + l - 1) -
                  binom(v.n2, hb + j / 2 - l + 1) * binom(v.m2, -ha + i / 2 + l - 1);
      }
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          ((i + j) % 2 == 0 ? first : BigInt(-first)) + second;
    }
  }
  return m;
}

/// Upper bound on the degree of Pf(remark_matrix) in one variable: a/2 times
/// the largest lower index of a binomial in that variable.
inline std::int64_t remark_degree_bound(std::size_t variable, std::int64_t a, std::int64_t b) {
  require_remark_shape(a, b);
  std::int64_t top = 0;
  for (std::int64_t i = 1; i <= a; ++i)
    for (std::int64_t j = 1; j <= a; ++j)
      for_each_remark_binomial(i, j, a, b, [&](std::size_t var, std::int64_t lower) {
        if (var == variable) top = std::max(top, lower);
      });
  return (a / 2) * top;
}

using RatPoly = std::vector<BigRational>;

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Newton interpolation through (xs[k], ys[k]), expanded to monomial form.
inline RatPoly interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys) {
  const std::size_t n = xs.size();
  std::vector<BigRational> coef(ys);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t k = n - 1; k >= level; --k) {
      coef[k] = (coef[k] - coef[k - 1]) / (xs[k] - xs[k - level]);
      if (k == level) break;
    }
  RatPoly out;
  for (std::size_t k = n; k-- > 0;) {
    // out = out * (v - xs[k]) + coef[k]
    RatPoly next(out.size() + 1);
    for (std::size_t d = 0; d < out.size(); ++d) {
      next[d + 1] += out[d];
      next[d] -= out[d] * xs[k];
    }
    next[0] += coef[k];
    out = std::move(next);
  }
  trim(out);
  return out;
}

inline BigRational evaluate_rat(const RatPoly& p, const BigRational& v) {
  BigRational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * v + *it;
  return acc;
}

/// Positive divisors of n by trial division; nullopt when n is too large to
/// factor this way.
inline std::optional<std::vector<BigInt>> divisors(BigInt n, const BigInt& limit = BigInt(1) << 48) {
  if (n < 0) n = -n;
  if (n == 0 || n > limit) return std::nullopt;
  std::vector<std::pair<BigInt, int>> primes;
  for (BigInt d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) primes.emplace_back(d, e);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<BigInt> out{1};
  for (const auto& [p, e] : primes) {
    const std::size_t base = out.size();
    BigInt pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t t = 0; t < base; ++t) out.push_back(out[t] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// p(v) = constant * prod (v - root) * residual(v).
struct Factorization {
  BigRational constant = 0;
  std::vector<BigRational> roots;  // with multiplicity, ascending
  RatPoly residual;                // monic part without rational roots; {1} when split
  bool gave_up = false;            // divisor search abandoned (huge coefficients)

  bool splits() const { return !gave_up && residual.size() <= 1; }
};

/// Divides p by (v - r) exactly; p(r) must be 0.
inline RatPoly deflate(const RatPoly& p, const BigRational& r) {
  RatPoly q(p.size() - 1);
  BigRational carry = 0;
  for (std::size_t d = p.size(); d-- > 1;) {
    carry = p[d] + carry * r;
    q[d - 1] = carry;
  }
  return q;
}

/// Extracts rational roots by the rational root theorem.
inline Factorization factor_rational(RatPoly p) {
  trim(p);
  Factorization f;
  if (p.empty()) {
    f.residual = {};
    return f;
  }
  f.constant = p.back();
  for (auto& c : p) c /= f.constant;
  while (p.size() > 1 && p[0] == 0) {
    f.roots.emplace_back(0);
    p.erase(p.begin());
  }
  bool progress = true;
  while (p.size() > 1 && progress) {
    progress = false;
    // clear denominators
    BigInt lcm = 1;
    for (const auto& c : p) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
    const BigInt lead = boost::multiprecision::numerator(BigRational(p.back() * lcm));
    const BigInt tail = boost::multiprecision::numerator(BigRational(p.front() * lcm));
    const auto num_div = divisors(tail);
    const auto den_div = divisors(lead);
    if (!num_div || !den_div) {
      f.gave_up = true;
      break;
    }
    for (const auto& q : *den_div) {
      for (const auto& n : *num_div) {
        for (int s : {1, -1}) {
          const BigRational r = BigRational(s * n) / BigRational(q);
          if (evaluate_rat(p, r) == 0) {
            f.roots.push_back(r);
            p = deflate(p, r);
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  std::sort(f.roots.begin(), f.roots.end());
  f.residual = p;
  return f;
}

struct RemarkSlice {
  std::size_t variable = 0;  // index into kRemarkVariables
  RemarkParams fixed;        // the sliced variable's own entry is ignored
  std::int64_t degree_bound = 0;
  RatPoly polynomial;
  Factorization factors;
  bool bound_verified = true;  // an extra node beyond the bound agreed
};

struct RemarkReport {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::vector<std::int64_t> grid;
  std::vector<RemarkSlice> slices;

  std::size_t split_count() const {
    std::size_t n = 0;
    for (const auto& s : slices) n += s.factors.splits() ? 1 : 0;
    return n;
  }
  bool all_split() const { return split_count() == slices.size(); }
};

inline BigInt remark_pfaffian(const RemarkParams& v, std::int64_t a, std::int64_t b) {
  return pfaffian(remark_matrix(v, a, b));
}

/// Interpolates Pf(remark_matrix) in `variable` with the other three fixed.
inline RemarkSlice remark_slice(std::size_t variable, RemarkParams fixed, std::int64_t a, std::int64_t b) {
  RemarkSlice s;
  s.variable = variable;
  s.fixed = fixed;
  s.degree_bound = remark_degree_bound(variable, a, b);
  std::vector<BigRational> xs, ys;
  for (std::int64_t node = 0; node <= s.degree_bound; ++node) {
    fixed[variable] = node;
    xs.emplace_back(node);
    ys.emplace_back(remark_pfaffian(fixed, a, b));
  }
  s.polynomial = interpolate(xs, ys);
  const std::int64_t probe = s.degree_bound + 1;
  fixed[variable] = probe;
  s.bound_verified = evaluate_rat(s.polynomial, BigRational(probe)) == BigRational(remark_pfaffian(fixed, a, b));
  s.factors = factor_rational(s.polynomial);
  return s;
}

/// Every univariate slice through the grid: for each variable, the other
/// three range over grid^3.
inline RemarkReport remark_experiment(std::int64_t a, std::int64_t b, const std::vector<std::int64_t>& grid) {
  require_remark_shape(a, b);
  RemarkReport report{a, b, grid, {}};
  for (std::size_t var = 0; var < 4; ++var) {
    std::array<std::size_t, 3> others{};
    for (std::size_t k = 0, t = 0; k < 4; ++k)
      if (k != var) others[t++] = k;
    for (auto g0 : grid)
      for (auto g1 : grid)
        for (auto g2 : grid) {
          RemarkParams p;
          p[others[0]] = g0;
          p[others[1]] = g1;
          p[others[2]] = g2;
          report.slices.push_back(remark_slice(var, p, a, b));
        }
  }
  return report;
}

inline std::string format_poly(const RatPoly& p, const char* var) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t d = p.size(); d-- > 0;) {
    if (p[d] == 0) continue;
    const bool neg = p[d] < 0;
    const BigRational mag = neg ? BigRational(-p[d]) : p[d];
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const bool unit = mag == 1 && d > 0;
    if (!unit) out += to_string(mag);
    if (d > 0) out += (unit ? "" : "*") + std::string(var) + (d > 1 ? "^" + std::to_string(d) : "");
  }
  return out;
}

}  // namespace selfcomp
