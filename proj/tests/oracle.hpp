#ifndef POLYDC_TESTS_ORACLE_HPP
#define POLYDC_TESTS_ORACLE_HPP

// Test-only reference computations. Nothing here goes through series
// arithmetic, the sequence cache, the Stirling table or Polynomial; only
// Rational and BigInt are shared with the library.

#include <cstdint>
#include <vector>

#include "polydc/rational.hpp"

namespace oracle {

using polydc::BigInt;
using polydc::Rational;

inline BigInt choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= static_cast<long>(n - k + i);
    r /= static_cast<long>(i);
  }
  return r;
}

inline Rational power(const Rational& base, std::int64_t e) {
  Rational r(1);
  const bool inv = e < 0;
  for (std::int64_t i = 0; i < (inv ? -e : e); ++i) r *= base;
  return inv ? Rational(1) / r : r;
}

/// Bernoulli numbers (B_1 = +1/2 convention) by the Akiyama-Tanigawa algorithm.
inline std::vector<Rational> bernoulli_plus(std::int64_t max_n) {
  std::vector<Rational> out;
  std::vector<Rational> a(static_cast<std::size_t>(max_n + 1));
  for (std::int64_t m = 0; m <= max_n; ++m) {
    a[m] = Rational(BigInt(1), BigInt(static_cast<long>(m + 1)));
    for (std::int64_t j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  return out;
}

/// Euler numbers E_n = E_n(0) via E_n(0) = -2 (2^{n+1} - 1) B_{n+1} / (n+1)
/// with B_1 = -1/2.
inline std::vector<Rational> euler_numbers(std::int64_t max_n) {
  auto b = bernoulli_plus(max_n + 1);
  b[1] = -b[1];
  std::vector<Rational> out;
  for (std::int64_t n = 0; n <= max_n; ++n) {
    const Rational two_pow = power(Rational(2), n + 1) - Rational(1);
    out.push_back(Rational(-2) * two_pow * b[n + 1] / Rational(n + 1));
  }
  return out;
}

/// Signed S1(n, m): coefficient of x^m in x(x-1)...(x-n+1).
inline BigInt stirling1(std::int64_t n, std::int64_t m) {
  std::vector<BigInt> poly{1};
  for (std::int64_t i = 0; i < n; ++i) {
    std::vector<BigInt> next(poly.size() + 1, 0);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * static_cast<long>(i);
    }
    poly = std::move(next);
  }
  return m < static_cast<std::int64_t>(poly.size()) ? poly[m] : BigInt(0);
}

/// sum_{m=1}^{j} S1(j, m) m^{1-k}.
inline Rational weight(std::int64_t k, std::int64_t j) {
  Rational acc;
  for (std::int64_t m = 1; m <= j; ++m) acc += Rational(stirling1(j, m)) * power(Rational(m), 1 - k);
  return acc;
}

/// G_n^{(k)} = sum_{j=1}^{n} C(n,j) w_k(j) E_{n-j}.
inline Rational poly_genocchi_number(std::int64_t k, std::int64_t n) {
  const auto e = euler_numbers(n);
  Rational acc;
  for (std::int64_t j = 1; j <= n; ++j) acc += Rational(choose(n, j)) * weight(k, j) * e[n - j];
  return acc;
}

inline std::vector<Rational> poly_euler_numbers(std::int64_t k, std::int64_t max_n) {
  std::vector<Rational> out;
  for (std::int64_t n = 0; n <= max_n; ++n) out.push_back(poly_genocchi_number(k, n + 1) / Rational(n + 1));
  return out;
}

/// sum_l C(n,l) a_l x^{n-l}, evaluated term by term.
inline Rational appell_eval(const std::vector<Rational>& numbers, std::int64_t n, const Rational& x) {
  Rational acc;
  for (std::int64_t l = 0; l <= n; ++l) acc += Rational(choose(n, l)) * numbers[l] * power(x, n - l);
  return acc;
}

inline Rational frac(const Rational& x) {
  BigInt q = x.numerator() / x.denominator();  // truncates toward zero
  if (x.sign() < 0 && !x.is_integer()) q -= 1;
  return x - Rational(q);
}

/// T_p^{(k)}(h, m) summed directly; k = 1 gives the classical sum.
inline Rational dc_sum(std::int64_t k, std::int64_t p, std::int64_t h, std::int64_t m) {
  const auto ek = poly_euler_numbers(k, p);
  Rational acc;
  for (std::int64_t mu = 1; mu < m; ++mu) {
    const Rational x = frac(Rational(BigInt(static_cast<long>(h * mu)), BigInt(static_cast<long>(m))));
    const Rational term = Rational(BigInt(static_cast<long>(mu)), BigInt(static_cast<long>(m))) *
                          appell_eval(ek, p, x);
    acc += (mu % 2 == 0) ? term : -term;
  }
  return Rational(2) * acc;
}

}  // namespace oracle

#endif  // POLYDC_TESTS_ORACLE_HPP
