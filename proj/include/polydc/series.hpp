#ifndef POLYDC_SERIES_HPP
#define POLYDC_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polydc/error.hpp"
#include "polydc/factorial.hpp"
#include "polydc/rational.hpp"

namespace polydc {

/// Formal power series truncated mod t^(order+1). Always holds exactly
/// order+1 coefficients; index j is the coefficient of t^j.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

  /// Order is coeffs.size() - 1; an empty list is rejected.
  explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw UsageError("a truncated series needs at least one coefficient");
  }

  TruncatedSeries(std::initializer_list<Rational> coeffs)
      : TruncatedSeries(std::vector<Rational>(coeffs)) {}

  std::size_t order() const { return coeffs_.size() - 1; }

  std::span<const Rational> coefficients() const { return coeffs_; }

  const Rational& operator[](std::size_t j) const { return coeffs_.at(j); }
  Rational& operator[](std::size_t j) { return coeffs_.at(j); }

  /// n! times the coefficient of t^n: the n-th term of an exponential
  /// generating function.
  Rational egf_coefficient(std::size_t n) const {
    return coeffs_.at(n) * Rational(factorial(static_cast<std::int64_t>(n)));
  }

  /// All egf coefficients 0..order.
  std::vector<Rational> egf_coefficients() const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) out.push_back(egf_coefficient(n));
    return out;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    require_same_order(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    require_same_order(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    return *this;
  }

  TruncatedSeries& operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

  void require_same_order(const TruncatedSeries& o) const {
    if (o.order() != order()) {
      throw OrderMismatch("series orders differ: " + std::to_string(order()) + " vs " +
                          std::to_string(o.order()));
    }
  }

 private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product truncated to the common order.
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_same_order(b);
  const std::size_t n = a.order();
  TruncatedSeries out(n);
  const auto ac = a.coefficients();
  const auto bc = b.coefficients();
  for (std::size_t i = 0; i <= n; ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (bc[j].is_zero()) continue;
      out[i + j] += ac[i] * bc[j];
    }
  }
  return out;
}

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_mul(a, b);
}

/// outer(inner(t)) by nested multiplication. The inner series must have
/// zero constant term.
inline TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  outer.require_same_order(inner);
  if (!inner[0].is_zero()) {
    throw InvalidComposition("inner series of a composition must have zero constant term");
  }
  const auto oc = outer.coefficients();
  TruncatedSeries acc(outer.order());
  for (std::size_t i = oc.size(); i-- > 0;) {
    acc = series_mul(acc, inner);
    acc[0] += oc[i];
  }
  return acc;
}

/// Multiplicative inverse mod t^(order+1).
inline TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
  if (a[0].is_zero()) throw NotInvertible("series with zero constant term has no reciprocal");
  const std::size_t n = a.order();
  const auto ac = a.coefficients();
  const Rational inv0 = Rational(1) / ac[0];
  TruncatedSeries b(n);
  b[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (!ac[j].is_zero()) acc += ac[j] * b[k - j];
    }
    b[k] = -(acc * inv0);
  }
  return b;
}

inline std::size_t checked_order(std::int64_t order) {
  if (order < 0) throw UsageError("series order must be nonnegative");
  return static_cast<std::size_t>(order);
}

/// e^t: coefficients 1/j!.
inline TruncatedSeries exp_series(std::int64_t order) {
  const std::size_t n = checked_order(order);
  TruncatedSeries s(n);
  for (std::size_t j = 0; j <= n; ++j) {
    s[j] = Rational(BigInt(1), factorial(static_cast<std::int64_t>(j)));
  }
  return s;
}

/// log(1+t): coefficients (-1)^(j-1)/j for j >= 1.
inline TruncatedSeries log1p_series(std::int64_t order) {
  const std::size_t n = checked_order(order);
  TruncatedSeries s(n);
  for (std::size_t j = 1; j <= n; ++j) s[j] = make_rational(j % 2 == 1 ? 1 : -1, j);
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
  const auto c = s.coefficients();
  os << "[";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << c[i];
  return os << "]";
}

}  // namespace polydc

#endif  // POLYDC_SERIES_HPP
