#ifndef POLYDC_POLYNOMIAL_HPP
#define POLYDC_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "polydc/rational.hpp"

namespace polydc {

/// Dense univariate polynomial over the rationals, ascending degree.
///
/// Trailing zero coefficients are stripped after every operation; the zero
/// polynomial is stored as a single zero coefficient so that `degree()` and
/// `==` are canonical.
class Polynomial {
 public:
  Polynomial() : coeffs_{Rational(0)} {}

  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

  static Polynomial constant(Rational c) { return Polynomial({std::move(c)}); }

  /// The monomial c*x^n.
  static Polynomial monomial(Rational c, std::size_t n) {
    std::vector<Rational> v(n + 1);
    v[n] = std::move(c);
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

  /// Degree; the zero polynomial reports 0.
  std::size_t degree() const { return coeffs_.size() - 1; }

  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Coefficient of x^i, zero beyond the degree.
  Rational coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }

  /// Horner evaluation.
  Rational operator()(const Rational& x) const {
    Rational acc = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
      acc *= x;
      acc += coeffs_[i];
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }

  Polynomial& operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void normalize() {
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.emplace_back(0);
  }

  std::vector<Rational> coeffs_;
};

/// Exact evaluation p(x).
inline Rational poly_eval(const Polynomial& p, const Rational& x) { return p(x); }

inline Polynomial derivative(const Polynomial& p) {
  const auto c = p.coefficients();
  if (c.size() == 1) return Polynomial();
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * Rational(i);
  return Polynomial(std::move(out));
}

/// Antiderivative with zero constant term.
inline Polynomial antiderivative(const Polynomial& p) {
  const auto c = p.coefficients();
  std::vector<Rational> out(c.size() + 1);
  for (std::size_t i = 0; i < c.size(); ++i) out[i + 1] = c[i] / Rational(i + 1);
  return Polynomial(std::move(out));
}

/// Integral of p over [a, b].
inline Rational integrate(const Polynomial& p, const Rational& a, const Rational& b) {
  const Polynomial prim = antiderivative(p);
  return prim(b) - prim(a);
}

/// p(scale * x + shift) as a polynomial in x.
inline Polynomial compose_affine(const Polynomial& p, const Rational& scale, const Rational& shift) {
  const Polynomial inner{shift, scale};
  const auto c = p.coefficients();
  Polynomial acc = Polynomial::constant(c.back());
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = acc * inner;
    acc += Polynomial::constant(c[i]);
  }
  return acc;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  const auto c = p.coefficients();
  os << "[";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << c[i];
  return os << "]";
}

}  // namespace polydc

#endif  // POLYDC_POLYNOMIAL_HPP
