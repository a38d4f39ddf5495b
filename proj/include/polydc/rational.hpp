#ifndef POLYDC_RATIONAL_HPP
#define POLYDC_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "polydc/error.hpp"

namespace polydc {

using BigInt = mpz_class;

/// Builds a BigInt from any built-in integer without going through `long`
/// narrowing on platforms where `long` is 32 bits.
template <std::integral I>
BigInt to_bigint(I v) {
  if constexpr (sizeof(I) <= sizeof(long)) {
    if constexpr (std::is_signed_v<I>) {
      return BigInt(static_cast<long>(v));
    } else {
      return BigInt(static_cast<unsigned long>(v));
    }
  } else {
    return BigInt(std::to_string(v), 10);
  }
}

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I v) : value_(to_bigint(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  /// num/den in canonical form; throws DivisionByZero when den == 0.
  Rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw DivisionByZero();
    value_.get_num() = num;
    value_.get_den() = den;
    value_.canonicalize();
  }

  const BigInt& numerator() const { return value_.get_num(); }
  const BigInt& denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  const mpq_class& gmp() const { return value_; }

 private:
  mpq_class value_;
};

/// Canonical rational from an integer pair. den == 0 throws DivisionByZero.
template <std::integral I, std::integral J>
Rational make_rational(I num, J den) {
  return Rational(to_bigint(num), to_bigint(den));
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

/// Greatest integer not exceeding x (rounds toward negative infinity).
inline BigInt floor(const Rational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
  return q;
}

/// x - floor(x), always in [0, 1).
inline Rational fractional_part(const Rational& x) { return x - Rational(floor(x)); }

/// base^exponent for any signed exponent, with 0^0 = 1.
/// A zero base with negative exponent throws DivisionByZero.
inline Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent == 0) return Rational(1);
  if (base.is_zero()) {
    if (exponent < 0) throw DivisionByZero();
    return Rational(0);
  }
  const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                       : static_cast<unsigned long>(exponent);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
  // Already coprime; the constructor re-canonicalizes cheaply.
  return exponent < 0 ? Rational(den, num) : Rational(num, den);
}

/// (-1)^e for any integer e.
template <std::integral I>
constexpr int sign_power(I e) {
  return (e % 2 == 0) ? 1 : -1;
}

inline int sign_power(const BigInt& e) { return mpz_even_p(e.get_mpz_t()) ? 1 : -1; }

/// Canonical text form: "-3/2", "5", "0".
inline std::string to_string(const Rational& x) {
  if (x.is_integer()) return x.numerator().get_str();
  return x.numerator().get_str() + "/" + x.denominator().get_str();
}

inline std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << to_string(x);
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

/// Parses "[+-]digits" or "[+-]digits/digits". Anything else, including a
/// zero denominator, is a UsageError.
inline Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!detail::all_digits(num_text) || !detail::all_digits(den_text)) {
    throw UsageError("malformed rational: '" + std::string(text) + "'");
  }
  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw UsageError("malformed rational (zero denominator): '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

}  // namespace polydc

#endif  // POLYDC_RATIONAL_HPP
