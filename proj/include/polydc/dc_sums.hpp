#ifndef POLYDC_DC_SUMS_HPP
#define POLYDC_DC_SUMS_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polydc/error.hpp"
#include "polydc/factorial.hpp"
#include "polydc/polynomial.hpp"
#include "polydc/rational.hpp"
#include "polydc/sequences.hpp"

namespace polydc {

/// Arguments of T_p(h, m) and T_p^{(k)}(h, m). An absent k selects the
/// classical sum.
struct DcParams {
  std::int64_t p = 1;
  std::int64_t h = 1;
  std::int64_t m = 1;
  std::optional<PolyIndex> k;
};

/// Two exact sides of an identity at one parameter point.
struct IdentitySides {
  Rational lhs;
  Rational rhs;
  bool holds = false;

  IdentitySides() = default;
  IdentitySides(Rational l, Rational r) : lhs(std::move(l)), rhs(std::move(r)), holds(lhs == rhs) {}
};

namespace detail {

inline void require_positive(std::int64_t v, const char* name) {
  if (v < 1) throw PreconditionError(std::string(name) + " must be a positive integer");
}

inline void require_odd(std::int64_t v, const char* name) {
  if (v < 1 || v % 2 == 0) throw PreconditionError(std::string(name) + " must be odd");
}

inline BigInt floor_div(std::int64_t a, std::int64_t b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), to_bigint(a).get_mpz_t(), to_bigint(b).get_mpz_t());
  return q;
}

/// 2 sum_{mu=1}^{m-1} (-1)^mu (mu/m) pbar(h mu / m).
inline Rational alternating_dc_sum(const Polynomial& periodic, std::int64_t h, std::int64_t m) {
  Rational acc;
  for (std::int64_t mu = 1; mu < m; ++mu) {
    Rational term = make_rational(mu, m) * bar_eval(periodic, make_rational(h * mu, m));
    if (mu % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return Rational(2) * acc;
}

/// 2 sum_nu C(p,nu) E_nu^{(k)} E_{p+1-nu} m^{nu-1}: the boundary term
/// separating m^p T_p^{(k)}(1,m) from S_p^{(k)}(1,m).
inline Rational unit_sum_boundary(PolyIndex k, std::int64_t p, std::int64_t m) {
  const auto ek = poly_euler_numbers(k, p);
  const auto e = euler_numbers(p + 1);
  Rational acc;
  for (std::int64_t nu = 0; nu <= p; ++nu) {
    acc += Rational(binomial(p, nu)) * ek[nu] * e[p + 1 - nu] * pow(Rational(m), nu - 1);
  }
  return Rational(2) * acc;
}

/// E_j^{(k)}(1) for j = 0..n.
inline std::vector<Rational> poly_euler_at_one(PolyIndex k, std::int64_t n) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n + 1));
  for (std::int64_t j = 0; j <= n; ++j) out.push_back(poly_euler_poly(k, j)(Rational(1)));
  return out;
}

}  // namespace detail

/// T_p(h, m) = 2 sum_{mu=1}^{m-1} (-1)^mu (mu/m) Ebar_p(h mu / m).
inline Rational dc_sum(std::int64_t p, std::int64_t h, std::int64_t m) {
  detail::require_positive(p, "p");
  detail::require_positive(h, "h");
  detail::require_positive(m, "m");
  return detail::alternating_dc_sum(euler_poly(p), h, m);
}

/// T_p^{(k)}(h, m): the same sum over the poly-Euler function of index k.
inline Rational poly_dc_sum(PolyIndex k, std::int64_t p, std::int64_t h, std::int64_t m) {
  detail::require_positive(p, "p");
  detail::require_positive(h, "h");
  detail::require_positive(m, "m");
  return detail::alternating_dc_sum(poly_euler_poly(k, p), h, m);
}

inline Rational dc_sum(const DcParams& params) {
  return params.k ? poly_dc_sum(*params.k, params.p, params.h, params.m)
                  : dc_sum(params.p, params.h, params.m);
}

/// S_p^{(k)}(1, m) = m^p T_p^{(k)}(1, m) minus the boundary term.
inline Rational reduced_unit_sum(PolyIndex k, std::int64_t p, std::int64_t m) {
  detail::require_positive(p, "p");
  detail::require_odd(m, "m");
  return pow(Rational(m), p) * poly_dc_sum(k, p, 1, m) - detail::unit_sum_boundary(k, p, m);
}

/// S_p^{(k)}(1, m) against
///   sum_nu C(p,nu) E_nu^{(k)} sum_{i=0}^{p-nu} C(p-nu+1, i) E_i m^{p-i}.
inline IdentitySides reduced_unit_sum_sides(PolyIndex k, std::int64_t p, std::int64_t m) {
  const Rational lhs = reduced_unit_sum(k, p, m);
  const auto ek = poly_euler_numbers(k, p);
  const auto e = euler_numbers(p);
  Rational rhs;
  for (std::int64_t nu = 0; nu <= p; ++nu) {
    Rational inner;
    for (std::int64_t i = 0; i <= p - nu; ++i) {
      inner += Rational(binomial(p - nu + 1, i)) * e[i] * pow(Rational(m), p - i);
    }
    rhs += Rational(binomial(p, nu)) * ek[nu] * inner;
  }
  return {lhs, rhs};
}

/// Odd p >= 3: S_p^{(k)}(1, m) against the form with E_{p-1} = 0 removed,
///   sum_{i=1}^{p-2} sum_{nu=0}^{p-i} C(p,nu) C(p-nu+1,i) E_nu^{(k)} E_i m^{p-i}
///   + (p+1) E_p + m^p E_p^{(k)}(1).
inline IdentitySides reduced_unit_sum_odd_sides(PolyIndex k, std::int64_t p, std::int64_t m) {
  if (p < 3 || p % 2 == 0) throw PreconditionError("p must be odd with p > 1");
  detail::require_odd(m, "m");
  const Rational lhs = reduced_unit_sum(k, p, m);
  const auto ek = poly_euler_numbers(k, p);
  const auto e = euler_numbers(p);
  Rational rhs;
  for (std::int64_t i = 1; i <= p - 2; ++i) {
    for (std::int64_t nu = 0; nu <= p - i; ++nu) {
      rhs += Rational(binomial(p, nu) * binomial(p - nu + 1, i)) * ek[nu] * e[i] *
             pow(Rational(m), p - i);
    }
  }
  rhs += Rational(p + 1) * e[p];
  rhs += pow(Rational(m), p) * poly_euler_poly(k, p)(Rational(1));
  return {lhs, rhs};
}

/// Odd p >= 3: m^p T_p^{(k)}(1, m) against
///   sum_{i=0}^{p} C(p,i) E_{p-i}^{(k)}(1) E_i m^{p-i}
///   + sum_{i=1}^{p} C(p,i-1) (E_{p-i+1}^{(k)}(1) - E_{p-i+1}^{(k)}) m^{p-i} E_i
///   + boundary term.
inline IdentitySides scaled_unit_sum_sides(PolyIndex k, std::int64_t p, std::int64_t m) {
  if (p < 3 || p % 2 == 0) throw PreconditionError("p must be odd with p > 1");
  detail::require_odd(m, "m");
  const Rational lhs = pow(Rational(m), p) * poly_dc_sum(k, p, 1, m);
  const auto ek = poly_euler_numbers(k, p);
  const auto ek1 = detail::poly_euler_at_one(k, p);
  const auto e = euler_numbers(p);
  Rational rhs;
  for (std::int64_t i = 0; i <= p; ++i) {
    rhs += Rational(binomial(p, i)) * ek1[p - i] * e[i] * pow(Rational(m), p - i);
  }
  for (std::int64_t i = 1; i <= p; ++i) {
    rhs += Rational(binomial(p, i - 1)) * (ek1[p - i + 1] - ek[p - i + 1]) *
           pow(Rational(m), p - i) * e[i];
  }
  rhs += detail::unit_sum_boundary(k, p, m);
  return {lhs, rhs};
}

namespace detail {

/// Shared body of the residue-sum identity; `residue_sign` selects the
/// weight on each mu term.
template <class SignFn>
IdentitySides residue_sum_impl(PolyIndex k, std::int64_t p, std::int64_t h, std::int64_t m,
                               SignFn residue_sign) {
  require_positive(p, "p");
  require_positive(h, "h");
  require_odd(m, "m");
  if (std::gcd(h, m) != 1) throw PreconditionError("h and m must be coprime");
  Rational lhs;
  for (std::int64_t mu = 0; mu < m; ++mu) {
    const Rational x = make_rational(mu, m);
    const BigInt shift = to_bigint(h) - floor_div(h * mu, m);
    Rational inner;
    for (std::int64_t s = 0; s <= p; ++s) {
      inner += Rational(binomial(p, s)) * pow(Rational(h), s) * poly_euler_poly(k, s)(x) *
               euler_poly(p - s)(Rational(shift));
    }
    if (residue_sign(mu) > 0) {
      lhs += inner;
    } else {
      lhs -= inner;
    }
  }
  lhs *= pow(Rational(m), p);
  const auto e = euler_numbers(p);
  const auto ek1 = poly_euler_at_one(k, p);
  Rational rhs;
  for (std::int64_t s = 0; s <= p; ++s) {
    rhs += Rational(binomial(p, s)) * pow(Rational(m * h), p - s) * e[s] * ek1[p - s];
  }
  return {lhs, rhs};
}

}  // namespace detail

/// Coprime h, odd m:
///   m^p sum_mu (-1)^mu sum_s C(p,s) h^s E_s^{(k)}(mu/m) E_{p-s}(h - [h mu/m])
/// against sum_s C(p,s) (mh)^{p-s} E_s E_{p-s}^{(k)}(1), with the weight
/// (-1)^mu. This form does not hold in general; see
/// residue_sum_sides_corrected.
inline IdentitySides residue_sum_sides(PolyIndex k, std::int64_t p, std::int64_t h,
                                       std::int64_t m) {
  return detail::residue_sum_impl(k, p, h, m, [](std::int64_t mu) { return sign_power(mu); });
}

/// The residue-sum identity with weight (-1)^{h mu + [h mu/m]}, the parity
/// of the least residue of h mu mod m. Holds for every coprime h and odd m.
inline IdentitySides residue_sum_sides_corrected(PolyIndex k, std::int64_t p, std::int64_t h,
                                                 std::int64_t m) {
  return detail::residue_sum_impl(k, p, h, m, [h, m](std::int64_t mu) {
    return sign_power(h * mu) * sign_power(detail::floor_div(h * mu, m));
  });
}

namespace detail {

inline void require_reciprocity_domain(std::int64_t p, std::int64_t h, std::int64_t m) {
  require_positive(p, "p");
  require_odd(h, "h");
  require_odd(m, "m");
}

/// Shared quadruple sum of the reciprocity law. With `corrected` the two
/// weight terms carry the parity of the floor shifts that the reindexing
/// of the alternating sum introduces.
inline Rational reciprocity_rhs_impl(PolyIndex k, std::int64_t p, std::int64_t h, std::int64_t m,
                                     bool corrected) {
  const std::int64_t mh = m * h;
  // C(p,l) w_k(p-l+1) / (p-l+1) (mh)^{l-1}, independent of mu and nu.
  std::vector<Rational> level_coeff;
  std::vector<Polynomial> euler;
  std::vector<Rational> m_pow, h_pow;
  for (std::int64_t l = 0; l <= p; ++l) {
    level_coeff.push_back(Rational(binomial(p, l)) * stirling_weight(k, p - l + 1) /
                          Rational(p - l + 1) * pow(Rational(mh), l - 1));
    euler.push_back(euler_poly(l));
    m_pow.push_back(pow(Rational(m), p - l));
    h_pow.push_back(pow(Rational(h), p - l));
  }
  Rational acc;
  for (std::int64_t mu = 0; mu < m; ++mu) {
    for (std::int64_t nu = 0; nu < h; ++nu) {
      const Rational arg = make_rational(nu, h) + make_rational(mu, m);
      const Rational frac = fractional_part(arg);
      int sign_mu = sign_power(mu + nu);
      int sign_nu = sign_mu;
      if (corrected) {
        const int wrap = sign_power(floor(arg));
        sign_mu *= wrap * sign_power(floor_div(h * mu, m));
        sign_nu *= wrap * sign_power(floor_div(m * nu, h));
      }
      const Rational mu_h(sign_mu * mu * h);
      const Rational nu_m(sign_nu * nu * m);
      for (std::int64_t l = 0; l <= p; ++l) {
        const Rational weight = mu_h * m_pow[l] + nu_m * h_pow[l];
        if (weight.is_zero()) continue;
        acc += level_coeff[l] * weight * euler[l](frac);
      }
    }
  }
  return Rational(2) * acc;
}

}  // namespace detail

/// m^p T_p^{(k)}(h, m) + h^p T_p^{(k)}(m, h), for odd h and m.
inline Rational reciprocity_lhs(PolyIndex k, std::int64_t p, std::int64_t h, std::int64_t m) {
  detail::require_reciprocity_domain(p, h, m);
  return pow(Rational(m), p) * poly_dc_sum(k, p, h, m) +
         pow(Rational(h), p) * poly_dc_sum(k, p, m, h);
}

/// Reciprocity law for the poly-Dedekind-type DC sums with right side
///   2 sum_{mu<m} sum_{l<=p} sum_{nu<h} sum_{j=1}^{p+1-l} (-1)^{mu+nu}
///     (mh)^{l-1} C(p,l) S1(p-l+1, j) / ((p-l+1) j^{k-1})
///     ((mu h) m^{p-l} + (nu m) h^{p-l}) Ebar_l(nu/h + mu/m).
/// The left side is built from the series route, the right side from the
/// Stirling table and ordinary Euler functions.
inline IdentitySides reciprocity_sides(PolyIndex k, std::int64_t p, std::int64_t h,
                                       std::int64_t m) {
  Rational lhs = reciprocity_lhs(k, p, h, m);
  return {std::move(lhs), detail::reciprocity_rhs_impl(k, p, h, m, false)};
}

/// Reciprocity with the term signs (-1)^{mu+nu+[h mu/m]+[mu/m+nu/h]} on the
/// (mu h) m^{p-l} part and (-1)^{mu+nu+[m nu/h]+[mu/m+nu/h]} on the
/// (nu m) h^{p-l} part. Holds for all odd h, m and every k.
inline IdentitySides reciprocity_sides_corrected(PolyIndex k, std::int64_t p, std::int64_t h,
                                                 std::int64_t m) {
  Rational lhs = reciprocity_lhs(k, p, h, m);
  return {std::move(lhs), detail::reciprocity_rhs_impl(k, p, h, m, true)};
}

/// k = 1 specialization of the reciprocity right side:
///   2 (mh)^{p-1} sum_mu sum_nu (-1)^{mu+nu} (mu h + nu m) Ebar_p(nu/h + mu/m).
inline Rational classical_reciprocity_rhs(std::int64_t p, std::int64_t h, std::int64_t m) {
  detail::require_reciprocity_domain(p, h, m);
  const Polynomial e_p = euler_poly(p);
  Rational acc;
  for (std::int64_t mu = 0; mu < m; ++mu) {
    for (std::int64_t nu = 0; nu < h; ++nu) {
      const Rational term =
          Rational(mu * h + nu * m) * bar_eval(e_p, make_rational(nu, h) + make_rational(mu, m));
      if ((mu + nu) % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
  }
  return Rational(2) * pow(Rational(m * h), p - 1) * acc;
}

/// T_1(h, m) against 2 sum_{mu<m} (-1)^mu ((mu/m)) ((h mu/m)). Not an
/// identity: the two sides differ already at h = 1, m = 3.
inline IdentitySides sawtooth_t1_sides(std::int64_t h, std::int64_t m) {
  detail::require_positive(h, "h");
  detail::require_positive(m, "m");
  Rational rhs;
  for (std::int64_t mu = 0; mu < m; ++mu) {
    const Rational term = sawtooth(make_rational(mu, m)) * sawtooth(make_rational(h * mu, m));
    if (mu % 2 == 0) {
      rhs += term;
    } else {
      rhs -= term;
    }
  }
  return {dc_sum(1, h, m), Rational(2) * rhs};
}

}  // namespace polydc

#endif  // POLYDC_DC_SUMS_HPP
