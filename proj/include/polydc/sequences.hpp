#ifndef POLYDC_SEQUENCES_HPP
#define POLYDC_SEQUENCES_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polydc/error.hpp"
#include "polydc/factorial.hpp"
#include "polydc/polynomial.hpp"
#include "polydc/rational.hpp"
#include "polydc/series.hpp"
#include "polydc/stirling.hpp"

namespace polydc {

/// Index k of the polyexponential function Ei_k. Any integer is allowed.
struct PolyIndex {
  std::int64_t value;

  constexpr explicit PolyIndex(std::int64_t k) : value(k) {}
  friend constexpr auto operator<=>(PolyIndex, PolyIndex) = default;
};

enum class SequenceKind { euler, genocchi, poly_genocchi, poly_euler };

namespace detail {

inline std::size_t checked_degree(std::int64_t n, const char* what) {
  if (n < 0) throw UsageError(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(n);
}

/// 2/(e^t + 1) mod t^(order+1).
inline TruncatedSeries two_over_exp_plus_one(std::size_t order) {
  TruncatedSeries denom = exp_series(static_cast<std::int64_t>(order));
  denom[0] += Rational(1);
  return Rational(2) * series_reciprocal(denom);
}

/// E_n = delta_{0,n} - (1/2) sum_{l<n} C(n,l) E_l, from E_n(1) + E_n = 2 delta_{0,n}.
inline std::vector<Rational> euler_numbers_by_recurrence(std::size_t max_n) {
  std::vector<Rational> e;
  e.reserve(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    Rational acc;
    for (std::size_t l = 0; l < n; ++l) {
      acc += Rational(binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(l))) * e[l];
    }
    e.push_back(Rational(n == 0 ? 1 : 0) - acc / Rational(2));
  }
  return e;
}

inline std::vector<Rational> compute_euler_numbers(std::size_t max_n) {
  auto by_series = two_over_exp_plus_one(max_n).egf_coefficients();
  if (by_series != euler_numbers_by_recurrence(max_n)) {
    throw InternalError("Euler numbers: series and recurrence routes disagree");
  }
  return by_series;
}

/// 2t/(e^t + 1).
inline std::vector<Rational> compute_genocchi_numbers(std::size_t max_n) {
  const TruncatedSeries half = two_over_exp_plus_one(max_n);
  TruncatedSeries shifted(max_n);
  for (std::size_t j = 1; j <= max_n; ++j) shifted[j] = half[j - 1];
  return shifted.egf_coefficients();
}

}  // namespace detail

/// Truncation of Ei_k(x) = sum_{n>=1} x^n / (n^k (n-1)!). For k <= 0 the
/// factor 1/n^k is the integer n^{-k}.
inline TruncatedSeries polyexp_series(PolyIndex k, std::int64_t order) {
  const std::size_t n_max = checked_order(order);
  TruncatedSeries s(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    s[n] = pow(Rational(n), -k.value) /
           Rational(factorial(static_cast<std::int64_t>(n) - 1));
  }
  return s;
}

namespace detail {

/// 2 Ei_k(log(1+t)) / (e^t + 1), then egf extraction.
inline std::vector<Rational> compute_poly_genocchi_numbers(PolyIndex k, std::size_t max_n) {
  const auto order = static_cast<std::int64_t>(max_n);
  const TruncatedSeries ei_log = series_compose(polyexp_series(k, order), log1p_series(order));
  return series_mul(ei_log, two_over_exp_plus_one(max_n)).egf_coefficients();
}

/// sum_{l=0}^{n} C(n,l) a_l x^{n-l}.
inline Polynomial binomial_convolution(std::span<const Rational> numbers, std::size_t n) {
  std::vector<Rational> coeffs(n + 1);
  const auto nn = static_cast<std::int64_t>(n);
  for (std::size_t l = 0; l <= n; ++l) {
    coeffs[n - l] = Rational(binomial(nn, static_cast<std::int64_t>(l))) * numbers[l];
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace detail

/// Memo of number prefixes and polynomials per (kind, k). Prefixes only
/// ever grow. Concurrent readers share the lock; a miss may be computed by
/// more than one thread, and since results are exact the stored value is
/// the same whichever thread wins.
class SequenceCache {
 public:
  /// The first max_n + 1 numbers of the sequence.
  std::vector<Rational> numbers(SequenceKind kind, PolyIndex k, std::size_t max_n) {
    const Key key = make_key(kind, k);
    {
      std::shared_lock lock(mutex_);
      auto it = numbers_.find(key);
      if (it != numbers_.end() && it->second.size() > max_n) {
        return {it->second.begin(), it->second.begin() + static_cast<std::ptrdiff_t>(max_n + 1)};
      }
    }
    std::vector<Rational> fresh = compute_numbers(kind, k, max_n);
    std::unique_lock lock(mutex_);
    auto& slot = numbers_[key];
    if (slot.size() < fresh.size()) slot = fresh;
    return fresh;
  }

  /// The degree-n polynomial of the sequence, built from cached numbers.
  Polynomial polynomial(SequenceKind kind, PolyIndex k, std::size_t n) {
    const Key key = make_key(kind, k);
    {
      std::shared_lock lock(mutex_);
      auto it = polys_.find(key);
      if (it != polys_.end() && n < it->second.size() && it->second[n]) return *it->second[n];
    }
    Polynomial fresh = build_polynomial(kind, k, n);
    std::unique_lock lock(mutex_);
    auto& row = polys_[key];
    if (row.size() <= n) row.resize(n + 1);
    if (!row[n]) row[n] = fresh;
    return fresh;
  }

  /// Largest cached index for (kind, k), if any.
  std::optional<std::size_t> high_water(SequenceKind kind, PolyIndex k) const {
    std::shared_lock lock(mutex_);
    auto it = numbers_.find(make_key(kind, k));
    if (it == numbers_.end() || it->second.empty()) return std::nullopt;
    return it->second.size() - 1;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    numbers_.clear();
    polys_.clear();
  }

  static SequenceCache& global() {
    static SequenceCache cache;
    return cache;
  }

  /// Uncached computation; the cache stores exactly what this returns.
  std::vector<Rational> compute_numbers(SequenceKind kind, PolyIndex k, std::size_t max_n) {
    switch (kind) {
      case SequenceKind::euler:
        return detail::compute_euler_numbers(max_n);
      case SequenceKind::genocchi:
        return detail::compute_genocchi_numbers(max_n);
      case SequenceKind::poly_genocchi:
        return detail::compute_poly_genocchi_numbers(k, max_n);
      case SequenceKind::poly_euler: {
        const auto g = numbers(SequenceKind::poly_genocchi, k, max_n + 1);
        std::vector<Rational> e;
        e.reserve(max_n + 1);
        for (std::size_t n = 0; n <= max_n; ++n) e.push_back(g[n + 1] / Rational(n + 1));
        return e;
      }
    }
    throw UsageError("unknown sequence kind");
  }

 private:
  using Key = std::pair<SequenceKind, std::int64_t>;

  static Key make_key(SequenceKind kind, PolyIndex k) {
    const bool indexed = kind == SequenceKind::poly_genocchi || kind == SequenceKind::poly_euler;
    return {kind, indexed ? k.value : 0};
  }

  Polynomial build_polynomial(SequenceKind kind, PolyIndex k, std::size_t n) {
    const auto nums = numbers(kind, k, n);
    Polynomial p = detail::binomial_convolution(nums, n);
    if (kind == SequenceKind::poly_euler) {
      // The binomial form must match G_{n+1}^{(k)}(x) / (n+1).
      Polynomial quotient = polynomial(SequenceKind::poly_genocchi, k, n + 1);
      quotient *= Rational(1) / Rational(n + 1);
      if (quotient != p) {
        throw InternalError("poly-Euler polynomial: binomial and quotient forms disagree");
      }
    }
    return p;
  }

  mutable std::shared_mutex mutex_;
  std::map<Key, std::vector<Rational>> numbers_;
  std::map<Key, std::vector<std::optional<Polynomial>>> polys_;
};

/// S1(n, m) weighted by 1/m^{k-1}, summed over m = 1..n.
inline Rational stirling_weight(PolyIndex k, std::int64_t n) {
  Rational acc;
  for (std::int64_t m = 1; m <= n; ++m) {
    acc += Rational(stirling1(n, m)) * pow(Rational(m), 1 - k.value);
  }
  return acc;
}

/// Euler numbers E_0..E_max_n from 2/(e^t+1).
inline std::vector<Rational> euler_numbers(std::int64_t max_n) {
  return SequenceCache::global().numbers(SequenceKind::euler, PolyIndex(1),
                                         detail::checked_degree(max_n, "max_n"));
}

inline Polynomial euler_poly(std::int64_t n) {
  return SequenceCache::global().polynomial(SequenceKind::euler, PolyIndex(1),
                                            detail::checked_degree(n, "degree"));
}

/// Genocchi numbers G_0..G_max_n from 2t/(e^t+1).
inline std::vector<Rational> genocchi_numbers(std::int64_t max_n) {
  return SequenceCache::global().numbers(SequenceKind::genocchi, PolyIndex(1),
                                         detail::checked_degree(max_n, "max_n"));
}

inline Polynomial genocchi_poly(std::int64_t n) {
  return SequenceCache::global().polynomial(SequenceKind::genocchi, PolyIndex(1),
                                            detail::checked_degree(n, "degree"));
}

inline std::vector<Rational> poly_genocchi_numbers(PolyIndex k, std::int64_t max_n) {
  return SequenceCache::global().numbers(SequenceKind::poly_genocchi, k,
                                         detail::checked_degree(max_n, "max_n"));
}

inline Polynomial poly_genocchi_poly(PolyIndex k, std::int64_t n) {
  return SequenceCache::global().polynomial(SequenceKind::poly_genocchi, k,
                                            detail::checked_degree(n, "degree"));
}

/// E_n^{(k)} = G_{n+1}^{(k)} / (n+1).
inline std::vector<Rational> poly_euler_numbers(PolyIndex k, std::int64_t max_n) {
  return SequenceCache::global().numbers(SequenceKind::poly_euler, k,
                                         detail::checked_degree(max_n, "max_n"));
}

inline Polynomial poly_euler_poly(PolyIndex k, std::int64_t n) {
  return SequenceCache::global().polynomial(SequenceKind::poly_euler, k,
                                            detail::checked_degree(n, "degree"));
}

/// E_n^{(k)}(x) from Stirling numbers and ordinary Euler polynomials:
///   (1/(n+1)) sum_{j=1}^{n+1} C(n+1, j) w_k(j) E_{n+1-j}(x),
/// where w_k(j) = sum_m S1(j, m) / m^{k-1}. Independent of the series route.
inline Polynomial poly_euler_via_stirling(PolyIndex k, std::int64_t n) {
  const std::size_t deg = detail::checked_degree(n, "degree");
  const std::int64_t top = static_cast<std::int64_t>(deg) + 1;
  Polynomial acc;
  for (std::int64_t j = 1; j <= top; ++j) {
    acc += euler_poly(top - j) * (Rational(binomial(top, j)) * stirling_weight(k, j));
  }
  return acc * (Rational(1) / Rational(top));
}

/// E_n^{(k)}(x) assembled from E_l((s + x)/m), s = 0..m-1, for odd m >= 1:
///   sum_{l=0}^{n} C(n,l) m^l w_k(n+1-l)/(n+1-l) sum_s (-1)^s E_l((s+x)/m).
inline Polynomial poly_euler_via_distribution(PolyIndex k, std::int64_t n, std::int64_t m) {
  const std::size_t deg = detail::checked_degree(n, "degree");
  if (m < 1 || m % 2 == 0) throw PreconditionError("m must be an odd positive integer");
  const auto nn = static_cast<std::int64_t>(deg);
  const Rational inv_m = make_rational(1, m);
  Polynomial acc;
  for (std::int64_t l = 0; l <= nn; ++l) {
    const Polynomial e_l = euler_poly(l);
    Polynomial alternating;
    for (std::int64_t s = 0; s < m; ++s) {
      Polynomial shifted = compose_affine(e_l, inv_m, make_rational(s, m));
      if (s % 2 == 0) {
        alternating += shifted;
      } else {
        alternating -= shifted;
      }
    }
    const Rational weight = Rational(binomial(nn, l)) * pow(Rational(m), l) *
                            stirling_weight(k, nn + 1 - l) / Rational(nn + 1 - l);
    acc += alternating * weight;
  }
  return acc;
}

/// p(x - floor(x)): the 1-periodic extension of p restricted to [0, 1).
inline Rational bar_eval(const Polynomial& p, const Rational& x) { return p(fractional_part(x)); }

/// ((x)): x - floor(x) - 1/2 off the integers, 0 on them.
inline Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return fractional_part(x) - make_rational(1, 2);
}

}  // namespace polydc

#endif  // POLYDC_SEQUENCES_HPP
