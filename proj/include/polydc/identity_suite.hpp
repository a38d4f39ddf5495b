#ifndef POLYDC_IDENTITY_SUITE_HPP
#define POLYDC_IDENTITY_SUITE_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "polydc/dc_sums.hpp"
#include "polydc/error.hpp"
#include "polydc/factorial.hpp"
#include "polydc/polynomial.hpp"
#include "polydc/rational.hpp"
#include "polydc/sequences.hpp"
#include "polydc/stirling.hpp"

namespace polydc {

/// One verifier per identity. The string names are part of the CLI contract.
enum class VerifierId {
  eq4,
  eq18,
  thm1,
  cor2,
  thm3,
  thm4,
  cor5,
  thm6,
  cor7,
  lemma8,
  lemma9,
  eq40,
  thm10,
  thm11,
  thm12,
  thm13,
  thm14,
  cor15,
  k1_collapse,
  oracle_equivalence,
  sawtooth_t1_exploratory,
  thm13_corrected,
  thm14_corrected,
};

using ParamMap = std::map<std::string, std::int64_t>;

/// Declarative filter over a parameter point.
struct Constraint {
  enum class Kind { at_least, odd, coprime, less_than };

  Kind kind;
  std::string a;
  std::string b;
  std::int64_t bound = 0;

  static Constraint at_least(std::string name, std::int64_t v) {
    return {Kind::at_least, std::move(name), {}, v};
  }
  static Constraint odd(std::string name) { return {Kind::odd, std::move(name), {}, 0}; }
  static Constraint coprime(std::string x, std::string y) {
    return {Kind::coprime, std::move(x), std::move(y), 0};
  }
  static Constraint less_than(std::string x, std::string y) {
    return {Kind::less_than, std::move(x), std::move(y), 0};
  }

  bool admits(const ParamMap& p) const {
    const std::int64_t va = p.at(a);
    switch (kind) {
      case Kind::at_least:
        return va >= bound;
      case Kind::odd:
        return va % 2 != 0;
      case Kind::coprime:
        return std::gcd(va, p.at(b)) == 1;
      case Kind::less_than:
        return va < p.at(b);
    }
    return false;
  }

  std::string describe() const {
    switch (kind) {
      case Kind::at_least:
        return a + " >= " + std::to_string(bound);
      case Kind::odd:
        return a + " must be odd";
      case Kind::coprime:
        return "gcd(" + a + ", " + b + ") = 1";
      case Kind::less_than:
        return a + " < " + b;
    }
    return {};
  }
};

struct VerifierInfo {
  VerifierId id;
  std::string_view name;
  std::vector<std::string> params;
  std::vector<Constraint> preconditions;
  /// Polynomial identities accept an optional evaluation point "x".
  bool polynomial = false;
  /// Report-only: failures are expected and never count against a run.
  bool exploratory = false;
  std::string_view summary;
};

struct VerificationReport {
  VerifierId verifier;
  ParamMap params;
  Rational lhs;
  Rational rhs;
  bool holds = false;
  std::chrono::nanoseconds elapsed{0};
};

inline const std::vector<VerifierInfo>& verifier_registry() {
  using C = Constraint;
  static const std::vector<VerifierInfo> registry = {
      {VerifierId::eq4, "eq4", {"n", "l"}, {C::at_least("n", 1), C::at_least("l", 0)}, false, false,
       "2 sum_{j<n} (-1)^j j^l = (-1)^{n-1} E_l(n) + E_l"},
      {VerifierId::eq18, "eq18", {"n", "m"}, {C::at_least("n", 0), C::at_least("m", 1), C::odd("m")},
       true, false, "E_n(x) = m^n sum_i (-1)^i E_n((x+i)/m), m odd"},
      {VerifierId::thm1, "thm1", {"n", "k"}, {C::at_least("n", 1)}, false, false,
       "2 sum_m S1(n,m)/m^{k-1} = G_n^(k)(1) + G_n^(k)"},
      {VerifierId::cor2, "cor2", {"n", "k"}, {C::at_least("n", 1)}, false, false,
       "(2/n) sum_m S1(n,m)/m^{k-1} = E_{n-1}^(k)(1) + E_{n-1}^(k)"},
      {VerifierId::thm3, "thm3", {"n", "k"}, {C::at_least("n", 1)}, true, false,
       "E_{n-1}^(k)(x) = (1/n) sum_j sum_m C(n,j) S1(j,m)/m^{k-1} E_{n-j}(x)"},
      {VerifierId::thm4, "thm4", {"x", "n", "k"}, {C::at_least("x", 1), C::at_least("n", 1)}, false,
       false, "(-1)^{x-1} G_n^(k)(x) + G_n^(k) = Stirling triple sum"},
      {VerifierId::cor5, "cor5", {"x", "n", "k"}, {C::at_least("x", 1), C::at_least("n", 1)}, false,
       false, "(-1)^{x-1} E_{n-1}^(k)(x) + E_{n-1}^(k) = (1/n) Stirling triple sum"},
      {VerifierId::thm6, "thm6", {"n", "m", "k"},
       {C::at_least("n", 0), C::at_least("m", 1), C::odd("m")}, true, false,
       "G_n^(k)(x) from Genocchi polynomials G_l((s+x)/m), m odd"},
      {VerifierId::cor7, "cor7", {"n", "m", "k"},
       {C::at_least("n", 1), C::at_least("m", 1), C::odd("m")}, true, false,
       "E_{n-1}^(k)(x) from Euler polynomials E_l((s+x)/m), m odd"},
      {VerifierId::lemma8, "lemma8", {"p", "s", "k"}, {C::at_least("s", 1), C::less_than("s", "p")},
       false, false, "sum_nu C(p-nu+1,s) C(p,nu) E_nu^(k) = C(p,s) E_{p-s}^(k)(1) + C(p,s-1) E_{p-s+1}^(k)(1)"},
      {VerifierId::lemma9, "lemma9", {"p", "k"}, {C::at_least("p", 1)}, false, false,
       "int_0^1 x E_p^(k)(x) dx closed form"},
      {VerifierId::eq40, "eq40", {"k"}, {}, false, false, "E_1^(k)(1) - E_1^(k) = 1"},
      {VerifierId::thm10, "thm10", {"k", "p", "m"},
       {C::at_least("p", 1), C::at_least("m", 1), C::odd("m")}, false, false,
       "S_p^(k)(1,m) double-sum closed form"},
      {VerifierId::thm11, "thm11", {"k", "p", "m"},
       {C::at_least("p", 3), C::odd("p"), C::at_least("m", 1), C::odd("m")}, false, false,
       "S_p^(k)(1,m) closed form for odd p > 1"},
      {VerifierId::thm12, "thm12", {"k", "p", "m"},
       {C::at_least("p", 3), C::odd("p"), C::at_least("m", 1), C::odd("m")}, false, false,
       "m^p T_p^(k)(1,m) closed form for odd p > 1"},
      {VerifierId::thm13, "thm13", {"k", "p", "h", "m"},
       {C::at_least("p", 1), C::at_least("h", 1), C::at_least("m", 1), C::odd("m"),
        C::coprime("h", "m")},
       false, false, "residue sum with weight (-1)^mu"},
      {VerifierId::thm14, "thm14", {"k", "p", "h", "m"},
       {C::at_least("p", 1), C::at_least("h", 1), C::odd("h"), C::at_least("m", 1), C::odd("m")},
       false, false, "reciprocity law for T_p^(k) with signs (-1)^(mu+nu)"},
      {VerifierId::cor15, "cor15", {"p", "h", "m"},
       {C::at_least("p", 1), C::at_least("h", 1), C::odd("h"), C::at_least("m", 1), C::odd("m")},
       false, false, "reciprocity law for T_p (k = 1 specialization)"},
      {VerifierId::k1_collapse, "k1_collapse", {"p", "h", "m"},
       {C::at_least("p", 1), C::at_least("h", 1), C::at_least("m", 1)}, false, false,
       "T_p^(1)(h,m) = T_p(h,m)"},
      {VerifierId::oracle_equivalence, "oracle_equivalence", {"k", "n", "m"},
       {C::at_least("n", 0), C::at_least("m", 1), C::odd("m")}, true, false,
       "series, Stirling and distribution routes to E_n^(k)(x) agree"},
      {VerifierId::sawtooth_t1_exploratory, "sawtooth_t1_exploratory", {"h", "m"},
       {C::at_least("h", 1), C::at_least("m", 1)}, false, true,
       "T_1(h,m) vs 2 sum (-1)^mu ((mu/m))((h mu/m)); report only"},
      {VerifierId::thm13_corrected, "thm13_corrected", {"k", "p", "h", "m"},
       {C::at_least("p", 1), C::at_least("h", 1), C::at_least("m", 1), C::odd("m"),
        C::coprime("h", "m")},
       false, false, "residue sum with weight (-1)^{h mu + [h mu/m]}"},
      {VerifierId::thm14_corrected, "thm14_corrected", {"k", "p", "h", "m"},
       {C::at_least("p", 1), C::at_least("h", 1), C::odd("h"), C::at_least("m", 1), C::odd("m")},
       false, false, "reciprocity law with floor-parity signs"},
  };
  return registry;
}

inline const VerifierInfo& verifier_info(VerifierId id) {
  for (const auto& v : verifier_registry()) {
    if (v.id == id) return v;
  }
  throw UsageError("unregistered verifier");
}

inline std::string_view to_string(VerifierId id) { return verifier_info(id).name; }

inline std::string valid_verifier_names() {
  std::string out;
  for (const auto& v : verifier_registry()) {
    if (!out.empty()) out += ", ";
    out += v.name;
  }
  return out;
}

inline VerifierId parse_verifier_id(std::string_view name) {
  for (const auto& v : verifier_registry()) {
    if (v.name == name) return v.id;
  }
  throw UsageError("unknown verifier '" + std::string(name) + "'; valid ids: " +
                   valid_verifier_names());
}

/// 2 sum_{j=0}^{n-1} (-1)^j j^l with 0^0 = 1, by a plain loop.
inline Rational brute_alternating_power_sum(std::int64_t n, std::int64_t l) {
  if (n < 1 || l < 0) throw PreconditionError("need n >= 1 and l >= 0");
  BigInt acc(0);
  for (std::int64_t j = 0; j < n; ++j) {
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(l));
    if (j % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return Rational(BigInt(2 * acc));
}

namespace detail {

/// Compares two polynomials exactly and reports their values at an integer
/// point. The point starts at params["x"] (default 0) and is advanced past
/// any root of the difference, so holds <=> lhs == rhs stays true.
inline IdentitySides polynomial_sides(const Polynomial& lhs, const Polynomial& rhs,
                                      ParamMap& params) {
  std::int64_t x = 0;
  if (auto it = params.find("x"); it != params.end()) x = it->second;
  if (lhs != rhs) {
    while (lhs(Rational(x)) == rhs(Rational(x))) ++x;
  }
  params["x"] = x;
  return {lhs(Rational(x)), rhs(Rational(x))};
}

/// 2 sum_{m=1}^{n} sum_{j=1}^{m} sum_{i<x} (-1)^i i^{n-m} C(n,m) S1(m,j)/j^{k-1}.
inline Rational stirling_triple_sum(PolyIndex k, std::int64_t n, std::int64_t x) {
  Rational acc;
  for (std::int64_t m = 1; m <= n; ++m) {
    Rational powers;
    for (std::int64_t i = 0; i < x; ++i) {
      Rational t = pow(Rational(i), n - m);
      if (i % 2 == 0) {
        powers += t;
      } else {
        powers -= t;
      }
    }
    acc += powers * Rational(binomial(n, m)) * stirling_weight(k, m);
  }
  return Rational(2) * acc;
}

inline IdentitySides evaluate_sides(VerifierId id, ParamMap& prm) {
  auto k = [&] { return PolyIndex(prm.at("k")); };
  switch (id) {
    case VerifierId::eq4: {
      const auto n = prm.at("n");
      const auto l = prm.at("l");
      const auto e = euler_numbers(l);
      return {brute_alternating_power_sum(n, l),
              Rational(sign_power(n - 1)) * euler_poly(l)(Rational(n)) + e[l]};
    }
    case VerifierId::eq18: {
      const auto n = prm.at("n");
      const auto m = prm.at("m");
      const Polynomial e_n = euler_poly(n);
      Polynomial rhs;
      for (std::int64_t i = 0; i < m; ++i) {
        Polynomial shifted = compose_affine(e_n, make_rational(1, m), make_rational(i, m));
        if (i % 2 == 0) {
          rhs += shifted;
        } else {
          rhs -= shifted;
        }
      }
      return polynomial_sides(e_n, rhs * pow(Rational(m), n), prm);
    }
    case VerifierId::thm1: {
      const auto n = prm.at("n");
      const Polynomial g = poly_genocchi_poly(k(), n);
      return {Rational(2) * stirling_weight(k(), n), g(Rational(1)) + g(Rational(0))};
    }
    case VerifierId::cor2: {
      const auto n = prm.at("n");
      const Polynomial e = poly_euler_poly(k(), n - 1);
      return {Rational(2) * stirling_weight(k(), n) / Rational(n), e(Rational(1)) + e(Rational(0))};
    }
    case VerifierId::thm3: {
      const auto n = prm.at("n");
      return polynomial_sides(poly_euler_poly(k(), n - 1), poly_euler_via_stirling(k(), n - 1), prm);
    }
    case VerifierId::thm4: {
      const auto n = prm.at("n");
      const auto x = prm.at("x");
      const Polynomial g = poly_genocchi_poly(k(), n);
      return {Rational(sign_power(x - 1)) * g(Rational(x)) + g(Rational(0)),
              stirling_triple_sum(k(), n, x)};
    }
    case VerifierId::cor5: {
      const auto n = prm.at("n");
      const auto x = prm.at("x");
      const Polynomial e = poly_euler_poly(k(), n - 1);
      return {Rational(sign_power(x - 1)) * e(Rational(x)) + e(Rational(0)),
              stirling_triple_sum(k(), n, x) / Rational(n)};
    }
    case VerifierId::thm6: {
      const auto n = prm.at("n");
      const auto m = prm.at("m");
      Polynomial rhs;
      for (std::int64_t l = 0; l <= n; ++l) {
        const Polynomial g_l = genocchi_poly(l);
        Polynomial alternating;
        for (std::int64_t s = 0; s < m; ++s) {
          Polynomial shifted = compose_affine(g_l, make_rational(1, m), make_rational(s, m));
          if (s % 2 == 0) {
            alternating += shifted;
          } else {
            alternating -= shifted;
          }
        }
        rhs += alternating * (Rational(binomial(n, l)) * pow(Rational(m), l - 1) *
                              stirling_weight(k(), n - l + 1) / Rational(n - l + 1));
      }
      return polynomial_sides(poly_genocchi_poly(k(), n), rhs, prm);
    }
    case VerifierId::cor7: {
      const auto n = prm.at("n");
      return polynomial_sides(poly_euler_poly(k(), n - 1),
                              poly_euler_via_distribution(k(), n - 1, prm.at("m")), prm);
    }
    case VerifierId::lemma8: {
      const auto p = prm.at("p");
      const auto s = prm.at("s");
      const auto ek = poly_euler_numbers(k(), p);
      Rational lhs;
      for (std::int64_t nu = 0; nu <= p; ++nu) {
        lhs += Rational(binomial(p - nu + 1, s) * binomial(p, nu)) * ek[nu];
      }
      const Rational one(1);
      return {lhs, Rational(binomial(p, s)) * poly_euler_poly(k(), p - s)(one) +
                       Rational(binomial(p, s - 1)) * poly_euler_poly(k(), p - s + 1)(one)};
    }
    case VerifierId::lemma9: {
      const auto p = prm.at("p");
      const Rational one(1);
      const Polynomial x_times = Polynomial{Rational(0), Rational(1)} * poly_euler_poly(k(), p);
      const Rational lhs = integrate(x_times, Rational(0), one);
      const auto ek = poly_euler_numbers(k(), p + 2);
      const Rational rhs =
          poly_euler_poly(k(), p + 1)(one) / Rational(p + 1) -
          (poly_euler_poly(k(), p + 2)(one) - ek[p + 2]) / Rational((p + 1) * (p + 2));
      return {lhs, rhs};
    }
    case VerifierId::eq40: {
      const Polynomial e = poly_euler_poly(k(), 1);
      return {e(Rational(1)) - e(Rational(0)), Rational(1)};
    }
    case VerifierId::thm10:
      return reduced_unit_sum_sides(k(), prm.at("p"), prm.at("m"));
    case VerifierId::thm11:
      return reduced_unit_sum_odd_sides(k(), prm.at("p"), prm.at("m"));
    case VerifierId::thm12:
      return scaled_unit_sum_sides(k(), prm.at("p"), prm.at("m"));
    case VerifierId::thm13:
      return residue_sum_sides(k(), prm.at("p"), prm.at("h"), prm.at("m"));
    case VerifierId::thm14:
      return reciprocity_sides(k(), prm.at("p"), prm.at("h"), prm.at("m"));
    case VerifierId::cor15: {
      const auto p = prm.at("p");
      const auto h = prm.at("h");
      const auto m = prm.at("m");
      return {pow(Rational(m), p) * dc_sum(p, h, m) + pow(Rational(h), p) * dc_sum(p, m, h),
              classical_reciprocity_rhs(p, h, m)};
    }
    case VerifierId::k1_collapse: {
      const auto p = prm.at("p");
      const auto h = prm.at("h");
      const auto m = prm.at("m");
      return {poly_dc_sum(PolyIndex(1), p, h, m), dc_sum(p, h, m)};
    }
    case VerifierId::oracle_equivalence: {
      const auto n = prm.at("n");
      const Polynomial series = poly_euler_poly(k(), n);
      const Polynomial stirling = poly_euler_via_stirling(k(), n);
      const Polynomial distribution = poly_euler_via_distribution(k(), n, prm.at("m"));
      return polynomial_sides(series, stirling != series ? stirling : distribution, prm);
    }
    case VerifierId::sawtooth_t1_exploratory:
      return sawtooth_t1_sides(prm.at("h"), prm.at("m"));
    case VerifierId::thm13_corrected:
      return residue_sum_sides_corrected(k(), prm.at("p"), prm.at("h"), prm.at("m"));
    case VerifierId::thm14_corrected:
      return reciprocity_sides_corrected(k(), prm.at("p"), prm.at("h"), prm.at("m"));
  }
  throw UsageError("unregistered verifier");
}

inline void check_params(const VerifierInfo& info, const ParamMap& params) {
  for (const auto& name : info.params) {
    if (!params.contains(name)) {
      throw UsageError(std::string(info.name) + ": missing parameter '" + name + "'");
    }
  }
  for (const auto& [name, value] : params) {
    const bool known = std::find(info.params.begin(), info.params.end(), name) != info.params.end();
    if (!known && !(info.polynomial && name == "x")) {
      throw UsageError(std::string(info.name) + ": unknown parameter '" + name + "'");
    }
  }
}

inline const Constraint* first_violation(const VerifierInfo& info, const ParamMap& params) {
  for (const auto& c : info.preconditions) {
    if (!c.admits(params)) return &c;
  }
  return nullptr;
}

}  // namespace detail

/// Evaluates one identity at one parameter point. Missing or unknown
/// parameters are a UsageError; a point outside the identity's domain is a
/// PreconditionError naming the violated constraint.
inline VerificationReport verify(VerifierId id, ParamMap params) {
  const VerifierInfo& info = verifier_info(id);
  detail::check_params(info, params);
  if (const Constraint* c = detail::first_violation(info, params)) {
    throw PreconditionError(std::string(info.name) + ": precondition violated: " + c->describe());
  }
  const auto start = std::chrono::steady_clock::now();
  IdentitySides sides = detail::evaluate_sides(id, params);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  return {id, std::move(params), std::move(sides.lhs), std::move(sides.rhs), sides.holds,
          std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed)};
}

struct SweepSpec {
  VerifierId verifier;
  /// Candidate values per parameter; order and duplicates do not matter.
  std::map<std::string, std::vector<std::int64_t>> ranges;
  /// Extra filters on top of the verifier's own preconditions.
  std::vector<Constraint> constraints;
};

struct SweepResult {
  VerifierId verifier;
  bool exploratory = false;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Every admissible point, in lexicographic order of the parameter tuple.
  std::vector<VerificationReport> reports;
  /// The failing subset of `reports`, never truncated.
  std::vector<VerificationReport> failures;

  bool all_hold() const { return failed == 0; }
};

/// Admissible points of a sweep in canonical order. The verifier's
/// preconditions are applied as filters, so no point outside its domain is
/// ever evaluated.
inline std::vector<ParamMap> sweep_points(const SweepSpec& spec) {
  const VerifierInfo& info = verifier_info(spec.verifier);
  std::vector<std::string> names = info.params;
  if (info.polynomial && spec.ranges.contains("x")) names.push_back("x");
  for (const auto& [name, values] : spec.ranges) {
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw UsageError(std::string(info.name) + ": unknown parameter '" + name + "'");
    }
  }
  std::vector<std::vector<std::int64_t>> axes;
  for (const auto& name : names) {
    auto it = spec.ranges.find(name);
    if (it == spec.ranges.end() || it->second.empty()) {
      throw UsageError(std::string(info.name) + ": no values given for parameter '" + name + "'");
    }
    std::vector<std::int64_t> axis = it->second;
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
    axes.push_back(std::move(axis));
  }

  std::vector<ParamMap> points;
  std::vector<std::size_t> cursor(axes.size(), 0);
  while (true) {
    ParamMap point;
    for (std::size_t i = 0; i < axes.size(); ++i) point[names[i]] = axes[i][cursor[i]];
    const bool admissible =
        detail::first_violation(info, point) == nullptr &&
        std::all_of(spec.constraints.begin(), spec.constraints.end(),
                    [&](const Constraint& c) { return c.admits(point); });
    if (admissible) points.push_back(std::move(point));

    std::size_t axis = axes.size();
    while (axis > 0) {
      --axis;
      if (++cursor[axis] < axes[axis].size()) break;
      cursor[axis] = 0;
      if (axis == 0) return points;
    }
    if (axes.empty()) return points;
  }
}

/// Evaluates every admissible point, fanning out over `threads` workers
/// (0 = hardware concurrency). Output order is canonical regardless of
/// completion order.
inline SweepResult sweep(const SweepSpec& spec, unsigned threads = 0) {
  const std::vector<ParamMap> points = sweep_points(spec);
  if (points.empty()) {
    throw UsageError(std::string(to_string(spec.verifier)) +
                     ": no admissible parameter points after filtering");
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, points.size()));

  std::vector<VerificationReport> reports(points.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        reports[i] = verify(spec.verifier, points[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = points.size();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  SweepResult result;
  result.verifier = spec.verifier;
  result.exploratory = verifier_info(spec.verifier).exploratory;
  result.total = reports.size();
  for (const auto& r : reports) {
    if (r.holds) {
      ++result.passed;
    } else {
      ++result.failed;
      result.failures.push_back(r);
    }
  }
  result.reports = std::move(reports);
  return result;
}

}  // namespace polydc

#endif  // POLYDC_IDENTITY_SUITE_HPP
