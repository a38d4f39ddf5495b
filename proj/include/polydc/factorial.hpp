#ifndef POLYDC_FACTORIAL_HPP
#define POLYDC_FACTORIAL_HPP

#include <cstdint>
#include <deque>
#include <mutex>
#include <shared_mutex>

#include "polydc/error.hpp"
#include "polydc/rational.hpp"

namespace polydc {

namespace detail {

/// Grow-only factorial table. Entries are never moved once stored, so
/// references handed out stay valid for the life of the process.
class FactorialTable {
 public:
  const BigInt& get(std::uint64_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < table_.size()) return table_[n];
    }
    std::unique_lock lock(mutex_);
    while (table_.size() <= n) {
      const auto next = static_cast<unsigned long>(table_.size());
      table_.push_back(table_.back() * next);
    }
    return table_[n];
  }

  static FactorialTable& instance() {
    static FactorialTable table;
    return table;
  }

 private:
  FactorialTable() { table_.emplace_back(1); }

  std::shared_mutex mutex_;
  std::deque<BigInt> table_;
};

}  // namespace detail

/// n!, cached.
inline const BigInt& factorial(std::int64_t n) {
  if (n < 0) throw UsageError("factorial of a negative number");
  return detail::FactorialTable::instance().get(static_cast<std::uint64_t>(n));
}

/// C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace polydc

#endif  // POLYDC_FACTORIAL_HPP
