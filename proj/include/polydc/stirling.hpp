#ifndef POLYDC_STIRLING_HPP
#define POLYDC_STIRLING_HPP

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "polydc/error.hpp"
#include "polydc/rational.hpp"

namespace polydc {

/// Signed Stirling numbers of the first kind S1(n, m), 0 <= m <= n <= max_n,
/// filled by S1(n+1, m) = S1(n, m-1) - n*S1(n, m).
class Stirling1Table {
 public:
  explicit Stirling1Table(std::size_t max_n = 0) { extend(max_n); }

  std::size_t max_n() const { return rows_.size() - 1; }

  /// Zero when m > n. n must not exceed max_n().
  const BigInt& operator()(std::size_t n, std::size_t m) const {
    static const BigInt zero(0);
    if (m > n) return zero;
    return rows_.at(n)[m];
  }

  const std::vector<BigInt>& row(std::size_t n) const { return rows_.at(n); }

  void extend(std::size_t max_n) {
    if (rows_.empty()) rows_.push_back({BigInt(1)});
    while (rows_.size() <= max_n) {
      const std::size_t n = rows_.size() - 1;
      const auto& prev = rows_.back();
      std::vector<BigInt> next(n + 2);
      const BigInt scale(static_cast<unsigned long>(n));
      for (std::size_t m = 1; m <= n + 1; ++m) {
        next[m] = prev[m - 1];
        if (m <= n) next[m] -= scale * prev[m];
      }
      rows_.push_back(std::move(next));
    }
  }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

namespace detail {

class SharedStirling {
 public:
  BigInt get(std::size_t n, std::size_t m) {
    {
      std::shared_lock lock(mutex_);
      if (n <= table_.max_n()) return table_(n, m);
    }
    std::unique_lock lock(mutex_);
    table_.extend(n);
    return table_(n, m);
  }

  static SharedStirling& instance() {
    static SharedStirling s;
    return s;
  }

 private:
  std::shared_mutex mutex_;
  Stirling1Table table_;
};

}  // namespace detail

/// S1(n, m), signed; 0 when m > n. Negative arguments are a UsageError.
inline BigInt stirling1(std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 0) throw UsageError("stirling1 arguments must be nonnegative");
  if (m > n) return BigInt(0);
  return detail::SharedStirling::instance().get(static_cast<std::size_t>(n),
                                                static_cast<std::size_t>(m));
}

}  // namespace polydc

#endif  // POLYDC_STIRLING_HPP
