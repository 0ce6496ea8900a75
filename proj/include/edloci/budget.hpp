#ifndef EDLOCI_BUDGET_HPP
#define EDLOCI_BUDGET_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>

namespace edloci {

/// Caps on S-pair processing and wall time, shared by every Groebner
/// computation of one job. Counters are atomic so concurrent kernels can
/// charge the same budget.
class Budget {
 public:
  static constexpr std::uint64_t kUnlimitedPairs = std::numeric_limits<std::uint64_t>::max();

  Budget() : Budget(kUnlimitedPairs, 0.0) {}

  /// max_seconds <= 0 disables the wall-clock cap.
  Budget(std::uint64_t max_pairs, double max_seconds)
      : max_pairs_(max_pairs), max_seconds_(max_seconds), start_(Clock::now()) {}

  Budget(const Budget&) = delete;
  Budget& operator=(const Budget&) = delete;

  /// Adds n processed pairs; throws BudgetExceeded past either cap.
  void charge_pairs(std::uint64_t n);

  /// Throws BudgetExceeded once the wall-clock cap has passed.
  void check_time() const;

  std::uint64_t pairs_used() const { return pairs_used_.load(std::memory_order_relaxed); }
  double seconds_used() const;

  std::uint64_t max_pairs() const { return max_pairs_; }
  double max_seconds() const { return max_seconds_; }

  /// Process-wide unlimited budget used when callers pass none.
  static Budget& unlimited();

 private:
  using Clock = std::chrono::steady_clock;
  std::uint64_t max_pairs_;
  double max_seconds_;
  Clock::time_point start_;
  std::atomic<std::uint64_t> pairs_used_{0};
};

}  // namespace edloci

#endif  // EDLOCI_BUDGET_HPP
