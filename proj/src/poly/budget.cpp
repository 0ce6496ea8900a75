#include "edloci/budget.hpp"

#include <string>

#include "edloci/errors.hpp"

namespace edloci {

void Budget::charge_pairs(std::uint64_t n) {
  std::uint64_t used = pairs_used_.fetch_add(n, std::memory_order_relaxed) + n;
  if (used > max_pairs_) {
    throw BudgetExceeded("S-pair budget of " + std::to_string(max_pairs_) + " exceeded", used,
                         seconds_used());
  }
  check_time();
}

void Budget::check_time() const {
  if (max_seconds_ <= 0.0) return;
  double s = seconds_used();
  if (s > max_seconds_) {
    throw BudgetExceeded("time budget of " + std::to_string(max_seconds_) + " s exceeded",
                         pairs_used(), s);
  }
}

double Budget::seconds_used() const {
  return std::chrono::duration<double>(Clock::now() - start_).count();
}

Budget& Budget::unlimited() {
  static Budget b;
  return b;
}

}  // namespace edloci
