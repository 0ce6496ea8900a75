#ifndef EDLOCI_CONTEXT_HPP
#define EDLOCI_CONTEXT_HPP

#include "edloci/budget.hpp"
#include "edloci/monomial.hpp"

namespace edloci {

/// How Groebner kernels schedule independent work. Both produce the same
/// reduced basis; kSerial is the reference implementation.
enum class Execution { kSerial, kParallel };

/// Settings threaded through every ideal computation of one job.
struct Context {
  Budget* budget = &Budget::unlimited();
  Execution execution = Execution::kParallel;
  /// Base order for plain bases and for both blocks of elimination orders.
  MonomialOrder::Kind base_order = MonomialOrder::Kind::kGrevlex;

  MonomialOrder plain_order() const {
    return base_order == MonomialOrder::Kind::kLex ? MonomialOrder::lex() : MonomialOrder::grevlex();
  }
  MonomialOrder elimination_order(std::size_t split) const {
    return MonomialOrder::block(split, base_order, base_order);
  }
};

}  // namespace edloci

#endif  // EDLOCI_CONTEXT_HPP
