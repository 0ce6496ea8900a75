#ifndef EDLOCI_GROEBNER_HPP
#define EDLOCI_GROEBNER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "edloci/context.hpp"
#include "edloci/polynomial.hpp"

namespace edloci {

/// Reduced Groebner basis: monic elements, no term of any element divisible
/// by another element's leading monomial, sorted by ascending leading
/// monomial. The unit ideal has basis {1}; the zero ideal has an empty basis.
class GroebnerBasis {
 public:
  GroebnerBasis(VarSet vars, MonomialOrder order, std::vector<Polynomial> basis)
      : vars_(std::move(vars)), order_(order), basis_(std::move(basis)) {}

  const VarSet& vars() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }

  bool is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }
  bool is_zero() const { return basis_.empty(); }

  /// Ideal membership via normal form.
  bool contains(const Polynomial& p) const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.vars_ == b.vars_ && a.order_ == b.order_ && a.basis_ == b.basis_;
  }

 private:
  VarSet vars_;
  MonomialOrder order_;
  std::vector<Polynomial> basis_;
};

/// Finitely generated ideal of Q[vars]. Zero generators are dropped on
/// construction. An Ideal may carry a Groebner basis computed along with
/// it, which groebner_basis() reuses for the same order.
class Ideal {
 public:
  explicit Ideal(VarSet vars, std::vector<Polynomial> generators = {});
  /// The ideal generated by a basis, with that basis cached.
  explicit Ideal(const GroebnerBasis& gb);

  static Ideal unit(VarSet vars);

  const VarSet& vars() const { return vars_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

  std::shared_ptr<const GroebnerBasis> cached_basis(const MonomialOrder& order) const;

 private:
  VarSet vars_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<const GroebnerBasis> cached_gb_;
};

/// Counters from one Buchberger run.
struct GroebnerStats {
  std::uint64_t pairs_processed = 0;
  std::uint64_t pairs_pruned = 0;
  std::uint64_t zero_reductions = 0;
};

/// Buchberger's algorithm with the product and chain criteria and
/// sugar-degree pair selection. Throws BudgetExceeded when the context's
/// caps are hit; never returns a partial basis.
GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& order,
                             const Context& ctx = {}, GroebnerStats* stats = nullptr);

/// Remainder of p on division by G (unique because G is a Groebner basis).
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G);

/// S-polynomial of f and g in f's monomial order.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Dimension of V(I) from maximal independent sets of the leading-term
/// ideal; nullopt for the unit ideal (empty variety).
std::optional<int> krull_dimension(const Ideal& ideal, const Context& ctx = {});
std::optional<int> krull_dimension(const GroebnerBasis& gb);

/// Number of standard monomials of a zero-dimensional ideal (solutions
/// counted with multiplicity). Unit ideal gives 0; throws DimensionError
/// for positive-dimensional input.
std::uint64_t quotient_dimension(const Ideal& ideal, const Context& ctx = {});
std::uint64_t quotient_dimension(const GroebnerBasis& gb);

}  // namespace edloci

#endif  // EDLOCI_GROEBNER_HPP
