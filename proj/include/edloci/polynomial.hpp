#ifndef EDLOCI_POLYNOMIAL_HPP
#define EDLOCI_POLYNOMIAL_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edloci/monomial.hpp"
#include "edloci/rational.hpp"
#include "edloci/varset.hpp"

namespace edloci {

/// Sparse multivariate polynomial over Q.
///
/// Terms are kept strictly descending in the polynomial's monomial order,
/// with no zero coefficients and no repeated monomials; the zero polynomial
/// has no terms. Values are immutable after construction.
class Polynomial {
 public:
  struct Term {
    Rational coef;
    Monomial mono;
  };

  Polynomial() = default;
  explicit Polynomial(VarSet vars, MonomialOrder order = MonomialOrder::grevlex());

  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(VarSet vars, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial constant(VarSet vars, const Rational& c,
                             MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial variable(VarSet vars, std::size_t index,
                             MonomialOrder order = MonomialOrder::grevlex());

  const VarSet& vars() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Requires a nonzero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coefficient() const { return leading_term().coef; }

  /// Largest total degree of a term; -1 for zero.
  int total_degree() const;
  /// Zero counts as homogeneous.
  bool is_homogeneous() const;
  /// Bit mask of variables that occur.
  std::uint64_t support() const;
  bool uses_variable(std::size_t index) const { return (support() >> index) & 1U; }

  /// Same polynomial re-sorted for another order.
  Polynomial with_order(const MonomialOrder& order) const;
  /// Same terms over a renamed ring of equal size.
  Polynomial with_vars(const VarSet& vars) const;
  /// Moves variable i to target index map[i] of a (usually larger) ring.
  Polynomial remap(const VarSet& target, std::span<const std::size_t> map,
                   const MonomialOrder& order) const;
  /// Replaces variable i by images[i]; all images share one ring.
  Polynomial substitute(std::span<const Polynomial> images) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }
  Polynomial mul_term(const Rational& c, const Monomial& m) const;

  /// Throws UsageError for a negative exponent.
  Polynomial pow(long e) const;

  /// Formal partial derivative with respect to variable `index`.
  Polynomial differentiate(std::size_t index) const;

  GaussianRational evaluate(std::span<const GaussianRational> point) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Integer coefficients with content 1 and positive leading coefficient.
  Polynomial normalized() const;
  /// Leading coefficient 1 (zero stays zero).
  Polynomial monic() const;

  /// "4*x1^3 - 27*x2^2*x3"; "0" for zero. Parsable by parse_polynomial.
  std::string to_string() const;

  /// Same ring and the same set of terms, regardless of storage order.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(VarSet vars, MonomialOrder order, std::vector<Term> sorted_terms)
      : vars_(std::move(vars)), order_(order), terms_(std::move(sorted_terms)) {}
  void canonicalize();

  VarSet vars_;
  MonomialOrder order_ = MonomialOrder::grevlex();
  std::vector<Term> terms_;
};

/// Quotient and remainder of division by a single divisor in the
/// divisor's monomial order.
struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};
DivisionResult divide(const Polynomial& p, const Polynomial& divisor);

/// p / divisor; throws UsageError if the division leaves a remainder.
Polynomial divide_exact(const Polynomial& p, const Polynomial& divisor);

}  // namespace edloci

#endif  // EDLOCI_POLYNOMIAL_HPP
