#ifndef EDLOCI_IDEALS_HPP
#define EDLOCI_IDEALS_HPP

#include <optional>
#include <string>
#include <vector>

#include "edloci/context.hpp"
#include "edloci/groebner.hpp"

namespace edloci {

/// Dense rows x cols matrix of polynomials over one ring, row-major.
class PolyMatrix {
 public:
  PolyMatrix(VarSet vars, std::size_t rows, std::size_t cols);
  PolyMatrix(VarSet vars, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const VarSet& vars() const { return vars_; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Polynomial p);

  PolyMatrix transposed() const;
  /// Appends the rows of `below`; column counts must match.
  PolyMatrix stacked(const PolyMatrix& below) const;

 private:
  VarSet vars_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

/// Outcome of a variety inclusion check V(A) subset V(B).
struct InclusionReport {
  bool holds = false;
  /// Only meaningful when holds: V(A) is a proper subset of V(B).
  bool strict = false;
  /// When !holds, a generator of B not in rad(A); when strict, a generator
  /// of A not in rad(B).
  std::optional<Polynomial> certificate;
  /// Point of V(B) \ V(A) when one was found on a small integer grid.
  std::optional<std::vector<Rational>> point;

  bool equal() const { return holds && !strict; }
};

/// Concatenation of generator lists with duplicates (up to scalar) removed.
Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// The ideal with its reduced Groebner basis (context's plain order) as
/// generators.
Ideal reduced(const Ideal& ideal, const Context& ctx = {});

/// I intersected with the subring of the retained variables, via a block
/// order with the dropped block first. The result lives over the retained
/// variables (original relative order) and caches its reduced basis.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop, const Context& ctx = {});
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop, const Context& ctx = {});

enum class SaturationMethod {
  /// Homogeneous ideals saturated by a variable use the grevlex
  /// last-variable division; everything else uses the auxiliary variable.
  kAuto,
  /// Always eliminate t from I + (1 - t*g).
  kRabinowitsch,
};

/// I : g^infinity.
Ideal saturate(const Ideal& ideal, const Polynomial& g, const Context& ctx = {},
               SaturationMethod method = SaturationMethod::kAuto);
/// I : J^infinity, the intersection of I : g^infinity over the generators g
/// of J. J must not be the zero ideal.
Ideal saturate(const Ideal& ideal, const Ideal& by, const Context& ctx = {},
               SaturationMethod method = SaturationMethod::kAuto);

/// I intersected with J, by eliminating t from t*I + (1-t)*J.
Ideal intersect(const Ideal& a, const Ideal& b, const Context& ctx = {});

/// All k x k minors (cofactor expansion memoized on column subsets), zero
/// determinants dropped. Order: row subsets then column subsets, both
/// lexicographic.
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k, Execution exec = Execution::kParallel);

/// Determinant of a square matrix by cofactor expansion along `row`.
Polynomial determinant(const PolyMatrix& m, std::size_t row = 0);

/// Rows indexed by generators, columns by variables.
PolyMatrix jacobian(const Ideal& ideal);

/// f in rad(I), decided by whether 1 lies in I + (1 - t*f).
bool radical_membership(const Polynomial& f, const Ideal& ideal, const Context& ctx = {});

/// Ideal of the closure of {a + b : a in V(I), b in V(J)}.
Ideal variety_sum(const Ideal& a, const Ideal& b, const Context& ctx = {});

/// Decides V(A) subset V(B) by radical membership of B's generators in A;
/// strictness by radical membership of A's generators in B.
InclusionReport variety_inclusion(const Ideal& a, const Ideal& b, const Context& ctx = {});

/// V(A) == V(B) (mutual radical containment).
bool same_variety(const Ideal& a, const Ideal& b, const Context& ctx = {});

}  // namespace edloci

#endif  // EDLOCI_IDEALS_HPP
