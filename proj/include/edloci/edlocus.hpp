#ifndef EDLOCI_EDLOCUS_HPP
#define EDLOCI_EDLOCUS_HPP

#include <cstdint>
#include <optional>

#include "edloci/ideals.hpp"

namespace edloci {

/// Affine cone X given by homogeneous generators of a proper, nonzero ideal.
/// The codimension is computed, never supplied.
class ConeInput {
 public:
  /// Throws PreconditionError for non-homogeneous generators, the zero
  /// ideal or the unit ideal.
  static ConeInput make(const Ideal& ideal, const Context& ctx = {});

  const VarSet& vars() const { return ideal_.vars(); }
  const Ideal& ideal() const { return ideal_; }
  const std::vector<Polynomial>& generators() const { return ideal_.generators(); }
  int codim() const { return codim_; }
  std::size_t ambient_dimension() const { return vars().size(); }
  /// All generators linear, i.e. the Jacobian is constant.
  bool is_linear_space() const;

 private:
  ConeInput(Ideal ideal, int codim) : ideal_(std::move(ideal)), codim_(codim) {}
  Ideal ideal_;
  int codim_;
};

/// Closure of the pairs (u, x) with x a regular critical point of the
/// squared distance to u. The ring is the x-block followed by the u-block.
struct EdCorrespondence {
  Ideal ideal;
  VarSet x_vars;
  VarSet u_vars;
  int codim_used = 0;
};

/// An elimination output over the ambient variables.
struct Locus {
  Ideal ideal;
  /// Set when the output had several generators and no radical was taken.
  bool maybe_not_radical = false;
};

struct TheoremReport {
  enum class Kind { kDataSingular, kDataIsotropic };
  Kind theorem;
  /// V(dual) subset V(locus).
  InclusionReport inclusion1;
  /// V(locus) subset V(dual + Sing X) resp. V(dual + (Q meet X)).
  InclusionReport inclusion2;
};

struct TheoremReports {
  /// Empty with linear_space_skipped set when X is a linear space.
  std::optional<TheoremReport> data_singular;
  TheoremReport data_isotropic;
  bool linear_space_skipped = false;
};

struct EdDegreeOptions {
  std::int64_t initial_height = 100;
  int max_retries = 3;
};

/// Memoizing driver for one cone: every locus is derived from the same
/// singular locus and ED correspondence. Not thread-safe; use one per
/// thread.
class EdAnalysis {
 public:
  EdAnalysis(ConeInput cone, Context ctx = {}) : cone_(std::move(cone)), ctx_(ctx) {}

  const ConeInput& cone() const { return cone_; }

  /// I + (c x c minors of the Jacobian).
  const Ideal& singular_locus();
  /// saturate(I + (c+1)-minors of [u - x; Jac], Sing X).
  const EdCorrespondence& correspondence();
  /// Eliminates x from saturate(I + (c+1)-minors of [y; Jac], Sing X).
  const Ideal& dual_variety();
  const Locus& data_singular_locus();
  const Locus& data_isotropic_locus();
  /// Ideal of Q meet X, Q the isotropic quadric sum x_i^2.
  Ideal isotropic_section() const;

  /// Fiber size of the correspondence over random rational data points.
  int ed_degree(std::uint64_t seed, const EdDegreeOptions& options = {});

  TheoremReports verify_theorems();

 private:
  std::optional<std::uint64_t> fiber_size(std::uint64_t seed, std::int64_t height);
  Locus project_with(const Ideal& extra_in_x);

  ConeInput cone_;
  Context ctx_;
  std::optional<Ideal> sing_;
  std::optional<EdCorrespondence> corr_;
  std::optional<Ideal> dual_;
  std::optional<Locus> ds_;
  std::optional<Locus> di_;
};

Ideal singular_locus(const ConeInput& x, const Context& ctx = {});
EdCorrespondence ed_correspondence(const ConeInput& x, const Context& ctx = {});
Ideal dual_variety(const ConeInput& x, const Context& ctx = {});
Locus data_singular_locus(const ConeInput& x, const Context& ctx = {});
Locus data_isotropic_locus(const ConeInput& x, const Context& ctx = {});
int ed_degree(const ConeInput& x, std::uint64_t seed, const Context& ctx = {}, const EdDegreeOptions& options = {});
TheoremReports verify_theorems(const ConeInput& x, const Context& ctx = {});

/// Renames an ideal to another ring of the same size, keeping its basis.
Ideal rename(const Ideal& ideal, const VarSet& vars);

/// Generators normalized for display: integer coefficients, content 1,
/// positive leading coefficient.
std::vector<Polynomial> display_generators(const Ideal& ideal);

}  // namespace edloci

#endif  // EDLOCI_EDLOCUS_HPP
