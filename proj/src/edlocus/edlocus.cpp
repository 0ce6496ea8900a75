#include "edloci/edlocus.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "edloci/errors.hpp"
#include "edloci/gcd.hpp"

namespace edloci {

namespace {

std::vector<std::size_t> iota_map(std::size_t n, std::size_t offset = 0) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), offset);
  return m;
}

VarSet companion_block(const VarSet& x, const std::string& prefix) {
  std::vector<std::string> names;
  for (const auto& n : x.names()) names.push_back(n);
  std::vector<std::string> out;
  for (const auto& n : x.names()) {
    std::string candidate = prefix + n;
    while (std::find(names.begin(), names.end(), candidate) != names.end()) candidate = "_" + candidate;
    names.push_back(candidate);
    out.push_back(candidate);
  }
  return VarSet(std::move(out));
}

Ideal embed(const Ideal& ideal, const VarSet& ring, std::span<const std::size_t> map, const MonomialOrder& ord) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.remap(ring, map, ord));
  return Ideal(ring, std::move(gens));
}

// [row ; Jac(I)] over `ring`, where the Jacobian is taken in the x-block
// (indices 0..n-1 of ring) and `row` is supplied already embedded.
PolyMatrix bordered(const ConeInput& x, const VarSet& ring, const std::vector<Polynomial>& row,
                    const MonomialOrder& ord) {
  const std::size_t n = x.ambient_dimension();
  auto map = iota_map(n);
  PolyMatrix top(ring, 1, n, row);
  PolyMatrix jac = jacobian(x.ideal());
  std::vector<Polynomial> entries;
  for (std::size_t r = 0; r < jac.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) entries.push_back(jac.at(r, c).remap(ring, map, ord));
  }
  return top.stacked(PolyMatrix(ring, jac.rows(), n, std::move(entries)));
}

}  // namespace

ConeInput ConeInput::make(const Ideal& ideal, const Context& ctx) {
  if (ideal.is_zero()) throw PreconditionError("the zero ideal does not define a proper cone");
  if (2 * ideal.vars().size() + 1 > kMaxVars) throw PreconditionError("too many ambient variables");
  for (const auto& g : ideal.generators()) {
    if (!g.is_homogeneous()) throw PreconditionError("generator is not homogeneous: " + g.to_string());
  }
  auto dim = krull_dimension(ideal, ctx);
  if (!dim) throw PreconditionError("the unit ideal defines the empty set");
  int codim = static_cast<int>(ideal.vars().size()) - *dim;
  return ConeInput(ideal, codim);
}

bool ConeInput::is_linear_space() const {
  return std::all_of(generators().begin(), generators().end(),
                     [](const Polynomial& g) { return g.total_degree() <= 1; });
}

Ideal rename(const Ideal& ideal, const VarSet& vars) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.with_vars(vars));
  for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
    if (auto gb = ideal.cached_basis(order)) return Ideal(GroebnerBasis(vars, order, gens));
  }
  return Ideal(vars, std::move(gens));
}

std::vector<Polynomial> display_generators(const Ideal& ideal) {
  std::vector<Polynomial> out;
  for (const auto& g : ideal.generators()) out.push_back(g.normalized());
  return out;
}

const Ideal& EdAnalysis::singular_locus() {
  if (!sing_) {
    const auto c = static_cast<std::size_t>(cone_.codim());
    PolyMatrix jac = jacobian(cone_.ideal());
    Ideal minor_ideal(cone_.vars(), minors(jac, c, ctx_.execution));
    sing_ = reduced(ideal_sum(cone_.ideal(), minor_ideal), ctx_);
  }
  return *sing_;
}

const EdCorrespondence& EdAnalysis::correspondence() {
  if (!corr_) {
    const VarSet& x = cone_.vars();
    const std::size_t n = x.size();
    VarSet u = companion_block(x, "u_");
    VarSet ring = x.concat(u);
    auto ord = ctx_.plain_order();
    std::vector<Polynomial> row;
    for (std::size_t i = 0; i < n; ++i) {
      row.push_back(Polynomial::variable(ring, n + i, ord) - Polynomial::variable(ring, i, ord));
    }
    PolyMatrix m = bordered(cone_, ring, row, ord);
    auto map = iota_map(n);
    Ideal ex = ideal_sum(embed(cone_.ideal(), ring, map, ord),
                         Ideal(ring, minors(m, static_cast<std::size_t>(cone_.codim()) + 1, ctx_.execution)));
    Ideal sing = embed(singular_locus(), ring, map, ord);
    corr_ = EdCorrespondence{reduced(saturate(ex, sing, ctx_), ctx_), x, u, cone_.codim()};
  }
  return *corr_;
}

const Ideal& EdAnalysis::dual_variety() {
  if (!dual_) {
    const VarSet& x = cone_.vars();
    const std::size_t n = x.size();
    VarSet y = companion_block(x, "y_");
    VarSet ring = x.concat(y);
    auto ord = ctx_.plain_order();
    std::vector<Polynomial> row;
    for (std::size_t i = 0; i < n; ++i) row.push_back(Polynomial::variable(ring, n + i, ord));
    PolyMatrix m = bordered(cone_, ring, row, ord);
    auto map = iota_map(n);
    Ideal ex = ideal_sum(embed(cone_.ideal(), ring, map, ord),
                         Ideal(ring, minors(m, static_cast<std::size_t>(cone_.codim()) + 1, ctx_.execution)));
    Ideal sing = embed(singular_locus(), ring, map, ord);
    Ideal reg = saturate(ex, sing, ctx_);
    dual_ = rename(eliminate(reg, iota_map(n), ctx_), x);
  }
  return *dual_;
}

Locus EdAnalysis::project_with(const Ideal& extra_in_x) {
  const EdCorrespondence& corr = correspondence();
  const std::size_t n = cone_.ambient_dimension();
  auto ord = ctx_.plain_order();
  Ideal extra = embed(extra_in_x, corr.ideal.vars(), iota_map(n), ord);
  Ideal projected = rename(eliminate(ideal_sum(corr.ideal, extra), iota_map(n), ctx_), cone_.vars());
  Locus out{projected, false};
  if (projected.generators().size() == 1) {
    Polynomial g = squarefree_part(projected.generators().front(), ctx_).with_order(ord);
    out.ideal = reduced(Ideal(cone_.vars(), {g}), ctx_);
  } else if (projected.generators().size() > 1) {
    out.maybe_not_radical = true;
  }
  return out;
}

const Locus& EdAnalysis::data_singular_locus() {
  if (!ds_) ds_ = project_with(singular_locus());
  return *ds_;
}

Ideal EdAnalysis::isotropic_section() const {
  const VarSet& x = cone_.vars();
  Polynomial q(x, ctx_.plain_order());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Polynomial v = Polynomial::variable(x, i, ctx_.plain_order());
    q = q + v * v;
  }
  return ideal_sum(cone_.ideal(), Ideal(x, {q}));
}

const Locus& EdAnalysis::data_isotropic_locus() {
  if (!di_) di_ = project_with(isotropic_section());
  return *di_;
}

std::optional<std::uint64_t> EdAnalysis::fiber_size(std::uint64_t seed, std::int64_t height) {
  const EdCorrespondence& corr = correspondence();
  const std::size_t n = cone_.ambient_dimension();
  const VarSet& x = cone_.vars();
  auto ord = ctx_.plain_order();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> num(-height, height);
  std::uniform_int_distribution<std::int64_t> den(1, height);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(x, i, ord));
  for (std::size_t i = 0; i < n; ++i) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    images.push_back(Polynomial::constant(x, r, ord));
  }
  std::vector<Polynomial> gens;
  for (const auto& g : corr.ideal.generators()) gens.push_back(g.substitute(images));
  GroebnerBasis gb = groebner_basis(Ideal(x, std::move(gens)), ord, ctx_);
  auto dim = krull_dimension(gb);
  if (dim && *dim != 0) return std::nullopt;
  return quotient_dimension(gb);
}

int EdAnalysis::ed_degree(std::uint64_t seed, const EdDegreeOptions& options) {
  std::int64_t height = options.initial_height;
  for (int attempt = 0; attempt <= options.max_retries; ++attempt, height *= 2) {
    // Two independent data points per attempt, both derived from the seed.
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(attempt)};
    std::mt19937_64 split(seq);
    const std::uint64_t first = split();
    const std::uint64_t second = split();
    auto a = fiber_size(first, height);
    auto b = fiber_size(second, height);
    if (a && b && *a == *b) return static_cast<int>(*a);
  }
  throw GenericityError("random data points kept landing on special loci");
}

TheoremReports EdAnalysis::verify_theorems() {
  TheoremReports out;
  const Ideal& dual = dual_variety();
  if (cone_.is_linear_space()) {
    out.linear_space_skipped = true;
  } else {
    const Ideal& ds = data_singular_locus().ideal;
    TheoremReport r{TheoremReport::Kind::kDataSingular, {}, {}};
    r.inclusion1 = variety_inclusion(dual, ds, ctx_);
    r.inclusion2 = variety_inclusion(ds, variety_sum(dual, singular_locus(), ctx_), ctx_);
    out.data_singular = std::move(r);
  }
  const Ideal& di = data_isotropic_locus().ideal;
  out.data_isotropic.theorem = TheoremReport::Kind::kDataIsotropic;
  out.data_isotropic.inclusion1 = variety_inclusion(dual, di, ctx_);
  out.data_isotropic.inclusion2 = variety_inclusion(di, variety_sum(dual, isotropic_section(), ctx_), ctx_);
  return out;
}

Ideal singular_locus(const ConeInput& x, const Context& ctx) { return EdAnalysis(x, ctx).singular_locus(); }
EdCorrespondence ed_correspondence(const ConeInput& x, const Context& ctx) {
  return EdAnalysis(x, ctx).correspondence();
}
Ideal dual_variety(const ConeInput& x, const Context& ctx) { return EdAnalysis(x, ctx).dual_variety(); }
Locus data_singular_locus(const ConeInput& x, const Context& ctx) {
  return EdAnalysis(x, ctx).data_singular_locus();
}
Locus data_isotropic_locus(const ConeInput& x, const Context& ctx) {
  return EdAnalysis(x, ctx).data_isotropic_locus();
}
int ed_degree(const ConeInput& x, std::uint64_t seed, const Context& ctx, const EdDegreeOptions& options) {
  return EdAnalysis(x, ctx).ed_degree(seed, options);
}
TheoremReports verify_theorems(const ConeInput& x, const Context& ctx) {
  return EdAnalysis(x, ctx).verify_theorems();
}

}  // namespace edloci
