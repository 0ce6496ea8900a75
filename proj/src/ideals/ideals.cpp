#include "edloci/ideals.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#include "edloci/errors.hpp"

namespace edloci {

namespace {

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (!(a.vars() == b.vars())) throw UsageError("ideals over different variable sets");
}

std::vector<std::size_t> shift_map(std::size_t n, std::size_t offset) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), offset);
  return map;
}

// Ring with one extra variable in front (index 0) of `vars`.
VarSet with_leading(const VarSet& vars, const std::string& stem) {
  return VarSet({vars.fresh_name(stem)}).concat(vars);
}

std::vector<Polynomial> embed(const std::vector<Polynomial>& gens, const VarSet& target,
                              std::span<const std::size_t> map, const MonomialOrder& ord) {
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.remap(target, map, ord));
  return out;
}

GroebnerBasis basis_of(const Ideal& ideal, const Context& ctx) {
  return groebner_basis(ideal, ctx.plain_order(), ctx);
}

bool contained_in(const Ideal& small, const GroebnerBasis& big) {
  return std::all_of(small.generators().begin(), small.generators().end(),
                     [&big](const Polynomial& g) { return big.contains(g); });
}

// I : x_v^infinity for homogeneous I: in grevlex with x_v last, dividing
// each basis element by its largest power of x_v gives a basis of the
// saturation.
Ideal saturate_by_variable(const Ideal& ideal, std::size_t v, const Context& ctx) {
  const std::size_t n = ideal.vars().size();
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != v) order.push_back(i);
  }
  order.push_back(v);
  std::vector<std::string> names;
  std::vector<std::size_t> to_new(n);
  for (std::size_t p = 0; p < n; ++p) {
    names.push_back(ideal.vars().name(order[p]));
    to_new[order[p]] = p;
  }
  VarSet moved(std::move(names));
  auto ord = MonomialOrder::grevlex();
  Ideal shifted(moved, embed(ideal.generators(), moved, to_new, ord));
  GroebnerBasis gb = groebner_basis(shifted, ord, Context{ctx.budget, ctx.execution, MonomialOrder::Kind::kGrevlex});
  std::vector<std::size_t> back(n);
  for (std::size_t p = 0; p < n; ++p) back[p] = order[p];
  std::vector<Polynomial> gens;
  for (const auto& g : gb.basis()) {
    unsigned low = 0xFFFF;
    for (const auto& t : g.terms()) low = std::min<unsigned>(low, t.mono[n - 1]);
    Polynomial q = g;
    if (low > 0) {
      std::vector<Polynomial::Term> terms;
      for (const auto& t : g.terms()) {
        Monomial m = t.mono;
        m.set(n - 1, t.mono[n - 1] - static_cast<int>(low));
        terms.push_back({t.coef, m});
      }
      q = Polynomial::from_terms(moved, std::move(terms), ord);
    }
    gens.push_back(q.remap(ideal.vars(), back, ctx.plain_order()));
  }
  return Ideal(ideal.vars(), std::move(gens));
}

Ideal saturate_rabinowitsch(const Ideal& ideal, const Polynomial& g, const Context& ctx) {
  VarSet ext = with_leading(ideal.vars(), "t");
  auto map = shift_map(ideal.vars().size(), 1);
  auto ord = ctx.elimination_order(1);
  std::vector<Polynomial> gens = embed(ideal.generators(), ext, map, ord);
  Polynomial t = Polynomial::variable(ext, 0, ord);
  gens.push_back(Polynomial::constant(ext, 1, ord) - t * g.remap(ext, map, ord));
  Ideal out = eliminate(Ideal(ext, std::move(gens)), std::vector<std::size_t>{0}, ctx);
  return Ideal(ideal.vars(), out.generators());
}

bool all_homogeneous(const Ideal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Polynomial& p) { return p.is_homogeneous(); });
}

}  // namespace

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<Polynomial> gens;
  std::vector<Polynomial> seen;
  for (const auto* src : {&a, &b}) {
    for (const auto& g : src->generators()) {
      Polynomial key = g.normalized();
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      gens.push_back(g);
    }
  }
  return Ideal(a.vars(), std::move(gens));
}

Ideal reduced(const Ideal& ideal, const Context& ctx) { return Ideal(basis_of(ideal, ctx)); }

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop, const Context& ctx) {
  const std::size_t n = ideal.vars().size();
  std::vector<char> dropped(n, 0);
  for (auto d : drop) {
    if (d >= n) throw UsageError("eliminated variable index out of range");
    dropped[d] = 1;
  }
  std::vector<std::size_t> to_new(n);
  std::vector<std::string> names;
  std::vector<std::string> kept_names;
  std::size_t split = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (dropped[i]) {
      to_new[i] = names.size();
      names.push_back(ideal.vars().name(i));
    }
  }
  split = names.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!dropped[i]) {
      to_new[i] = names.size();
      names.push_back(ideal.vars().name(i));
      kept_names.push_back(ideal.vars().name(i));
    }
  }
  VarSet ring(std::move(names));
  VarSet kept(std::move(kept_names));
  auto ord = ctx.elimination_order(split);
  GroebnerBasis gb = groebner_basis(Ideal(ring, embed(ideal.generators(), ring, to_new, ord)), ord, ctx);

  const std::uint64_t elim_mask = split == 0 ? 0 : ((std::uint64_t{1} << split) - 1);
  auto back = shift_map(ring.size(), 0);
  for (std::size_t p = split; p < ring.size(); ++p) back[p] = p - split;
  std::vector<Polynomial> gens;
  for (const auto& g : gb.basis()) {
    if (g.support() & elim_mask) continue;
    gens.push_back(g.remap(kept, back, ctx.plain_order()));
  }
  std::sort(gens.begin(), gens.end(), [&ctx](const Polynomial& x, const Polynomial& y) {
    return ctx.plain_order().compare(x.leading_monomial(), y.leading_monomial()) == Ordering::kLess;
  });
  return Ideal(GroebnerBasis(kept, ctx.plain_order(), std::move(gens)));
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop, const Context& ctx) {
  std::vector<std::size_t> idx;
  for (const auto& name : drop) {
    auto i = ideal.vars().index_of(name);
    if (!i) throw UsageError("cannot eliminate unknown variable '" + name + "'");
    idx.push_back(*i);
  }
  return eliminate(ideal, idx, ctx);
}

Ideal saturate(const Ideal& ideal, const Polynomial& g, const Context& ctx, SaturationMethod method) {
  if (!(g.vars() == ideal.vars())) throw UsageError("saturating polynomial outside the ideal's ring");
  if (g.is_zero()) throw UsageError("saturation by the zero polynomial");
  if (g.is_constant() || ideal.is_zero()) return ideal;
  if (method == SaturationMethod::kRabinowitsch) return saturate_rabinowitsch(ideal, g, ctx);

  // Split off the monomial content: I : (m*h)^inf = (I : m^inf) : h^inf.
  const std::size_t n = ideal.vars().size();
  std::vector<unsigned> low(n, 0xFFFF);
  for (const auto& t : g.terms()) {
    for (std::size_t i = 0; i < n; ++i) low[i] = std::min<unsigned>(low[i], t.mono[i]);
  }
  Ideal current = ideal;
  const bool homogeneous = all_homogeneous(ideal);
  for (std::size_t i = 0; i < n; ++i) {
    if (low[i] == 0) continue;
    current = homogeneous ? saturate_by_variable(current, i, ctx)
                          : saturate_rabinowitsch(current, Polynomial::variable(ideal.vars(), i), ctx);
  }
  std::vector<Polynomial::Term> rest;
  for (const auto& t : g.terms()) {
    Monomial m = t.mono;
    for (std::size_t i = 0; i < n; ++i) {
      if (low[i] != 0) m.set(i, t.mono[i] - static_cast<int>(low[i]));
    }
    rest.push_back({t.coef, m});
  }
  Polynomial h = Polynomial::from_terms(ideal.vars(), std::move(rest), g.order());
  if (h.is_constant()) return current;
  return saturate_rabinowitsch(current, h, ctx);
}

Ideal saturate(const Ideal& ideal, const Ideal& by, const Context& ctx, SaturationMethod method) {
  require_same_ring(ideal, by);
  if (by.is_zero()) throw UsageError("saturation by the zero ideal");
  GroebnerBasis base = basis_of(ideal, ctx);
  // Generators of J already in I do not change I : J^inf.
  std::vector<Polynomial> useful;
  for (const auto& g : by.generators()) {
    if (!base.contains(g)) useful.push_back(g);
  }
  if (useful.empty()) return Ideal::unit(ideal.vars());
  Ideal start(base);
  std::optional<Ideal> result;
  for (const auto& g : useful) {
    Ideal part = saturate(start, g, ctx, method);
    result = result ? intersect(*result, part, ctx) : part;
  }
  return *result;
}

Ideal intersect(const Ideal& a, const Ideal& b, const Context& ctx) {
  require_same_ring(a, b);
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  GroebnerBasis ga = basis_of(a, ctx);
  GroebnerBasis gb = basis_of(b, ctx);
  if (contained_in(Ideal(gb), ga)) return Ideal(gb);
  if (contained_in(Ideal(ga), gb)) return Ideal(ga);

  VarSet ext = with_leading(a.vars(), "t");
  auto map = shift_map(a.vars().size(), 1);
  auto ord = ctx.elimination_order(1);
  Polynomial t = Polynomial::variable(ext, 0, ord);
  Polynomial one_minus_t = Polynomial::constant(ext, 1, ord) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : ga.basis()) gens.push_back(t * g.remap(ext, map, ord));
  for (const auto& g : gb.basis()) gens.push_back(one_minus_t * g.remap(ext, map, ord));
  Ideal out = eliminate(Ideal(ext, std::move(gens)), std::vector<std::size_t>{0}, ctx);
  return Ideal(GroebnerBasis(a.vars(), ctx.plain_order(),
                             std::vector<Polynomial>(out.generators().begin(), out.generators().end())));
}

bool radical_membership(const Polynomial& f, const Ideal& ideal, const Context& ctx) {
  if (!(f.vars() == ideal.vars())) throw UsageError("polynomial outside the ideal's ring");
  if (f.is_zero()) return true;
  if (auto gb = ideal.cached_basis(ctx.plain_order()); gb && gb->contains(f)) return true;
  const std::size_t n = ideal.vars().size();
  VarSet ext = ideal.vars().concat(VarSet({ideal.vars().fresh_name("t")}));
  auto map = shift_map(n, 0);
  auto ord = ctx.plain_order();
  std::vector<Polynomial> gens = embed(ideal.generators(), ext, map, ord);
  Polynomial t = Polynomial::variable(ext, n, ord);
  gens.push_back(Polynomial::constant(ext, 1, ord) - t * f.remap(ext, map, ord));
  return groebner_basis(Ideal(ext, std::move(gens)), ord, ctx).is_unit();
}

Ideal variety_sum(const Ideal& a, const Ideal& b, const Context& ctx) {
  require_same_ring(a, b);
  // Points u = p + q with p in V(a), q in V(b): substitute p = u - q and
  // eliminate q.
  const VarSet& amb = a.vars();
  const std::size_t n = amb.size();
  std::vector<std::string> q_names;
  for (std::size_t i = 0; i < n; ++i) q_names.push_back(amb.fresh_name("q_" + amb.name(i)));
  VarSet ring = VarSet(q_names).concat(amb);
  auto ord = ctx.elimination_order(n);
  std::vector<Polynomial> minus_shift;
  std::vector<Polynomial> q_only;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial q = Polynomial::variable(ring, i, ord);
    minus_shift.push_back(Polynomial::variable(ring, n + i, ord) - q);
    q_only.push_back(q);
  }
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(g.substitute(minus_shift));
  for (const auto& g : b.generators()) gens.push_back(g.substitute(q_only));
  std::vector<std::size_t> drop(n);
  std::iota(drop.begin(), drop.end(), 0);
  return eliminate(Ideal(ring, std::move(gens)), drop, ctx);
}

namespace {

// Point of V(inside) where `outside` does not vanish, on the grid [-2,2]^n.
std::optional<std::vector<Rational>> grid_witness(const Ideal& inside, const Polynomial& outside) {
  const std::size_t n = inside.vars().size();
  if (n == 0 || n > 6) return std::nullopt;
  std::vector<Rational> p(n);
  std::vector<int> digits(n, 0);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) p[i] = digits[i] - 2;
    bool on = std::all_of(inside.generators().begin(), inside.generators().end(),
                          [&p](const Polynomial& g) { return sgn(g.evaluate(std::span<const Rational>(p))) == 0; });
    if (on && sgn(outside.evaluate(std::span<const Rational>(p))) != 0) return p;
    std::size_t i = 0;
    while (i < n && digits[i] == 4) digits[i++] = 0;
    if (i == n) break;
    ++digits[i];
  }
  return std::nullopt;
}

// Index of the first polynomial not in rad(ideal), or npos.
std::size_t first_outside_radical(const std::vector<Polynomial>& polys, const Ideal& ideal, const Context& ctx) {
  std::vector<char> outside(polys.size(), 0);
  std::exception_ptr error;
  const auto n = static_cast<long>(polys.size());
#pragma omp parallel for schedule(dynamic, 1) if (ctx.execution == Execution::kParallel)
  for (long k = 0; k < n; ++k) {
    try {
      outside[static_cast<std::size_t>(k)] = !radical_membership(polys[static_cast<std::size_t>(k)], ideal, ctx);
    } catch (...) {
#pragma omp critical(edloci_radical_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  auto it = std::find(outside.begin(), outside.end(), 1);
  return it == outside.end() ? std::string::npos : static_cast<std::size_t>(it - outside.begin());
}

}  // namespace

InclusionReport variety_inclusion(const Ideal& a, const Ideal& b, const Context& ctx) {
  require_same_ring(a, b);
  InclusionReport report;
  std::size_t bad = first_outside_radical(b.generators(), a, ctx);
  if (bad != std::string::npos) {
    report.holds = false;
    report.certificate = b.generators()[bad];
    report.point = grid_witness(a, b.generators()[bad]);
    return report;
  }
  report.holds = true;
  std::size_t extra = first_outside_radical(a.generators(), b, ctx);
  if (extra != std::string::npos) {
    report.strict = true;
    report.certificate = a.generators()[extra];
    report.point = grid_witness(b, a.generators()[extra]);
  }
  return report;
}

bool same_variety(const Ideal& a, const Ideal& b, const Context& ctx) {
  return variety_inclusion(a, b, ctx).equal();
}

}  // namespace edloci
