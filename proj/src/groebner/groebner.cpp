#include <algorithm>
#include <bit>
#include <functional>

#include "edloci/errors.hpp"
#include "edloci/groebner.hpp"

namespace edloci {

Ideal::Ideal(VarSet vars, std::vector<Polynomial> generators) : vars_(std::move(vars)) {
  for (auto& g : generators) {
    if (!(g.vars() == vars_)) throw UsageError("generator outside the ideal's ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal::Ideal(const GroebnerBasis& gb)
    : vars_(gb.vars()), generators_(gb.basis()), cached_gb_(std::make_shared<const GroebnerBasis>(gb)) {}

Ideal Ideal::unit(VarSet vars) {
  auto one = Polynomial::constant(vars, 1);
  return Ideal(std::move(vars), {one});
}

std::shared_ptr<const GroebnerBasis> Ideal::cached_basis(const MonomialOrder& order) const {
  if (cached_gb_ && cached_gb_->order() == order) return cached_gb_;
  return nullptr;
}

bool GroebnerBasis::contains(const Polynomial& p) const { return normal_form(p, *this).is_zero(); }

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) {
  if (!(p.vars() == G.vars())) throw UsageError("normal form across different rings");
  const MonomialOrder& ord = G.order();
  Polynomial rest = p.with_order(ord);
  std::vector<Polynomial::Term> remainder;
  while (!rest.is_zero()) {
    const auto& t = rest.leading_term();
    const Polynomial* red = nullptr;
    for (const auto& g : G.basis()) {
      if (g.leading_monomial().divides(t.mono)) {
        red = &g;
        break;
      }
    }
    if (red != nullptr) {
      Rational c = t.coef / red->leading_coefficient();
      rest = rest - red->mul_term(c, t.mono / red->leading_monomial());
    } else {
      remainder.push_back(t);
      rest = rest - Polynomial::from_terms(rest.vars(), {t}, ord);
    }
  }
  return Polynomial::from_terms(p.vars(), std::move(remainder), ord);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw UsageError("S-polynomial of the zero polynomial");
  Polynomial gg = g.with_order(f.order());
  Monomial l = Monomial::lcm(f.leading_monomial(), gg.leading_monomial());
  return f.mul_term(1 / f.leading_coefficient(), l / f.leading_monomial()) -
         gg.mul_term(1 / gg.leading_coefficient(), l / gg.leading_monomial());
}

std::optional<int> krull_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return std::nullopt;
  const int n = static_cast<int>(gb.vars().size());
  std::vector<std::uint32_t> leads;
  for (const auto& g : gb.basis()) leads.push_back(g.leading_monomial().support_mask());
  // Largest variable set S such that no leading monomial is supported in S.
  int best = 0;
  std::function<void(int, std::uint32_t, int)> search = [&](int var, std::uint32_t set, int count) {
    if (count + (n - var) <= best) return;
    if (var == n) {
      best = count;
      return;
    }
    std::uint32_t with = set | (1U << var);
    bool independent = std::none_of(leads.begin(), leads.end(),
                                    [with](std::uint32_t m) { return (m & ~with) == 0; });
    if (independent) search(var + 1, with, count + 1);
    search(var + 1, set, count);
  };
  search(0, 0, 0);
  return best;
}

std::optional<int> krull_dimension(const Ideal& ideal, const Context& ctx) {
  return krull_dimension(groebner_basis(ideal, ctx.plain_order(), ctx));
}

std::uint64_t quotient_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return 0;
  const std::size_t n = gb.vars().size();
  std::vector<Monomial> leads;
  for (const auto& g : gb.basis()) leads.push_back(g.leading_monomial());
  std::vector<unsigned> bound(n, 0);
  for (const auto& m : leads) {
    if (std::popcount(m.support_mask()) != 1) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0 && (bound[i] == 0 || m[i] < bound[i])) bound[i] = m[i];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (bound[i] == 0) throw DimensionError("ideal is not zero-dimensional");
  }
  // Enumerate the box below the pure powers; a monomial divisible by a
  // leading monomial is skipped along with the rest of its row in this
  // coordinate, since exponents only grow.
  std::uint64_t count = 0;
  Monomial m(n);
  std::function<void(std::size_t)> walk = [&](std::size_t var) {
    if (var == n) {
      ++count;
      return;
    }
    for (unsigned e = 0; e < bound[var]; ++e) {
      m.set(var, static_cast<int>(e));
      bool dead = false;
      for (const auto& l : leads) {
        bool divides = true;
        for (std::size_t i = 0; i <= var && divides; ++i) divides = l[i] <= m[i];
        for (std::size_t i = var + 1; i < n && divides; ++i) divides = l[i] == 0;
        if (divides) {
          dead = true;
          break;
        }
      }
      if (dead) break;
      walk(var + 1);
    }
    m.set(var, 0);
  };
  walk(0);
  return count;
}

std::uint64_t quotient_dimension(const Ideal& ideal, const Context& ctx) {
  return quotient_dimension(groebner_basis(ideal, ctx.plain_order(), ctx));
}

}  // namespace edloci
