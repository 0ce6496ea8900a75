#include "edloci/gcd.hpp"

#include "edloci/errors.hpp"
#include "edloci/ideals.hpp"

namespace edloci {

Polynomial poly_lcm(const Polynomial& f, const Polynomial& g, const Context& ctx) {
  if (!(f.vars() == g.vars())) throw UsageError("lcm of polynomials over different rings");
  if (f.is_zero() || g.is_zero()) return Polynomial(f.vars());
  Ideal both = intersect(Ideal(f.vars(), {f}), Ideal(g.vars(), {g}), ctx);
  // (f) and (g) are principal, so their intersection is too.
  if (both.generators().size() != 1) throw UsageError("intersection of principal ideals is not principal");
  return both.generators().front().normalized();
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g, const Context& ctx) {
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  if (f.is_constant() || g.is_constant()) return Polynomial::constant(f.vars(), 1, f.order());
  Polynomial l = poly_lcm(f, g, ctx);
  return divide_exact(f * g, l).normalized();
}

Polynomial squarefree_part(const Polynomial& f, const Context& ctx) {
  if (f.is_zero()) throw UsageError("squarefree part of the zero polynomial");
  if (f.is_constant()) return Polynomial::constant(f.vars(), 1, f.order());
  Polynomial g = f;
  for (std::size_t i = 0; i < f.vars().size() && !g.is_constant(); ++i) {
    Polynomial d = f.differentiate(i);
    if (!d.is_zero()) g = poly_gcd(g, d, ctx);
  }
  return divide_exact(f, g).normalized();
}

}  // namespace edloci
