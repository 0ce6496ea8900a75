#ifndef EDLOCI_GCD_HPP
#define EDLOCI_GCD_HPP

#include "edloci/context.hpp"
#include "edloci/polynomial.hpp"

namespace edloci {

/// Generator of (f) intersected with (g), normalized.
Polynomial poly_lcm(const Polynomial& f, const Polynomial& g, const Context& ctx = {});

/// f*g / lcm(f, g), normalized. gcd(0, g) = g.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g, const Context& ctx = {});

/// Product of the distinct irreducible factors of f, computed as
/// f / gcd(f, df/dx1, ..., df/dxn) and normalized (integer coefficients,
/// content 1, positive leading coefficient). Throws UsageError for zero.
Polynomial squarefree_part(const Polynomial& f, const Context& ctx = {});

}  // namespace edloci

#endif  // EDLOCI_GCD_HPP
