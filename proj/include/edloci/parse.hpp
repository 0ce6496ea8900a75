#ifndef EDLOCI_PARSE_HPP
#define EDLOCI_PARSE_HPP

#include <string_view>

#include "edloci/polynomial.hpp"

namespace edloci {

/// Parses text such as `x1^3 + x2^2*x3` or `1/4*x2^2 - 9*x3^2`.
///
/// Terms are joined by `+`/`-`; a term is an optional integer or `a/b`
/// coefficient, an optional `*`, then `var^e` factors joined by `*`.
/// Whitespace is ignored. Errors carry 1-based positions; `line` and
/// `first_column` let callers report positions within a larger file.
Polynomial parse_polynomial(std::string_view text, const VarSet& vars,
                            MonomialOrder order = MonomialOrder::grevlex(), int line = 1,
                            int first_column = 1);

}  // namespace edloci

#endif  // EDLOCI_PARSE_HPP
