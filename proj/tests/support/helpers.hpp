#ifndef EDLOCI_TESTS_HELPERS_HPP
#define EDLOCI_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "edloci/edlocus.hpp"
#include "edloci/parse.hpp"

namespace edloci::testing {

inline VarSet ring(std::vector<std::string> names) { return VarSet(std::move(names)); }

inline Polynomial P(const std::string& text, const VarSet& vars,
                    const MonomialOrder& order = MonomialOrder::grevlex()) {
  return parse_polynomial(text, vars, order);
}

inline Ideal I(const VarSet& vars, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(g, vars));
  return Ideal(vars, ps);
}

inline ConeInput cone(const std::vector<std::string>& names, const std::vector<std::string>& gens) {
  return ConeInput::make(I(ring(names), gens));
}

// Equality up to a nonzero rational scalar.
inline bool proportional(const Polynomial& a, const Polynomial& b) { return a.normalized() == b.normalized(); }

inline bool single_generator(const Ideal& i, const Polynomial& want) {
  return i.generators().size() == 1 && proportional(i.generators().front(), want);
}

}  // namespace edloci::testing

#endif
