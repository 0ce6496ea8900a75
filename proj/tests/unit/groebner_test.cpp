#include <doctest.h>

#include "edloci/errors.hpp"
#include "support/helpers.hpp"

using namespace edloci;
using namespace edloci::testing;

namespace {
std::vector<Polynomial> basis_of(const Ideal& i, const MonomialOrder& ord, Execution exec = Execution::kSerial) {
  Context ctx;
  ctx.execution = exec;
  return groebner_basis(i, ord, ctx).basis();
}
}  // namespace

TEST_CASE("normal form") {
  auto R = ring({"x", "y"});
  auto lex = MonomialOrder::lex();
  auto G = [&](std::vector<std::string> g) { return groebner_basis(I(R, g), lex); };
  CHECK(normal_form(P("x^2", R, lex), G({"x"})).is_zero());
  CHECK(normal_form(P("x^2 + y", R, lex), G({"y"})) == P("x^2", R, lex));
  CHECK(normal_form(P("x*y", R, lex), G({"x - 1"})) == P("y", R, lex));
}

TEST_CASE("reduced bases") {
  auto C = ring({"x1", "x2", "x3"});
  auto principal = basis_of(I(C, {"2*x1^3 + 2*x2^2*x3"}), MonomialOrder::grevlex());
  REQUIRE(principal.size() == 1);
  CHECK(principal[0] == P("x1^3 + x2^2*x3", C));

  auto R = ring({"x", "y"});
  auto xy = basis_of(I(R, {"x - y", "x + y"}), MonomialOrder::grevlex());
  REQUIRE(xy.size() == 2);
  CHECK(xy[0] == P("y", R));
  CHECK(xy[1] == P("x", R));

  auto lex = MonomialOrder::lex();
  auto circle = basis_of(I(R, {"x^2 + y^2 - 1", "x - y"}), lex);
  REQUIRE(circle.size() == 2);
  CHECK(circle[0] == P("y^2 - 1/2", R, lex));
  CHECK(circle[1] == P("x - y", R, lex));
}

TEST_CASE("unit and zero ideals") {
  auto R = ring({"x", "y"});
  auto unit = groebner_basis(I(R, {"x", "x + 1"}), MonomialOrder::grevlex());
  CHECK(unit.is_unit());
  CHECK(groebner_basis(Ideal(R), MonomialOrder::grevlex()).is_zero());
}

TEST_CASE("serial and parallel engines agree") {
  auto C = ring({"x1", "x2", "x3", "x4"});
  auto i = I(C, {"x1^2*x2 - x3*x4^2", "x2^3 - x1*x3*x4", "x1*x4 - x2^2 + x3^2"});
  auto ord = MonomialOrder::grevlex();
  CHECK(basis_of(i, ord, Execution::kSerial) == basis_of(i, ord, Execution::kParallel));
  auto blk = MonomialOrder::block(2);
  CHECK(basis_of(i, blk, Execution::kSerial) == basis_of(i, blk, Execution::kParallel));
}

TEST_CASE("budget aborts with statistics") {
  auto C = ring({"x1", "x2", "x3", "x4"});
  auto i = I(C, {"x1^2*x2 - x3*x4^2", "x2^3 - x1*x3*x4", "x1*x4 - x2^2 + x3^2"});
  Budget budget(3, 0);
  Context ctx;
  ctx.budget = &budget;
  try {
    groebner_basis(i, MonomialOrder::grevlex(), ctx);
    FAIL("expected a budget error");
  } catch (const BudgetExceeded& e) {
    CHECK(e.pairs_used() > 3);
  }
}

TEST_CASE("buchberger certificate on a small system") {
  auto R = ring({"x", "y", "z"});
  auto gb = groebner_basis(I(R, {"x^2 - y*z", "y^2 - x*z", "z^2 - x*y"}), MonomialOrder::grevlex());
  for (std::size_t a = 0; a < gb.size(); ++a) {
    for (std::size_t b = a + 1; b < gb.size(); ++b) {
      CHECK(normal_form(s_polynomial(gb.basis()[a], gb.basis()[b]), gb).is_zero());
    }
  }
}

TEST_CASE("krull dimension") {
  auto G = ring({"x1", "x2", "x3", "x4", "x5", "x6"});
  CHECK(krull_dimension(I(G, {"x1*x6 - x2*x5 + x3*x4"})) == 5);
  CHECK(krull_dimension(Ideal(G)) == 6);
  auto R = ring({"x", "y"});
  CHECK(krull_dimension(I(R, {"x", "y"})) == 0);
  CHECK_FALSE(krull_dimension(I(R, {"1"})).has_value());
  auto C = ring({"x1", "x2", "x3"});
  CHECK(krull_dimension(I(C, {"x1", "x2*x3"})) == 1);
}

TEST_CASE("quotient dimension") {
  auto R = ring({"x", "y"});
  CHECK(quotient_dimension(I(R, {"x^2", "y^3"})) == 6);
  CHECK(quotient_dimension(I(R, {"x", "y"})) == 1);
  CHECK(quotient_dimension(I(R, {"1"})) == 0);
  CHECK(quotient_dimension(I(R, {"x^2 + y^2 - 1", "x - y"})) == 2);
  CHECK_THROWS_AS(quotient_dimension(I(R, {"x*y"})), DimensionError);
}

TEST_CASE("ideal caches its basis") {
  auto R = ring({"x", "y"});
  Ideal i = I(R, {"x^2 - y", "x*y - 1"});
  CHECK(i.cached_basis(MonomialOrder::grevlex()) == nullptr);
  Ideal r(groebner_basis(i, MonomialOrder::grevlex()));
  CHECK(r.cached_basis(MonomialOrder::grevlex()) != nullptr);
}
