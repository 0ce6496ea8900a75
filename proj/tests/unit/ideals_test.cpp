#include <doctest.h>

#include "edloci/errors.hpp"
#include "support/helpers.hpp"

using namespace edloci;
using namespace edloci::testing;

namespace {
// Reduced grevlex bases agree, i.e. the ideals are equal.
bool equal_ideals(const Ideal& a, const Ideal& b) {
  return groebner_basis(a, MonomialOrder::grevlex()) == groebner_basis(b, MonomialOrder::grevlex());
}
}  // namespace

TEST_CASE("ideal sum") {
  auto R = ring({"x", "y"});
  CHECK(ideal_sum(I(R, {"x"}), I(R, {"y"})).generators().size() == 2);
  CHECK(ideal_sum(I(R, {"x", "2*x"}), Ideal(R)).generators().size() == 1);
  auto C = ring({"x1", "x2", "x3"});
  auto f = I(C, {"x1^3 + x2^2*x3"});
  auto jac = jacobian(f);
  auto sing = ideal_sum(f, Ideal(C, minors(jac, 1)));
  CHECK(equal_ideals(sing, I(C, {"x1^3 + x2^2*x3", "3*x1^2", "2*x2*x3", "x2^2"})));
}

TEST_CASE("elimination") {
  auto R = ring({"t", "x", "y"});
  auto e = eliminate(I(R, {"t*x - 1", "t*y - 1"}), std::vector<std::string>{"t"});
  CHECK(e.vars() == ring({"x", "y"}));
  CHECK(single_generator(e, P("x - y", e.vars())));
  auto S = ring({"x", "y"});
  CHECK(single_generator(eliminate(I(S, {"x - y"}), std::vector<std::string>{}), P("x - y", S)));
  auto ex = eliminate(I(S, {"x^2", "y"}), std::vector<std::string>{"x"});
  CHECK(single_generator(ex, P("y", ex.vars())));
  CHECK_THROWS(eliminate(I(S, {"x"}), std::vector<std::string>{"z"}));
}

TEST_CASE("saturation") {
  auto R = ring({"x", "y", "z"});
  CHECK(equal_ideals(saturate(I(R, {"x^2*y"}), P("x", R)), I(R, {"y"})));
  CHECK(equal_ideals(saturate(I(R, {"x*y", "x*z"}), I(R, {"x"})), I(R, {"y", "z"})));
  CHECK(equal_ideals(saturate(I(R, {"x*y", "x*z"}), I(R, {"x"}), {}, SaturationMethod::kRabinowitsch),
                     I(R, {"y", "z"})));
  // (1)^k = (1), so I : (1)^inf = I
  CHECK(equal_ideals(saturate(I(R, {"x*y"}), I(R, {"1"})), I(R, {"x*y"})));
  // everything of J inside I: the saturation is the unit ideal
  CHECK(groebner_basis(saturate(I(R, {"x", "y"}), I(R, {"x"})), MonomialOrder::grevlex()).is_unit());
  // several generators: I : (x, y)^inf
  CHECK(equal_ideals(saturate(I(R, {"x*z", "y*z"}), I(R, {"x", "y"})), I(R, {"z"})));
}

TEST_CASE("intersection") {
  auto R = ring({"x", "y"});
  CHECK(equal_ideals(intersect(I(R, {"x"}), I(R, {"y"})), I(R, {"x*y"})));
  CHECK(intersect(I(R, {"x"}), Ideal(R)).is_zero());
  CHECK(equal_ideals(intersect(I(R, {"x - y"}), I(R, {"x + y"})), I(R, {"x^2 - y^2"})));
  CHECK(equal_ideals(intersect(I(R, {"x^2", "y"}), I(R, {"x"})), I(R, {"x^2", "x*y"})));
}

TEST_CASE("minors and determinants") {
  auto R = ring({"x1", "x2", "x3", "x4"});
  PolyMatrix m(R, 2, 2, {P("x1", R), P("x2", R), P("x3", R), P("x4", R)});
  auto m2 = minors(m, 2);
  REQUIRE(m2.size() == 1);
  CHECK(proportional(m2[0], P("x1*x4 - x2*x3", R)));
  CHECK(minors(m, 1).size() == 4);
  CHECK_THROWS_AS(minors(m, 3), UsageError);
  CHECK_THROWS_AS(minors(m, 0), UsageError);

  auto C = ring({"x1", "x2", "x3"});
  PolyMatrix cm(C, 2, 2, {P("2*x2", C), P("x2 + x3 - x1", C), P("x2 + x3 - x1", C), P("2*x3", C)});
  auto d = minors(cm, 2);
  REQUIRE(d.size() == 1);
  CHECK(proportional(d[0], P("x1^2 - 2*x1*x2 + x2^2 - 2*x1*x3 - 2*x2*x3 + x3^2", C)));

  PolyMatrix z(C, 2, 2, {P("x1", C), P("0", C), P("0", C), P("x2", C)});
  CHECK(minors(z, 1).size() == 2);
}

TEST_CASE("serial and parallel minors agree") {
  auto R = ring({"a", "b", "c", "d", "e", "f"});
  std::vector<Polynomial> entries;
  const char* cells[] = {"a", "b", "c", "d", "e", "f", "a + b", "c*d", "e - f", "1", "a^2", "b*f"};
  for (const char* c : cells) entries.push_back(P(c, R));
  PolyMatrix m(R, 3, 4, entries);
  CHECK(minors(m, 3, Execution::kSerial) == minors(m, 3, Execution::kParallel));
  CHECK(minors(m, 2, Execution::kSerial) == minors(m, 2, Execution::kParallel));
}

TEST_CASE("Hurwitz determinant divided by x5") {
  auto R = ring({"x1", "x2", "x3", "x4", "x5"});
  const char* cells[] = {"x2", "x4", "0", "0", "x1", "x3", "x5", "0", "0", "x2", "x4", "0", "0", "x1", "x3", "x5"};
  std::vector<Polynomial> entries;
  for (const char* c : cells) entries.push_back(P(c, R));
  PolyMatrix h(R, 4, 4, entries);
  auto det = determinant(h);
  for (std::size_t row = 1; row < 4; ++row) CHECK(determinant(h, row) == det);
  CHECK(divide_exact(det, P("x5", R)) == P("x2*x3*x4 - x1*x4^2 - x2^2*x5", R));
}

TEST_CASE("jacobian") {
  auto C = ring({"x1", "x2", "x3"});
  auto j = jacobian(I(C, {"x1^3 + x2^2*x3"}));
  REQUIRE(j.rows() == 1);
  REQUIRE(j.cols() == 3);
  CHECK(j.at(0, 0) == P("3*x1^2", C));
  CHECK(j.at(0, 1) == P("2*x2*x3", C));
  CHECK(j.at(0, 2) == P("x2^2", C));
  auto l = jacobian(I(C, {"x1 + 2*x2 + 3*x3", "4*x1 + 5*x2 + 6*x3"}));
  CHECK(l.at(1, 2) == P("6", C));
  CHECK(jacobian(Ideal(C)).rows() == 0);
}

TEST_CASE("radical membership") {
  auto R = ring({"x", "y"});
  CHECK(radical_membership(P("x", R), I(R, {"x^2"})));
  CHECK_FALSE(radical_membership(P("y", R), I(R, {"x^2"})));
  CHECK(radical_membership(P("0", R), Ideal(R)));
  auto C = ring({"x1", "x2", "x3"});
  CHECK(radical_membership(P("4*x1^3 - 27*x2^2*x3", C), I(C, {"4*x1^4 - 27*x1*x2^2*x3"})) == false);
  CHECK(radical_membership(P("4*x1^4 - 27*x1*x2^2*x3", C), I(C, {"4*x1^3 - 27*x2^2*x3"})));
}

TEST_CASE("variety sum") {
  auto C = ring({"x1", "x2", "x3"});
  auto j = I(C, {"x1^2 + x2^2 - x3^2"});
  CHECK(same_variety(variety_sum(I(C, {"x1", "x2", "x3"}), j), j));
  auto R = ring({"x", "y"});
  CHECK(variety_sum(I(R, {"x"}), I(R, {"y"})).is_zero());
  auto s = variety_sum(I(C, {"4*x1^3 - 27*x2^2*x3"}), I(C, {"x1", "x2"}));
  std::vector<Rational> pt{3, 2, 2};
  for (const auto& g : s.generators()) CHECK(g.evaluate(pt) == 0);
  auto a = I(C, {"x1", "x2"});
  auto b = I(C, {"x1 - x3", "x2^2 - x1*x3"});
  CHECK(equal_ideals(variety_sum(a, b), variety_sum(b, a)));
}

TEST_CASE("variety inclusion") {
  auto R = ring({"x", "y"});
  auto r = variety_inclusion(I(R, {"x", "y"}), I(R, {"x"}));
  CHECK(r.holds);
  CHECK(r.strict);
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->normalized() == P("y", R));
  auto e = variety_inclusion(I(R, {"x^2 - y"}), I(R, {"x^4 - 2*x^2*y + y^2"}));
  CHECK(e.equal());
  auto n = variety_inclusion(I(R, {"x"}), I(R, {"x*y", "y"}));
  CHECK_FALSE(n.holds);
  CHECK(n.certificate.has_value());
}
