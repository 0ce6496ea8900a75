#include <doctest.h>

#include "edloci/errors.hpp"
#include "support/helpers.hpp"

using namespace edloci;
using namespace edloci::testing;

namespace {
const std::vector<std::string> kX3{"x1", "x2", "x3"};
const char* kCusp = "x1^3 + x2^2*x3";
const char* kEllipse = "x1^2 + 4*x2^2 - 9*x3^2";
const char* kCayleyMenger = "x1^2 - 2*x1*x2 + x2^2 - 2*x1*x3 - 2*x2*x3 + x3^2";
}  // namespace

TEST_CASE("cone input validation") {
  auto R = ring({"x", "y"});
  CHECK_THROWS_AS(ConeInput::make(I(R, {"x + 1"})), PreconditionError);
  CHECK_THROWS_AS(ConeInput::make(Ideal(R)), PreconditionError);
  CHECK_THROWS_AS(ConeInput::make(I(R, {"x", "x^2 + y"})), PreconditionError);
  CHECK_THROWS_AS(ConeInput::make(I(R, {"1"})), PreconditionError);
  auto c = cone(kX3, {kCusp});
  CHECK(c.codim() == 1);
  CHECK_FALSE(c.is_linear_space());
  auto line = cone(kX3, {"x1 + 2*x2 + 3*x3", "4*x1 + 5*x2 + 6*x3"});
  CHECK(line.codim() == 2);
  CHECK(line.is_linear_space());
}

TEST_CASE("singular loci") {
  auto C = ring(kX3);
  CHECK(same_variety(singular_locus(cone(kX3, {kCusp})), I(C, {"x1", "x2"})));
  CHECK(same_variety(singular_locus(cone(kX3, {kEllipse})), I(C, {"x1", "x2", "x3"})));
  auto line = singular_locus(cone(kX3, {"x1 + 2*x2 + 3*x3", "4*x1 + 5*x2 + 6*x3"}));
  CHECK(groebner_basis(line, MonomialOrder::grevlex()).is_unit());
}

TEST_CASE("dual varieties") {
  auto C = ring(kX3);
  CHECK(single_generator(dual_variety(cone(kX3, {kCusp})), P("4*x1^3 - 27*x2^2*x3", C)));
  auto ell = dual_variety(cone(kX3, {kEllipse}));
  REQUIRE(ell.generators().size() == 1);
  CHECK(ell.generators()[0].normalized().to_string() == "36*x1^2 + 9*x2^2 - 4*x3^2");
  CHECK(single_generator(dual_variety(cone(kX3, {"x1 + 2*x2 + 3*x3", "4*x1 + 5*x2 + 6*x3"})), P("x1 - 2*x2 + x3", C)));
  CHECK(single_generator(dual_variety(cone(kX3, {kCayleyMenger})), P("x1*x2 + x1*x3 + x2*x3", C)));
}

TEST_CASE("data singular loci") {
  auto C = ring(kX3);
  auto ds = data_singular_locus(cone(kX3, {kCusp}));
  CHECK_FALSE(ds.maybe_not_radical);
  CHECK(single_generator(ds.ideal, P("x1", C) * P("4*x1^3 - 27*x2^2*x3", C)));
  CHECK(same_variety(data_singular_locus(cone(kX3, {kEllipse})).ideal, dual_variety(cone(kX3, {kEllipse}))));
  auto R4 = ring({"x1", "x2", "x3", "x4"});
  auto det = data_singular_locus(cone({"x1", "x2", "x3", "x4"}, {"x1*x4 - x2*x3"}));
  CHECK(single_generator(det.ideal, P("x1*x4 - x2*x3", R4)));
}

TEST_CASE("data isotropic loci") {
  auto C = ring(kX3);
  auto G = ring({"x1", "x2", "x3", "x4", "x5", "x6"});
  auto gr = data_isotropic_locus(cone(G.names(), {"x1*x6 - x2*x5 + x3*x4"}));
  CHECK(single_generator(gr.ideal, P("x1*x6 - x2*x5 + x3*x4", G)));
  CHECK(single_generator(data_isotropic_locus(cone(kX3, {kCayleyMenger})).ideal, P("x1*x2 + x1*x3 + x2*x3", C)));
  CHECK(single_generator(data_isotropic_locus(cone(kX3, {"x1 + 2*x2 + 3*x3", "4*x1 + 5*x2 + 6*x3"})).ideal,
                         P("x1 - 2*x2 + x3", C)));
}

TEST_CASE("ED correspondence") {
  auto x = cone(kX3, {kCusp});
  auto corr = ed_correspondence(x);
  CHECK(corr.codim_used == 1);
  CHECK(corr.ideal.vars().size() == 6);
  // the correspondence of a hypersurface in n-space has dimension n
  CHECK(krull_dimension(corr.ideal) == 3);
  // the input ideal lies in the correspondence
  auto gb = groebner_basis(corr.ideal, MonomialOrder::grevlex());
  std::vector<std::size_t> map{0, 1, 2};
  CHECK(gb.contains(P(kCusp, ring(kX3)).remap(corr.ideal.vars(), map, MonomialOrder::grevlex())));
  // each dual generator evaluated at u - x vanishes on the correspondence
  auto dual = dual_variety(x);
  std::vector<Polynomial> diff;
  for (std::size_t i = 0; i < 3; ++i) {
    diff.push_back(Polynomial::variable(corr.ideal.vars(), 3 + i) - Polynomial::variable(corr.ideal.vars(), i));
  }
  for (const auto& g : dual.generators()) {
    CHECK(radical_membership(g.substitute(diff), corr.ideal));
  }
}

TEST_CASE("ED correspondence contains the regular diagonal") {
  auto x = cone(kX3, {kEllipse});
  auto corr = ed_correspondence(x);
  const auto& vars = corr.ideal.vars();
  std::vector<Polynomial> diag;
  for (std::size_t i = 0; i < 6; ++i) diag.push_back(Polynomial::variable(vars, i % 3));
  Ideal on_diag(vars, {P(kEllipse, ring(kX3)).remap(vars, std::vector<std::size_t>{0, 1, 2}, MonomialOrder::grevlex())});
  for (const auto& g : corr.ideal.generators()) {
    CHECK(radical_membership(g.substitute(diag), on_diag));
  }
}

TEST_CASE("ED degrees") {
  CHECK(ed_degree(cone(kX3, {"x1 + 2*x2 + 3*x3", "4*x1 + 5*x2 + 6*x3"}), 7) == 1);
  CHECK(ed_degree(cone(kX3, {"x1 + 2*x2 + 3*x3", "4*x1 + 5*x2 + 6*x3"}), 8) == 1);
  CHECK(ed_degree(cone({"x1", "x2", "x3", "x4"}, {"x1*x4 - x2*x3"}), 1) == 2);
  CHECK(ed_degree(cone(kX3, {kCusp}), 3) == 6);
  CHECK(ed_degree(cone(kX3, {kEllipse}), 3) == 4);
}

TEST_CASE("theorem reports") {
  auto cusp = verify_theorems(cone(kX3, {kCusp}));
  REQUIRE(cusp.data_singular.has_value());
  CHECK(cusp.data_singular->inclusion1.holds);
  CHECK(cusp.data_singular->inclusion1.strict);
  CHECK(cusp.data_singular->inclusion2.holds);
  CHECK(cusp.data_singular->inclusion2.strict);

  auto ell = verify_theorems(cone(kX3, {kEllipse}));
  CHECK(ell.data_singular->inclusion1.equal());
  CHECK(ell.data_singular->inclusion2.equal());

  auto cm = verify_theorems(cone(kX3, {kCayleyMenger}));
  CHECK(cm.data_isotropic.inclusion1.equal());
  CHECK(cm.data_isotropic.inclusion2.holds);
  CHECK(cm.data_isotropic.inclusion2.strict);

  auto line = verify_theorems(cone(kX3, {"x1 + 2*x2 + 3*x3", "4*x1 + 5*x2 + 6*x3"}));
  CHECK(line.linear_space_skipped);
  CHECK_FALSE(line.data_singular.has_value());
  CHECK(line.data_isotropic.inclusion1.equal());
}

TEST_CASE("analysis memoizes") {
  EdAnalysis a(cone(kX3, {kCusp}));
  const Ideal& d1 = a.dual_variety();
  const Ideal& d2 = a.dual_variety();
  CHECK(&d1 == &d2);
}
