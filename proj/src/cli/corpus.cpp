#include <algorithm>

#include "edloci/cli.hpp"
#include "edloci/parse.hpp"

namespace edloci::cli {

namespace {

const std::string kLit = "literature";

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> c;

  {
    CorpusEntry e;
    e.key = "cuspidal-cubic";
    e.description = "cone over the cuspidal cubic x1^3 + x2^2*x3";
    e.vars = {"x1", "x2", "x3"};
    e.generators = {"x1^3 + x2^2*x3"};
    e.expected["dual"] = {{"4*x1^3 - 27*x2^2*x3"}, kLit};
    e.expected["ds"] = {{"4*x1^4 - 27*x1*x2^2*x3"}, kLit};
    // Sing X is the x3-axis; the point (0,0,1) is cited as singular.
    e.expected["sing"] = {{"x1", "x2"}, "hand computation"};
    e.expected_ds_report = ExpectedReport{true, true, kLit};
    e.expected_ed_degree = 6;
    e.ed_degree_source = "sympy Lagrange-system oracle (tests/oracles/ed_degree_lagrange.py)";
    e.check_biduality = true;
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.key = "ellipse-cone";
    e.description = "cone over the ellipse x1^2 + 4*x2^2 - 9*x3^2";
    e.vars = {"x1", "x2", "x3"};
    e.generators = {"x1^2 + 4*x2^2 - 9*x3^2"};
    e.expected["dual"] = {{"x1^2 + 1/4*x2^2 - 1/9*x3^2"}, kLit};
    e.expected["ds"] = {{"x1^2 + 1/4*x2^2 - 1/9*x3^2"}, kLit};
    e.expected["sing"] = {{"x1", "x2", "x3"}, kLit};
    e.expected_ds_report = ExpectedReport{false, false, kLit};
    e.expected_ds_degree = 2;
    e.ds_degree_source = "literature: d(d-1)^(n-1) with d = 2, n = 3";
    e.expected_ed_degree = 4;
    e.ed_degree_source = "sympy Lagrange-system oracle (tests/oracles/ed_degree_lagrange.py)";
    e.check_biduality = true;
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.key = "det-2x2";
    e.description = "2x2 matrices of rank at most 1, x1*x4 - x2*x3";
    e.vars = {"x1", "x2", "x3", "x4"};
    e.generators = {"x1*x4 - x2*x3"};
    e.expected["ds"] = {{"x1*x4 - x2*x3"}, kLit};
    e.expected["dual"] = {{"x1*x4 - x2*x3"}, kLit};
    e.expected_ed_degree = 2;
    e.ed_degree_source = "singular-value enumeration: C(2,1) truncations";
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.key = "grassmannian-2-4";
    e.description = "Grassmannian of planes in 4-space (Pluecker quadric)";
    e.vars = {"x1", "x2", "x3", "x4", "x5", "x6"};
    e.generators = {"x1*x6 - x2*x5 + x3*x4"};
    e.expected["di"] = {{"x1*x6 - x2*x5 + x3*x4"}, kLit};
    e.expected["dual"] = {{"x1*x6 - x2*x5 + x3*x4"}, kLit};
    e.expected_ed_degree = 2;
    e.ed_degree_source = "sympy Lagrange-system oracle (tests/oracles/ed_degree_lagrange.py)";
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.key = "cayley-menger";
    e.description = "Cayley-Menger variety of three points on a line";
    e.vars = {"x1", "x2", "x3"};
    e.generators = {"x1^2 - 2*x1*x2 + x2^2 - 2*x1*x3 - 2*x2*x3 + x3^2"};
    e.expected["dual"] = {{"x1*x2 + x1*x3 + x2*x3"}, kLit};
    e.expected["di"] = {{"x1*x2 + x1*x3 + x2*x3"}, kLit};
    e.expected_di_report = ExpectedReport{false, true, kLit};
    e.expected_ed_degree = 2;
    e.ed_degree_source = "sympy Lagrange-system oracle (tests/oracles/ed_degree_lagrange.py)";
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.key = "line";
    e.description = "line through the origin, V(x1 + 2*x2 + 3*x3, 4*x1 + 5*x2 + 6*x3)";
    e.vars = {"x1", "x2", "x3"};
    e.generators = {"x1 + 2*x2 + 3*x3", "4*x1 + 5*x2 + 6*x3"};
    e.expected["dual"] = {{"x1 - 2*x2 + x3"}, kLit};
    e.expected["di"] = {{"x1 - 2*x2 + x3"}, kLit};
    e.expected["sing"] = {{"1"}, kLit};
    e.expected_di_report = ExpectedReport{false, false, kLit};
    e.expect_linear_space = true;
    e.expected_ed_degree = 1;
    e.ed_degree_source = "orthogonal projection is unique";
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.key = "fermat-cubic";
    e.description = "cone over the smooth Fermat cubic x1^3 + x2^3 + x3^3";
    e.vars = {"x1", "x2", "x3"};
    e.generators = {"x1^3 + x2^3 + x3^3"};
    e.expected["sing"] = {{"x1", "x2", "x3"}, "hand computation"};
    // Smooth plane curve of degree d has a dual curve of degree d(d-1).
    e.expected_ds_degree = 6;
    e.ds_degree_source = "classical dual-curve degree d(d-1)";
    e.expected_ed_degree = 9;
    e.ed_degree_source = "sympy Lagrange-system oracle (tests/oracles/ed_degree_lagrange.py)";
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.key = "hurwitz-4";
    e.description = "Hurwitz determinant det(H4)/x5";
    e.vars = {"x1", "x2", "x3", "x4", "x5"};
    e.generators = {"x2*x3*x4 - x1*x4^2 - x2^2*x5"};
    e.tier = Tier::kStretch;
    e.expected["dual"] = {{"-x3*x4 + x2*x5", "-x3^2 + x1*x5", "-x2*x3 + x1*x4"}, kLit};
    e.expected["sing"] = {{"x2", "x4"}, kLit};
    e.expected["ds"] = {{"x1*x2^2 + x2*x3*x4 + x4^2*x5",
                         "x2^4*x3 - x1*x2^3*x4 - 2*x1*x2*x4^3 - x3*x4^4 + 2*x2^3*x4*x5 + x2*x4^3*x5"},
                        kLit,
                        true};
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.key = "cayley-cubic";
    e.description = "Cayley's cubic surface, the 3x3 symmetric determinant";
    e.vars = {"x1", "x2", "x3", "x4"};
    e.generators = {"x1^3 - x1*x2^2 - x1*x3^2 + 2*x2*x3*x4 - x1*x4^2"};
    e.tier = Tier::kStretch;
    e.expected["dual"] = {{"x2^2*x3^2 - 2*x1*x2*x3*x4 + x2^2*x4^2 + x3^2*x4^2"}, kLit};
    e.di_cofactor_terms = {"x1^18", "4*x1^16*x2^2", "6*x1^14*x2^4", "729*x3^4*x4^14"};
    e.di_cofactor_degree = 18;
    c.push_back(e);
  }
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

const CorpusEntry* find_entry(std::string_view key) {
  const auto& all = corpus();
  auto it = std::find_if(all.begin(), all.end(), [key](const CorpusEntry& e) { return e.key == key; });
  return it == all.end() ? nullptr : &*it;
}

ParsedInput entry_input(const CorpusEntry& entry) {
  ParsedInput in{VarSet(entry.vars), {}};
  for (const auto& g : entry.generators) in.generators.push_back(parse_polynomial(g, in.vars));
  return in;
}

}  // namespace edloci::cli
