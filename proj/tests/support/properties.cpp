#include "support/properties.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "edloci/cli.hpp"
#include "support/helpers.hpp"

namespace edloci::testing {

namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational coefficient() {
    int n = 0;
    while (n == 0) n = uniform(-5, 5);
    Rational c(n, uniform(1, 3));
    c.canonicalize();
    return c;
  }

  Monomial monomial(std::size_t nvars, int degree) {
    Monomial m(nvars);
    for (int k = 0; k < degree; ++k) {
      std::size_t i = uniform(0, static_cast<int>(nvars) - 1);
      m.set(i, m[i] + 1);
    }
    return m;
  }

  Polynomial poly(const VarSet& vars, int max_degree, int max_terms, const MonomialOrder& ord) {
    std::vector<Polynomial::Term> terms;
    int n = uniform(1, max_terms);
    for (int k = 0; k < n; ++k) terms.push_back({coefficient(), monomial(vars.size(), uniform(0, max_degree))});
    return Polynomial::from_terms(vars, terms, ord);
  }

  Polynomial homogeneous(const VarSet& vars, int degree, int max_terms, const MonomialOrder& ord) {
    std::vector<Polynomial::Term> terms;
    int n = uniform(1, max_terms);
    for (int k = 0; k < n; ++k) terms.push_back({coefficient(), monomial(vars.size(), degree)});
    Polynomial p = Polynomial::from_terms(vars, terms, ord);
    return p.is_zero() ? homogeneous(vars, degree, max_terms, ord) : p;
  }

  VarSet ring(int lo, int hi) {
    static const std::vector<std::string> names{"x", "y", "z", "w"};
    int n = uniform(lo, hi);
    return VarSet(std::vector<std::string>(names.begin(), names.begin() + n));
  }

  Ideal ideal(const VarSet& vars, int max_gens, int max_degree, int max_terms, const MonomialOrder& ord) {
    std::vector<Polynomial> gens;
    int n = uniform(1, max_gens);
    for (int k = 0; k < n; ++k) gens.push_back(poly(vars, max_degree, max_terms, ord));
    return Ideal(vars, gens);
  }

  // Half the time homogeneous, which keeps the unit ideal from dominating.
  Ideal mixed_ideal(const VarSet& vars, const MonomialOrder& ord) {
    const int deg = 4;
    if (uniform(0, 1) == 0) return ideal(vars, 3, deg, 3, ord);
    std::vector<Polynomial> gens;
    int n = uniform(1, 3);
    for (int k = 0; k < n; ++k) gens.push_back(homogeneous(vars, uniform(1, deg), 3, ord));
    return Ideal(vars, gens);
  }

  MonomialOrder order(std::size_t nvars) {
    switch (uniform(0, nvars > 1 ? 2 : 1)) {
      case 0:
        return MonomialOrder::lex();
      case 1:
        return MonomialOrder::grevlex();
      default:
        return MonomialOrder::block(uniform(1, static_cast<int>(nvars) - 1));
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

std::string show(const Ideal& i) {
  std::string s = "(";
  for (const auto& g : i.generators()) s += (s.size() > 1 ? ", " : "") + g.to_string();
  return s + ")";
}

// Runs `body` for each case; body returns an empty string on success or a
// description of the counterexample.
SuiteResult drive(const std::string& name, std::uint64_t seed, int cases,
                  const std::function<std::string(Gen&)>& body) {
  SuiteResult r;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  Gen gen(seed);
  for (int k = 0; k < cases; ++k) {
    std::string err;
    try {
      err = body(gen);
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    ++r.cases;
    if (!err.empty()) {
      if (r.failures++ == 0) r.first_failure = "case " + std::to_string(k) + ": " + err;
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

bool reduces_to_zero(const Polynomial& p, const GroebnerBasis& gb) { return normal_form(p, gb).is_zero(); }

bool all_homogeneous(const Ideal& i) {
  return std::all_of(i.generators().begin(), i.generators().end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

std::string ring_laws(Gen& g) {
  auto vars = g.ring(1, 4);
  auto ord = g.order(vars.size());
  auto a = g.poly(vars, 4, 5, ord);
  auto b = g.poly(vars, 4, 5, ord);
  auto c = g.poly(vars, 4, 5, ord);
  if ((a + b) + c != a + (b + c)) return "addition not associative";
  if ((a * b) * c != a * (b * c)) return "multiplication not associative";
  if (a + b != b + a || a * b != b * a) return "not commutative";
  if (a * (b + c) != a * b + a * c) return "not distributive: " + a.to_string() + " | " + b.to_string();
  if (!(a - a).is_zero()) return "a - a is not zero";
  if (a.pow(2) != a * a) return "pow(2) differs from a*a";
  return "";
}

std::string gb_determinism(Gen& g) {
  auto vars = g.ring(2, 4);
  auto ord = g.order(vars.size());
  auto i = g.mixed_ideal(vars, ord);
  auto gens = i.generators();
  std::shuffle(gens.begin(), gens.end(), g.engine());
  for (auto& p : gens) p = g.coefficient() * p;
  Context serial;
  serial.execution = Execution::kSerial;
  auto a = groebner_basis(i, ord, serial);
  auto b = groebner_basis(Ideal(vars, gens), ord, serial);
  if (!(a == b)) return "permuted/rescaled generators changed the basis of " + show(i);
  auto c = groebner_basis(Ideal(vars, gens), ord);
  if (!(a == c)) return "parallel basis differs from serial for " + show(i);
  return "";
}

std::string normal_form_laws(Gen& g) {
  auto vars = g.ring(2, 4);
  auto ord = g.order(vars.size());
  auto gb = groebner_basis(g.mixed_ideal(vars, ord), ord);
  auto p = g.poly(vars, 4, 5, ord);
  auto q = g.poly(vars, 4, 5, ord);
  auto a = g.coefficient();
  auto b = g.coefficient();
  auto np = normal_form(p, gb);
  if (normal_form(np, gb) != np) return "not idempotent on " + p.to_string();
  if (normal_form(a * p + b * q, gb) != a * np + b * normal_form(q, gb)) return "not linear";
  if (!gb.contains(p - np)) return "p - NF(p) is not in the ideal";
  for (const auto& t : np.terms()) {
    for (const auto& h : gb.basis()) {
      if (h.leading_monomial().divides(t.mono)) return "remainder term divisible by a leading term";
    }
  }
  return "";
}

std::string spoly_certificate(Gen& g) {
  auto vars = g.ring(2, 4);
  auto ord = g.order(vars.size());
  auto i = g.mixed_ideal(vars, ord);
  auto gb = groebner_basis(i, ord);
  const auto& B = gb.basis();
  for (std::size_t a = 0; a < B.size(); ++a) {
    if (B[a].leading_coefficient() != 1) return "basis element not monic";
    for (std::size_t b = a + 1; b < B.size(); ++b) {
      if (!reduces_to_zero(s_polynomial(B[a], B[b]), gb)) return "S-polynomial does not reduce to 0 for " + show(i);
    }
  }
  for (const auto& p : i.generators()) {
    if (!reduces_to_zero(p, gb)) return "generator not in the basis ideal";
  }
  // membership the other way: the original generators extended by the
  // basis span the same ideal
  std::vector<Polynomial> ext = i.generators();
  ext.insert(ext.end(), B.begin(), B.end());
  if (!(groebner_basis(Ideal(vars, ext), ord) == gb)) return "extended generators give another basis";
  return "";
}

std::string elimination_soundness(Gen& g) {
  auto vars = g.ring(3, 4);
  auto ord = MonomialOrder::grevlex();
  // x - h(rest) together with ideals in the rest: the elimination ideal is
  // exactly the part in the remaining variables
  auto rest = VarSet(std::vector<std::string>(vars.names().begin() + 1, vars.names().end()));
  std::vector<std::size_t> shift;
  for (std::size_t k = 0; k < rest.size(); ++k) shift.push_back(k + 1);
  auto j = g.ideal(rest, 2, 3, 3, ord);
  auto h = g.poly(rest, 2, 3, ord).remap(vars, shift, ord);
  std::vector<Polynomial> gens{Polynomial::variable(vars, 0) - h};
  for (const auto& p : j.generators()) gens.push_back(p.remap(vars, shift, ord) * g.poly(vars, 1, 2, ord));
  Ideal i(vars, gens);
  auto e = eliminate(i, std::vector<std::size_t>{0});
  if (e.vars() != rest) return "wrong ring after elimination";
  auto gb_i = groebner_basis(i, ord);
  for (const auto& p : e.generators()) {
    if (!gb_i.contains(p.remap(vars, shift, ord))) return "eliminant not in the ideal of " + show(i);
  }
  // every element of I free of x lies in the elimination ideal: p(rest) * (x - h) + q, reduced
  auto egb = groebner_basis(e, ord);
  for (const auto& p : gens) {
    // substitute x := h, which maps I onto its elimination ideal here
    std::vector<Polynomial> images{h};
    for (std::size_t k = 1; k < vars.size(); ++k) images.push_back(Polynomial::variable(vars, k, ord));
    auto s = p.substitute(images);
    if (s.uses_variable(0)) return "substitution kept x";
    std::vector<Polynomial> back;
    back.push_back(Polynomial(rest, ord));
    for (std::size_t k = 0; k < rest.size(); ++k) back.push_back(Polynomial::variable(rest, k, ord));
    if (!egb.contains(s.substitute(back))) return "x-free element of I missing from the elimination ideal";
  }
  return "";
}

std::string saturation_laws(Gen& g) {
  auto vars = g.ring(2, 3);
  auto ord = MonomialOrder::grevlex();
  bool homogeneous = g.uniform(0, 1) == 0;
  Polynomial s = homogeneous ? Polynomial::variable(vars, g.uniform(0, static_cast<int>(vars.size()) - 1))
                             : g.poly(vars, 2, 2, ord);
  if (s.is_constant()) s = s + Polynomial::variable(vars, 0);
  auto h = homogeneous ? g.homogeneous(vars, g.uniform(1, 2), 3, ord) : g.poly(vars, 2, 3, ord);
  auto other = homogeneous ? g.homogeneous(vars, g.uniform(1, 3), 3, ord) : g.poly(vars, 3, 3, ord);
  // s^k * h in I, so h in I : s^inf
  Ideal i(vars, {s.pow(g.uniform(1, 3)) * h, other});
  auto sat = saturate(i, s);
  auto sat_gb = groebner_basis(sat, ord);
  for (const auto& p : i.generators()) {
    if (!sat_gb.contains(p)) return "I not contained in its saturation";
  }
  if (!sat_gb.contains(h)) return "constructed element missing from saturation of " + show(i);
  if (!(groebner_basis(saturate(sat, s), ord) == sat_gb)) return "saturation not idempotent";
  auto rab = saturate(i, s, {}, SaturationMethod::kRabinowitsch);
  if (!(groebner_basis(rab, ord) == sat_gb)) return "auto and Rabinowitsch saturations differ for " + show(i);
  if (homogeneous && !all_homogeneous(reduced(sat))) return "saturation of homogeneous ideal not homogeneous";
  return "";
}

std::string euler_and_scaling(Gen& g) {
  auto vars = g.ring(1, 4);
  auto ord = MonomialOrder::grevlex();
  int d = g.uniform(1, 4);
  auto f = g.homogeneous(vars, d, 5, ord);
  Polynomial euler(vars, ord);
  for (std::size_t i = 0; i < vars.size(); ++i) euler = euler + Polynomial::variable(vars, i, ord) * f.differentiate(i);
  if (euler != Rational(d) * f) return "Euler relation fails for " + f.to_string();
  Rational lambda = g.coefficient();
  std::vector<Rational> x;
  std::vector<Rational> lx;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    x.push_back(g.coefficient());
    lx.push_back(lambda * x.back());
  }
  Rational scale = 1;
  for (int k = 0; k < d - 1; ++k) scale *= lambda;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto gi = f.differentiate(i);
    if (gi.evaluate(std::span<const Rational>(lx)) != scale * gi.evaluate(std::span<const Rational>(x))) {
      return "gradient scaling fails for " + f.to_string();
    }
  }
  return "";
}

std::string homogeneous_bases(Gen& g) {
  auto vars = g.ring(2, 4);
  auto ord = g.order(vars.size());
  std::vector<Polynomial> gens;
  int n = g.uniform(1, 3);
  for (int k = 0; k < n; ++k) gens.push_back(g.homogeneous(vars, g.uniform(1, 3), 3, ord));
  Ideal i(vars, gens);
  auto gb = groebner_basis(i, ord);
  for (const auto& p : gb.basis()) {
    if (!p.is_homogeneous()) return "inhomogeneous basis element for " + show(i);
  }
  auto e = eliminate(i, std::vector<std::size_t>{0});
  if (!all_homogeneous(e)) return "inhomogeneous eliminant";
  return "";
}

std::string minor_expansion(Gen& g) {
  auto vars = g.ring(2, 4);
  auto ord = MonomialOrder::grevlex();
  std::size_t n = g.uniform(2, 4);
  std::vector<Polynomial> entries;
  for (std::size_t k = 0; k < n * n; ++k) {
    entries.push_back(g.uniform(0, 3) == 0 ? Polynomial(vars, ord) : g.poly(vars, 1, 2, ord));
  }
  PolyMatrix m(vars, n, n, entries);
  auto det = determinant(m, 0);
  for (std::size_t row = 1; row < n; ++row) {
    if (determinant(m, row) != det) return "row expansions disagree";
  }
  auto full = minors(m, n, Execution::kSerial);
  if (det.is_zero() != full.empty()) return "minors and determinant disagree on zero";
  if (!full.empty() && full[0].normalized() != det.normalized()) return "top minor is not the determinant";
  if (minors(m, n - 1, Execution::kSerial) != minors(m, n - 1, Execution::kParallel)) return "parallel minors differ";
  return "";
}

std::string variety_sum_symmetry(Gen& g) {
  auto vars = g.ring(2, 3);
  auto ord = MonomialOrder::grevlex();
  auto lin = [&]() {
    std::vector<Polynomial> gens;
    int n = g.uniform(1, static_cast<int>(vars.size()) - 1);
    for (int k = 0; k < n; ++k) gens.push_back(g.homogeneous(vars, g.uniform(1, 2), 2, ord));
    return Ideal(vars, gens);
  };
  auto a = lin();
  auto b = lin();
  auto ab = groebner_basis(variety_sum(a, b), ord);
  auto ba = groebner_basis(variety_sum(b, a), ord);
  if (!(ab == ba)) return "variety_sum not symmetric for " + show(a) + " + " + show(b);
  if (!all_homogeneous(Ideal(ab))) return "variety_sum of cones not homogeneous";
  return "";
}

std::string parse_round_trip(Gen& g) {
  auto vars = g.ring(1, 4);
  auto ord = g.order(vars.size());
  std::vector<Polynomial> gens;
  int n = g.uniform(1, 3);
  for (int k = 0; k < n; ++k) gens.push_back(g.poly(vars, 4, 5, ord).with_order(MonomialOrder::grevlex()));
  auto in = cli::parse_input_text(cli::print_input(vars, gens));
  if (in.vars != vars) return "ring changed";
  if (in.generators != gens) return "generators changed";
  for (const auto& p : gens) {
    if (parse_polynomial(p.to_string(), vars) != p) return "polynomial round trip failed: " + p.to_string();
  }
  return "";
}

}  // namespace

const std::vector<Suite>& property_suites() {
  auto make = [](std::string name, int cases, std::string (*body)(Gen&)) {
    return Suite{name, cases, [name, body](std::uint64_t seed, int n) { return drive(name, seed, n, body); }};
  };
  static const std::vector<Suite> suites{
      make("ring-laws", 1000, ring_laws),
      make("gb-determinism", 500, gb_determinism),
      make("normal-form", 500, normal_form_laws),
      make("s-polynomial-certificate", 500, spoly_certificate),
      make("elimination-soundness", 500, elimination_soundness),
      make("saturation", 500, saturation_laws),
      make("euler-and-gradient-scaling", 500, euler_and_scaling),
      make("homogeneous-bases", 500, homogeneous_bases),
      make("minor-expansion", 500, minor_expansion),
      make("variety-sum-symmetry", 500, variety_sum_symmetry),
      make("parse-round-trip", 500, parse_round_trip),
  };
  return suites;
}

}  // namespace edloci::testing
