#include "edloci/polynomial.hpp"

#include <algorithm>

#include "edloci/errors.hpp"

namespace edloci {

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!(a.vars() == b.vars())) throw UsageError("polynomials over different variable sets");
}

using Terms = std::vector<Polynomial::Term>;

// Merge two descending term lists: a + sign*b.
Terms merge(const Terms& a, const Terms& b, const MonomialOrder& ord, bool subtract) {
  Terms out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    Ordering o = (i == a.size())   ? Ordering::kLess
                 : (j == b.size()) ? Ordering::kGreater
                                   : ord.compare(a[i].mono, b[j].mono);
    if (o == Ordering::kGreater) {
      out.push_back(a[i++]);
    } else if (o == Ordering::kLess) {
      out.push_back(b[j++]);
      if (subtract) out.back().coef = -out.back().coef;
    } else {
      Rational c = subtract ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (sgn(c) != 0) out.push_back({std::move(c), a[i].mono});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(VarSet vars, MonomialOrder order) : vars_(std::move(vars)), order_(order) {}

Polynomial Polynomial::from_terms(VarSet vars, std::vector<Term> terms, MonomialOrder order) {
  for (auto& t : terms) {
    if (t.mono.size() != vars.size()) throw UsageError("term monomial length does not match ring");
    if (sgn(t.coef.get_den()) == 0) throw UsageError("zero denominator in coefficient");
    t.coef.canonicalize();
  }
  Polynomial p(std::move(vars), order, std::move(terms));
  p.canonicalize();
  return p;
}

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [this](const Term& a, const Term& b) { return order_.greater(a.mono, b.mono); });
  Terms out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(VarSet vars, const Rational& c, MonomialOrder order) {
  std::size_t n = vars.size();
  Terms t;
  if (sgn(c) != 0) t.push_back({c, Monomial(n)});
  return Polynomial(std::move(vars), order, std::move(t));
}

Polynomial Polynomial::variable(VarSet vars, std::size_t index, MonomialOrder order) {
  if (index >= vars.size()) throw UsageError("variable index out of range");
  Monomial m(vars.size());
  m.set(index, 1);
  Terms t{{Rational(1), m}};
  return Polynomial(std::move(vars), order, std::move(t));
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw UsageError("leading term of the zero polynomial");
  return terms_.front();
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

std::uint64_t Polynomial::support() const {
  std::uint64_t s = 0;
  for (const auto& t : terms_) s |= t.mono.support_mask();
  return s;
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
  if (order == order_) return *this;
  Polynomial p(vars_, order, terms_);
  std::sort(p.terms_.begin(), p.terms_.end(),
            [&order](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  return p;
}

Polynomial Polynomial::with_vars(const VarSet& vars) const {
  if (vars.size() != vars_.size()) throw UsageError("renaming ring must have the same size");
  return Polynomial(vars, order_, terms_);
}

Polynomial Polynomial::remap(const VarSet& target, std::span<const std::size_t> map,
                             const MonomialOrder& order) const {
  if (map.size() != vars_.size()) throw UsageError("variable map has wrong length");
  Terms out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (map[i] >= target.size()) throw UsageError("variable map points outside target ring");
      m.set(map[i], m[map[i]] + t.mono[i]);
    }
    out.push_back({t.coef, m});
  }
  return from_terms(target, std::move(out), order);
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != vars_.size()) throw UsageError("substitution needs one image per variable");
  if (images.empty()) throw UsageError("substitution into a ring without variables");
  const VarSet& target = images[0].vars();
  const MonomialOrder& ord = images[0].order();
  for (const auto& im : images) {
    if (!(im.vars() == target)) throw UsageError("substitution images live in different rings");
  }
  // Cache powers per variable.
  std::vector<std::vector<Polynomial>> powers(vars_.size());
  auto power = [&](std::size_t v, unsigned e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1, ord));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v].with_order(ord));
    return cache[e];
  };
  Polynomial acc(target, ord);
  for (const auto& t : terms_) {
    Polynomial term = Polynomial::constant(target, t.coef, ord);
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (t.mono[v] != 0) term = term * power(v, t.mono[v]);
    }
    acc = acc + term;
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (!(a.order_ == b.order_)) return a + b.with_order(a.order_);
  return Polynomial(a.vars_, a.order_, merge(a.terms_, b.terms_, a.order_, false));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (!(a.order_ == b.order_)) return a - b.with_order(a.order_);
  return Polynomial(a.vars_, a.order_, merge(a.terms_, b.terms_, a.order_, true));
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  if (sgn(c) == 0) return Polynomial(vars_, order_);
  Terms out;
  out.reserve(terms_.size());
  // Monomial orders are multiplicative, so the term order is preserved.
  for (const auto& t : terms_) out.push_back({t.coef * c, t.mono * m});
  return Polynomial(vars_, order_, std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  Polynomial big = large.with_order(a.order_);
  Polynomial acc(a.vars_, a.order_);
  for (const auto& t : small.terms_) {
    Polynomial part = big.mul_term(t.coef, t.mono);
    acc = Polynomial(a.vars_, a.order_, merge(acc.terms_, part.terms_, a.order_, false));
  }
  return acc;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Monomial one(p.vars().size());
  return p.mul_term(c, one);
}

Polynomial Polynomial::pow(long e) const {
  if (e < 0) throw UsageError("negative power");
  Polynomial result = constant(vars_, 1, order_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::differentiate(std::size_t index) const {
  if (index >= vars_.size()) throw UsageError("variable index out of range");
  Terms out;
  for (const auto& t : terms_) {
    unsigned e = t.mono[index];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(index, static_cast<int>(e) - 1);
    out.push_back({t.coef * e, m});
  }
  return from_terms(vars_, std::move(out), order_);
}

namespace {

template <class T>
T eval_impl(const Polynomial& p, std::span<const T> point) {
  if (point.size() != p.vars().size()) throw UsageError("evaluation point has wrong dimension");
  T acc{};
  for (const auto& t : p.terms()) {
    T v = T(t.coef);
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned k = 0; k < t.mono[i]; ++k) v = v * point[i];
    }
    acc = acc + v;
  }
  return acc;
}

}  // namespace

GaussianRational Polynomial::evaluate(std::span<const GaussianRational> point) const {
  return eval_impl<GaussianRational>(*this, point);
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  return eval_impl<Rational>(*this, point);
}

Polynomial Polynomial::normalized() const {
  if (terms_.empty()) return *this;
  Integer den_lcm = 1;
  for (const auto& t : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
  Integer content = 0;
  for (const auto& t : terms_) {
    Integer num = t.coef.get_num() * (den_lcm / t.coef.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  Rational scale(den_lcm, content);
  scale.canonicalize();
  if (sgn(terms_.front().coef) < 0) scale = -scale;
  return scale * *this;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / terms_.front().coef;
  return inv * *this;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += edloci::to_string(c);
    } else {
      if (c != 1) out += edloci::to_string(c) + "*";
      out += t.mono.to_string(vars_);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.vars_ == b.vars_) || a.terms_.size() != b.terms_.size()) return false;
  if (!(a.order_ == b.order_)) return a == b.with_order(a.order_);
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

DivisionResult divide(const Polynomial& p, const Polynomial& divisor) {
  if (divisor.is_zero()) throw UsageError("division by the zero polynomial");
  require_same_ring(p, divisor);
  const MonomialOrder& ord = divisor.order();
  Polynomial rest = p.with_order(ord);
  std::vector<Polynomial::Term> quotient;
  std::vector<Polynomial::Term> remainder;
  const auto& lead = divisor.leading_term();
  while (!rest.is_zero()) {
    const auto& t = rest.leading_term();
    if (lead.mono.divides(t.mono)) {
      Rational c = t.coef / lead.coef;
      Monomial m = t.mono / lead.mono;
      quotient.push_back({c, m});
      rest = rest - divisor.mul_term(c, m);
    } else {
      remainder.push_back(t);
      rest = rest - Polynomial::from_terms(rest.vars(), {t}, ord);
    }
  }
  return {Polynomial::from_terms(p.vars(), std::move(quotient), ord),
          Polynomial::from_terms(p.vars(), std::move(remainder), ord)};
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& divisor) {
  auto r = divide(p, divisor);
  if (!r.remainder.is_zero()) throw UsageError("inexact polynomial division");
  return r.quotient;
}

}  // namespace edloci
