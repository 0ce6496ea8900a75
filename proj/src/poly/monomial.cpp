#include "edloci/monomial.hpp"

#include <functional>

#include "edloci/errors.hpp"

namespace edloci {

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars) throw UsageError("monomial over too many variables");
}

Monomial::Monomial(std::size_t nvars, std::span<const int> exponents) : Monomial(nvars) {
  if (exponents.size() != nvars) throw UsageError("exponent vector length mismatch");
  for (std::size_t i = 0; i < nvars; ++i) set(i, exponents[i]);
}

void Monomial::set(std::size_t i, int e) {
  if (i >= nvars_) throw UsageError("variable index out of range");
  if (e < 0 || e > 0xFFFF) throw UsageError("exponent out of range");
  exp_[i] = static_cast<Exponent>(e);
  refresh();
}

void Monomial::refresh() {
  degree_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    degree_ += exp_[i];
    if (exp_[i] != 0) mask_ |= 1U << (i % 32);
  }
}

bool Monomial::divides(const Monomial& other) const {
  if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::disjoint(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    if (a.exp_[i] != 0 && b.exp_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    unsigned e = unsigned{a.exp_[i]} + b.exp_[i];
    if (e > 0xFFFF) throw UsageError("exponent overflow");
    r.exp_[i] = static_cast<Monomial::Exponent>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  r.mask_ = a.mask_ | b.mask_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) r.exp_[i] = static_cast<Monomial::Exponent>(a.exp_[i] - b.exp_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
  r.refresh();
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003U ^ exp_[i];
  return h;
}

std::string Monomial::to_string(const VarSet& vars) const {
  if (degree_ == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (exp_[i] > 1) out += '^' + std::to_string(exp_[i]);
  }
  return out;
}

namespace {

Ordering cmp_lex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? Ordering::kGreater : Ordering::kLess;
  }
  return Ordering::kEqual;
}

Ordering cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi, bool whole) {
  unsigned da = 0;
  unsigned db = 0;
  if (whole) {
    da = a.degree();
    db = b.degree();
  } else {
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
  }
  if (da != db) return da > db ? Ordering::kGreater : Ordering::kLess;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? Ordering::kGreater : Ordering::kLess;
  }
  return Ordering::kEqual;
}

Ordering cmp_kind(MonomialOrder::Kind k, const Monomial& a, const Monomial& b, std::size_t lo,
                  std::size_t hi, bool whole) {
  return k == MonomialOrder::Kind::kLex ? cmp_lex(a, b, lo, hi) : cmp_grevlex(a, b, lo, hi, whole);
}

}  // namespace

MonomialOrder MonomialOrder::block(std::size_t split, Kind eliminated, Kind retained) {
  if (eliminated == Kind::kBlock || retained == Kind::kBlock) {
    throw UsageError("block sub-orders must be lex or grevlex");
  }
  return MonomialOrder(Kind::kBlock, split, eliminated, retained);
}

Ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw UsageError("monomials over different numbers of variables");
  const std::size_t n = a.size();
  switch (kind_) {
    case Kind::kLex:
      return cmp_lex(a, b, 0, n);
    case Kind::kGrevlex:
      return cmp_grevlex(a, b, 0, n, true);
    case Kind::kBlock: {
      std::size_t s = split_ < n ? split_ : n;
      Ordering o = cmp_kind(first_, a, b, 0, s, false);
      if (o != Ordering::kEqual) return o;
      return cmp_kind(second_, a, b, s, n, false);
    }
  }
  return Ordering::kEqual;
}

std::string MonomialOrder::name() const {
  auto base = [](Kind k) { return k == Kind::kLex ? std::string("lex") : std::string("grevlex"); };
  if (kind_ != Kind::kBlock) return base(kind_);
  return "block(" + std::to_string(split_) + "," + base(first_) + "," + base(second_) + ")";
}

}  // namespace edloci
