// Integer-coefficient Buchberger engine.
//
// Polynomials are kept primitive over Z during the run (fraction-free
// reduction) and converted to monic rational form only at the end. The
// parallel path reduces every S-pair of the current minimal sugar degree
// against a frozen snapshot of the basis with OpenMP, then folds the
// remainders in one at a time in pair order. The reduced basis is unique,
// so both paths return identical results. Lex runs serially with the
// normal selection strategy.

#include <algorithm>
#include <exception>
#include <numeric>

#include "edloci/errors.hpp"
#include "edloci/groebner.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace edloci {

namespace {

struct IPoly {
  std::vector<Integer> coef;
  std::vector<Monomial> mono;
  unsigned sugar = 0;

  bool empty() const { return coef.empty(); }
  std::size_t size() const { return coef.size(); }
  const Monomial& lead() const { return mono.front(); }
};

void make_primitive(IPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& c : p.coef) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(p.coef.front()) < 0) g = -g;
  if (g != 1) {
    for (auto& c : p.coef) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

IPoly from_polynomial(const Polynomial& p, const MonomialOrder& ord) {
  Polynomial q = p.with_order(ord);
  IPoly out;
  Integer den = 1;
  for (const auto& t : q.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
  for (const auto& t : q.terms()) {
    out.coef.push_back(t.coef.get_num() * (den / t.coef.get_den()));
    out.mono.push_back(t.mono);
  }
  make_primitive(out);
  out.sugar = q.is_zero() ? 0 : static_cast<unsigned>(q.total_degree());
  return out;
}

class Reducer {
 public:
  Reducer(const MonomialOrder& ord, const Budget& budget) : ord_(ord), budget_(budget) {}

  // Fully reduces p modulo `basis` (only entries flagged in `use`).
  IPoly reduce(IPoly p, const std::vector<IPoly>& basis, const std::vector<char>& use) const {
    std::vector<Integer> rc;
    std::vector<Monomial> rm;
    std::size_t head = 0;
    unsigned steps = 0;
    Integer ma;
    Integer mb;
    Integer g;
    while (head < p.size()) {
      const Monomial& lm = p.mono[head];
      const IPoly* red = nullptr;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (!use[k] || basis[k].empty()) continue;
        if (basis[k].lead().divides(lm) && (red == nullptr || basis[k].size() < red->size())) {
          red = &basis[k];
        }
      }
      if (red == nullptr) {
        rc.push_back(std::move(p.coef[head]));
        rm.push_back(lm);
        ++head;
        continue;
      }
      const Integer& a = p.coef[head];
      const Integer& b = red->coef.front();
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      mpz_divexact(ma.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(mb.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
      if (sgn(mb) < 0) {
        mb = -mb;
        ma = -ma;
      }
      Monomial q = lm / red->lead();
      p = combine(p, head + 1, mb, *red, q, ma);
      head = 0;
      if (mb != 1) {
        for (auto& c : rc) c *= mb;
      }
      if (++steps % 32 == 0) {
        budget_.check_time();
        remove_content(p, rc);
      }
    }
    IPoly out;
    out.coef = std::move(rc);
    out.mono = std::move(rm);
    out.sugar = p.sugar;
    make_primitive(out);
    return out;
  }

  // mb * p[from..] - ma * q * r[1..]; both sides are descending.
  IPoly combine(const IPoly& p, std::size_t from, const Integer& mb, const IPoly& r, const Monomial& q,
                const Integer& ma) const {
    IPoly out;
    out.sugar = std::max(p.sugar, r.sugar + q.degree());
    out.coef.reserve(p.size() - from + r.size());
    out.mono.reserve(p.size() - from + r.size());
    std::size_t i = from;
    std::size_t j = 1;
    Monomial mj;
    if (j < r.size()) mj = r.mono[j] * q;
    while (i < p.size() || j < r.size()) {
      Ordering o = (i == p.size())   ? Ordering::kLess
                   : (j == r.size()) ? Ordering::kGreater
                                     : ord_.compare(p.mono[i], mj);
      if (o == Ordering::kGreater) {
        out.coef.push_back(p.coef[i] * mb);
        out.mono.push_back(p.mono[i]);
        ++i;
      } else {
        Integer c = -(r.coef[j] * ma);
        if (o == Ordering::kEqual) {
          mpz_addmul(c.get_mpz_t(), p.coef[i].get_mpz_t(), mb.get_mpz_t());
          ++i;
        }
        if (sgn(c) != 0) {
          out.coef.push_back(std::move(c));
          out.mono.push_back(mj);
        }
        ++j;
        if (j < r.size()) mj = r.mono[j] * q;
      }
    }
    return out;
  }

  IPoly spoly(const IPoly& f, const IPoly& g) const {
    Monomial l = Monomial::lcm(f.lead(), g.lead());
    Integer gg;
    mpz_gcd(gg.get_mpz_t(), f.coef.front().get_mpz_t(), g.coef.front().get_mpz_t());
    Integer mf = g.coef.front() / gg;
    Integer mg = f.coef.front() / gg;
    // S = mf * (l/lf) * f - mg * (l/lg) * g
    IPoly shifted;
    Monomial qf = l / f.lead();
    shifted.sugar = f.sugar + qf.degree();
    shifted.coef = f.coef;
    shifted.mono.reserve(f.size());
    for (const auto& m : f.mono) shifted.mono.push_back(m * qf);
    return combine(shifted, 1, mf, g, l / g.lead(), mg);
  }

 private:
  static void remove_content(IPoly& p, std::vector<Integer>& rc) {
    Integer g = 0;
    for (const auto& c : p.coef) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return;
    }
    for (const auto& c : rc) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return;
    }
    if (g == 0) return;
    for (auto& c : p.coef) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    for (auto& c : rc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }

  const MonomialOrder& ord_;
  const Budget& budget_;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  unsigned sugar;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& ord, Budget& budget, Execution exec, GroebnerStats& stats)
      : ord_(ord), budget_(budget), exec_(exec), stats_(stats), reducer_(ord, budget) {
    // Sugar selection (and hence equal-sugar batching) only pays off when
    // the order is degree-compatible inside its blocks. Under lex it walks
    // long remainder chains with exploding coefficients, so lex falls back
    // to the normal strategy, one pair at a time.
    using Kind = MonomialOrder::Kind;
    use_sugar_ = ord.kind() == Kind::kGrevlex ||
                     (ord.kind() == Kind::kBlock && ord.eliminated_kind() == Kind::kGrevlex &&
                      ord.retained_kind() == Kind::kGrevlex);
  }

  std::vector<IPoly> run(std::vector<IPoly> input) {
    // Seed with the input, each reduced against what is already there.
    std::stable_sort(input.begin(), input.end(), [this](const IPoly& a, const IPoly& b) {
      return ord_.compare(a.lead(), b.lead()) == Ordering::kLess;
    });
    for (auto& f : input) {
      IPoly r = reducer_.reduce(std::move(f), polys_, active_);
      if (!insert(std::move(r))) return {unit_};
    }
    while (!pairs_.empty()) {
      budget_.check_time();
      if (exec_ == Execution::kSerial || !use_sugar_) {
        Pair p = pop_next();
        budget_.charge_pairs(1);
        ++stats_.pairs_processed;
        IPoly s = reducer_.spoly(polys_[p.i], polys_[p.j]);
        s.sugar = p.sugar;
        IPoly r = reducer_.reduce(std::move(s), polys_, active_);
        if (!insert(std::move(r))) return {unit_};
      } else {
        std::vector<Pair> batch = pop_batch();
        budget_.charge_pairs(batch.size());
        stats_.pairs_processed += batch.size();
        std::vector<IPoly> reduced = reduce_batch(batch);
        for (auto& r : reduced) {
          if (!r.empty()) r = reducer_.reduce(std::move(r), polys_, active_);
          if (!insert(std::move(r))) return {unit_};
        }
      }
    }
    return interreduce();
  }

 private:
  // Returns false when a nonzero constant appeared (unit ideal).
  bool insert(IPoly r) {
    if (r.empty()) {
      ++stats_.zero_reductions;
      return true;
    }
    if (r.lead().is_one()) {
      unit_ = std::move(r);
      unit_.coef = {Integer(1)};
      return false;
    }
    polys_.push_back(std::move(r));
    active_.push_back(0);
    update(polys_.size() - 1);
    return true;
  }

  Pair make_pair(std::size_t i, std::size_t j) const {
    const IPoly& a = polys_[i];
    const IPoly& b = polys_[j];
    Monomial l = Monomial::lcm(a.lead(), b.lead());
    unsigned s = std::max(a.sugar - a.lead().degree(), b.sugar - b.lead().degree()) + l.degree();
    return {i, j, l, s};
  }

  // Gebauer-Moeller update.
  void update(std::size_t h) {
    const Monomial& lh = polys_[h].lead();
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g]) candidates.push_back(make_pair(g, h));
    }
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& p = candidates[k];
      bool coprime = Monomial::coprime(polys_[p.i].lead(), lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t m = k + 1; m < candidates.size() && !dominated; ++m) {
          dominated = candidates[m].lcm.divides(p.lcm);
        }
        for (std::size_t m = 0; m < kept.size() && !dominated; ++m) {
          dominated = kept[m].lcm.divides(p.lcm);
        }
      }
      if (coprime || !dominated) {
        kept.push_back(p);
      } else {
        ++stats_.pairs_pruned;
      }
    }
    std::vector<Pair> next;
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(Monomial::lcm(polys_[p.i].lead(), lh) == p.lcm) &&
                  !(Monomial::lcm(polys_[p.j].lead(), lh) == p.lcm);
      if (drop) {
        ++stats_.pairs_pruned;
      } else {
        next.push_back(std::move(p));
      }
    }
    for (auto& p : kept) {
      if (Monomial::coprime(polys_[p.i].lead(), lh)) {
        ++stats_.pairs_pruned;
      } else {
        next.push_back(std::move(p));
      }
    }
    pairs_ = std::move(next);
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g] && lh.divides(polys_[g].lead())) active_[g] = 0;
    }
    active_[h] = 1;
  }

  bool before(const Pair& a, const Pair& b) const {
    if (use_sugar_ && a.sugar != b.sugar) return a.sugar < b.sugar;
    Ordering o = ord_.compare(a.lcm, b.lcm);
    if (o != Ordering::kEqual) return o == Ordering::kLess;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  Pair pop_next() {
    auto it = std::min_element(pairs_.begin(), pairs_.end(),
                               [this](const Pair& a, const Pair& b) { return before(a, b); });
    Pair p = *it;
    pairs_.erase(it);
    return p;
  }

  std::vector<Pair> pop_batch() {
    static constexpr std::size_t kMaxBatch = 64;
    std::sort(pairs_.begin(), pairs_.end(), [this](const Pair& a, const Pair& b) { return before(a, b); });
    unsigned s = pairs_.front().sugar;
    std::size_t n = 0;
    while (n < pairs_.size() && n < kMaxBatch && pairs_[n].sugar == s) ++n;
    std::vector<Pair> batch(pairs_.begin(), pairs_.begin() + static_cast<std::ptrdiff_t>(n));
    pairs_.erase(pairs_.begin(), pairs_.begin() + static_cast<std::ptrdiff_t>(n));
    return batch;
  }

  std::vector<IPoly> reduce_batch(const std::vector<Pair>& batch) {
    std::vector<IPoly> out(batch.size());
    std::exception_ptr error;
    const auto n = static_cast<long>(batch.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < n; ++k) {
      try {
        const Pair& p = batch[static_cast<std::size_t>(k)];
        IPoly s = reducer_.spoly(polys_[p.i], polys_[p.j]);
        s.sugar = p.sugar;
        out[static_cast<std::size_t>(k)] = reducer_.reduce(std::move(s), polys_, active_);
      } catch (...) {
#pragma omp critical(edloci_batch_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return out;
  }

  // Active elements already have pairwise non-dividing leads, so a full
  // reduction against the others only rewrites tails.
  std::vector<IPoly> interreduce() {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) idx.push_back(k);
    }
    std::vector<IPoly> out(idx.size());
    std::exception_ptr error;
    const auto n = static_cast<long>(idx.size());
#pragma omp parallel for schedule(dynamic, 1) if (exec_ == Execution::kParallel)
    for (long k = 0; k < n; ++k) {
      try {
        std::size_t me = idx[static_cast<std::size_t>(k)];
        std::vector<char> others = active_;
        others[me] = 0;
        out[static_cast<std::size_t>(k)] = reducer_.reduce(polys_[me], polys_, others);
      } catch (...) {
#pragma omp critical(edloci_batch_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return out;
  }

  const MonomialOrder& ord_;
  Budget& budget_;
  Execution exec_;
  bool use_sugar_ = true;
  GroebnerStats& stats_;
  Reducer reducer_;
  std::vector<IPoly> polys_;
  std::vector<char> active_;
  std::vector<Pair> pairs_;
  IPoly unit_;
};

}  // namespace

GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& order, const Context& ctx,
                             GroebnerStats* stats) {
  if (auto cached = ideal.cached_basis(order)) return *cached;
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;
  std::vector<IPoly> input;
  for (const auto& g : ideal.generators()) {
    if (!(g.vars() == ideal.vars())) throw UsageError("generator outside the ideal's ring");
    input.push_back(from_polynomial(g, order));
  }
  Buchberger engine(order, *ctx.budget, ctx.execution, st);
  std::vector<IPoly> reduced = input.empty() ? std::vector<IPoly>{} : engine.run(std::move(input));

  std::vector<Polynomial> basis;
  basis.reserve(reduced.size());
  for (const auto& f : reduced) {
    std::vector<Polynomial::Term> terms;
    terms.reserve(f.size());
    Rational lc(f.coef.front());
    for (std::size_t k = 0; k < f.size(); ++k) terms.push_back({Rational(f.coef[k]) / lc, f.mono[k]});
    basis.push_back(Polynomial::from_terms(ideal.vars(), std::move(terms), order));
  }
  std::sort(basis.begin(), basis.end(), [&order](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) == Ordering::kLess;
  });
  return GroebnerBasis(ideal.vars(), order, std::move(basis));
}

}  // namespace edloci
