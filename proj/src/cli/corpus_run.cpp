#include <chrono>
#include <functional>
#include <sstream>

#include "edloci/cli.hpp"
#include "edloci/errors.hpp"
#include "edloci/parse.hpp"

namespace edloci::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool ok;
  std::string detail;
};

Ideal expected_ideal(const ExpectedValue& ev, const VarSet& vars) {
  std::vector<Polynomial> gens;
  for (const auto& s : ev.generators) gens.push_back(parse_polynomial(s, vars));
  if (ev.product) {
    Polynomial p = Polynomial::constant(vars, Rational(1));
    for (const auto& g : gens) p = p * g;
    gens = {p};
  }
  return Ideal(vars, gens);
}

std::string join(const std::vector<Polynomial>& gens) {
  std::string s;
  for (const auto& g : gens) s += (s.empty() ? "" : ", ") + g.to_string();
  return s.size() > 160 ? s.substr(0, 157) + "..." : s;
}

std::string flag(const InclusionReport& r) {
  if (!r.holds) return "fails";
  return r.strict ? "strict" : "equal";
}

Verdict check_report(const TheoremReport& r, const std::optional<ExpectedReport>& want) {
  std::string got = flag(r.inclusion1) + "/" + flag(r.inclusion2);
  if (!r.inclusion1.holds || !r.inclusion2.holds) return {false, got};
  if (!want) return {true, got};
  bool ok = r.inclusion1.strict == want->inclusion1_strict && r.inclusion2.strict == want->inclusion2_strict;
  return {ok, got + (ok ? "" : " (expected " + std::string(want->inclusion1_strict ? "strict" : "equal") + "/" +
                                   (want->inclusion2_strict ? "strict" : "equal") + ")")};
}

bool all_homogeneous(const Ideal& i) {
  for (const auto& g : i.generators()) {
    if (!g.is_homogeneous()) return false;
  }
  return true;
}

// Checks that `terms` occur in p with coefficients in one common ratio.
Verdict check_cofactor_terms(const Polynomial& p, const std::vector<std::string>& terms) {
  std::optional<Rational> ratio;
  for (const auto& text : terms) {
    Polynomial t = parse_polynomial(text, p.vars(), p.order());
    const Monomial& m = t.leading_monomial();
    Rational c = 0;
    for (const auto& term : p.terms()) {
      if (term.mono == m) c = term.coef;
    }
    if (c == 0) return {false, "missing term " + text};
    Rational r = c / t.leading_coefficient();
    if (ratio && *ratio != r) return {false, "coefficient of " + text + " out of proportion"};
    ratio = r;
  }
  return {true, ""};
}

class EntryRunner {
 public:
  EntryRunner(const CorpusEntry& e, const JobSpec& settings)
      : entry_(e), settings_(settings), budget_(settings.max_pairs, settings.timeout_sec) {
    ctx_.budget = &budget_;
    if (settings.order == "lex") ctx_.base_order = MonomialOrder::Kind::kLex;
  }

  std::vector<CorpusCheck> run() {
    ParsedInput in = entry_input(entry_);
    vars_ = in.vars;
    step("input", [&]() -> Verdict {
      analysis_.emplace(ConeInput::make(Ideal(in.vars, in.generators), ctx_), ctx_);
      return {true, "codim " + std::to_string(analysis_->cone().codim())};
    });
    if (!analysis_) return std::move(out_);

    for (const char* cmd : {"sing", "dual", "ds", "di"}) {
      auto it = entry_.expected.find(cmd);
      if (it == entry_.expected.end()) continue;
      step(cmd, [&, cmd]() -> Verdict {
        const Ideal& got = locus(cmd);
        Ideal want = expected_ideal(it->second, vars_);
        bool ok = same_variety(got, want, ctx_);
        return {ok, join(display_generators(got))};
      });
    }
    if (entry_.expect_linear_space) {
      step("ds-linear-marker", [&]() -> Verdict {
        bool marker = analysis_->cone().is_linear_space();
        return {marker, marker ? "linear space, DS skipped" : "not detected as linear"};
      });
    }
    if (entry_.expected_ds_degree) {
      step("ds-degree", [&]() -> Verdict {
        const Locus& l = analysis_->data_singular_locus();
        if (l.ideal.generators().size() != 1) return {false, "DS is not principal"};
        int d = l.ideal.generators().front().total_degree();
        return {d == *entry_.expected_ds_degree,
                "degree " + std::to_string(d) + ", expected " + std::to_string(*entry_.expected_ds_degree) + " (" +
                    entry_.ds_degree_source + ")"};
      });
    }
    if (!entry_.di_cofactor_terms.empty()) {
      step("di-cofactor", [&]() -> Verdict {
        const Locus& di = analysis_->data_isotropic_locus();
        const Ideal& dual = analysis_->dual_variety();
        if (di.ideal.generators().size() != 1 || dual.generators().size() != 1) {
          return {false, "DI or dual not principal"};
        }
        auto [q, r] = divide(di.ideal.generators().front(), dual.generators().front());
        if (!r.is_zero()) return {false, "dual does not divide DI"};
        if (q.total_degree() != entry_.di_cofactor_degree) {
          return {false, "cofactor degree " + std::to_string(q.total_degree())};
        }
        return check_cofactor_terms(q, entry_.di_cofactor_terms);
      });
    }
    if (entry_.check_biduality) {
      step("biduality", [&]() -> Verdict {
        const Ideal& dual = analysis_->dual_variety();
        EdAnalysis back(ConeInput::make(dual, ctx_), ctx_);
        const Ideal& bidual = back.dual_variety();
        return {same_variety(bidual, analysis_->cone().ideal(), ctx_), join(display_generators(bidual))};
      });
    }
    step("homogeneous-outputs", [&]() -> Verdict {
      // Stretch entries only check the loci they already computed.
      bool all = entry_.tier == Tier::kCore;
      auto wanted = [&](const char* cmd) { return all || entry_.expected.count(cmd) > 0; };
      std::string bad;
      for (const char* cmd : {"sing", "dual", "ds", "di"}) {
        if (!wanted(cmd)) continue;
        if (std::string(cmd) == "ds" && analysis_->cone().is_linear_space()) continue;
        if (!all_homogeneous(locus(cmd))) bad += std::string(" ") + cmd;
      }
      return {bad.empty(), bad.empty() ? "" : "inhomogeneous:" + bad};
    });
    if (entry_.tier == Tier::kCore) {
      step("verify", [&]() -> Verdict {
        TheoremReports reports = analysis_->verify_theorems();
        std::string detail;
        bool ok = true;
        if (reports.data_singular) {
          Verdict v = check_report(*reports.data_singular, entry_.expected_ds_report);
          ok = ok && v.ok;
          detail += "DS " + v.detail;
        } else {
          detail += "DS skipped";
          ok = ok && analysis_->cone().is_linear_space();
        }
        Verdict v = check_report(reports.data_isotropic, entry_.expected_di_report);
        ok = ok && v.ok;
        detail += ", DI " + v.detail;
        return {ok, detail};
      });
      step("eddeg", [&]() -> Verdict {
        int a = analysis_->ed_degree(settings_.seed);
        int b = analysis_->ed_degree(settings_.seed + 1);
        std::string detail = "seeds " + std::to_string(settings_.seed) + "," + std::to_string(settings_.seed + 1) +
                             " -> " + std::to_string(a) + "," + std::to_string(b);
        bool ok = a == b;
        if (entry_.expected_ed_degree) {
          ok = ok && a == *entry_.expected_ed_degree;
          detail += ", expected " + std::to_string(*entry_.expected_ed_degree) + " (" + entry_.ed_degree_source + ")";
        }
        return {ok, detail};
      });
    }
    return std::move(out_);
  }

 private:
  const Ideal& locus(const std::string& cmd) {
    if (cmd == "sing") return analysis_->singular_locus();
    if (cmd == "dual") return analysis_->dual_variety();
    if (cmd == "ds") return analysis_->data_singular_locus().ideal;
    return analysis_->data_isotropic_locus().ideal;
  }

  void step(const std::string& name, const std::function<Verdict()>& body) {
    CorpusCheck c;
    c.entry = entry_.key;
    c.check = name;
    auto t0 = Clock::now();
    try {
      Verdict v = body();
      c.status = v.ok ? CheckStatus::kPass : CheckStatus::kFail;
      c.detail = v.detail;
    } catch (const BudgetExceeded& e) {
      c.status = CheckStatus::kBudget;
      c.detail = e.what();
    } catch (const GenericityError& e) {
      c.status = CheckStatus::kBudget;
      c.detail = e.what();
    } catch (const std::exception& e) {
      c.status = CheckStatus::kFail;
      c.detail = e.what();
    }
    c.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    out_.push_back(std::move(c));
  }

  const CorpusEntry& entry_;
  const JobSpec& settings_;
  Budget budget_;
  Context ctx_;
  VarSet vars_;
  std::optional<EdAnalysis> analysis_;
  std::vector<CorpusCheck> out_;
};

}  // namespace

std::vector<CorpusCheck> corpus_run(std::string_view key, Tier tier, const JobSpec& settings) {
  std::vector<CorpusCheck> all;
  for (const auto& e : corpus()) {
    if (!key.empty() && e.key != key) continue;
    if (key.empty() && tier != Tier::kAll && e.tier != tier) continue;
    EntryRunner runner(e, settings);
    for (auto& c : runner.run()) all.push_back(std::move(c));
  }
  if (!key.empty() && all.empty()) throw UsageError("unknown corpus key '" + std::string(key) + "'");
  return all;
}

}  // namespace edloci::cli
