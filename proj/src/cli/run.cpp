#include <chrono>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "edloci/cli.hpp"
#include "edloci/errors.hpp"
#include "edloci/gcd.hpp"
#include "edloci/parse.hpp"

namespace edloci::cli {

using json = nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Context make_context(const JobSpec& job, Budget& budget) {
  Context ctx;
  ctx.budget = &budget;
  if (job.order == "lex") {
    ctx.base_order = MonomialOrder::Kind::kLex;
  } else if (job.order == "grevlex") {
    ctx.base_order = MonomialOrder::Kind::kGrevlex;
  } else {
    throw UsageError("unknown order '" + job.order + "' (expected lex or grevlex)");
  }
  return ctx;
}

ParsedInput load_input(const JobSpec& job) {
  if (!job.corpus_key.empty() && !job.input_path.empty()) {
    throw UsageError("give either an input file or --corpus, not both");
  }
  if (!job.corpus_key.empty()) {
    const CorpusEntry* e = find_entry(job.corpus_key);
    if (e == nullptr) throw UsageError("unknown corpus key '" + job.corpus_key + "'");
    return entry_input(*e);
  }
  if (job.input_path.empty()) throw UsageError("no input: give a file path or --corpus <key>");
  std::ifstream in(job.input_path);
  if (!in) throw UsageError("cannot read '" + job.input_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_input_text(buf.str());
}

json inclusion_json(const InclusionReport& r) {
  json j{{"holds", r.holds}, {"strict", r.strict}, {"witness", nullptr}, {"point", nullptr}};
  if (r.certificate) j["witness"] = r.certificate->normalized().to_string();
  if (r.point) {
    json p = json::array();
    for (const auto& c : *r.point) p.push_back(to_string(c));
    j["point"] = p;
  }
  return j;
}

json theorem_json(const TheoremReport& r) {
  return {{"inclusion1", inclusion_json(r.inclusion1)}, {"inclusion2", inclusion_json(r.inclusion2)}};
}

std::string describe(const InclusionReport& r) {
  if (!r.holds) return "FAILS";
  return r.strict ? "strict" : "equal";
}

struct Outcome {
  std::optional<std::vector<std::string>> generators;
  bool maybe_not_radical = false;
  bool linear_space_skipped = false;
  std::optional<TheoremReports> reports;
  std::optional<int> ed_degree;
};

Outcome execute(Command command, EdAnalysis& analysis, std::uint64_t seed) {
  Outcome out;
  auto gens = [](const Ideal& i) {
    std::vector<std::string> s;
    for (const auto& g : display_generators(i)) s.push_back(g.to_string());
    return s;
  };
  switch (command) {
    case Command::kDual:
      out.generators = gens(analysis.dual_variety());
      break;
    case Command::kSing:
      out.generators = gens(analysis.singular_locus());
      break;
    case Command::kDataSingular:
      if (analysis.cone().is_linear_space()) {
        out.linear_space_skipped = true;
        out.generators = gens(Ideal::unit(analysis.cone().vars()));
      } else {
        const Locus& l = analysis.data_singular_locus();
        out.generators = gens(l.ideal);
        out.maybe_not_radical = l.maybe_not_radical;
      }
      break;
    case Command::kDataIsotropic: {
      const Locus& l = analysis.data_isotropic_locus();
      out.generators = gens(l.ideal);
      out.maybe_not_radical = l.maybe_not_radical;
      break;
    }
    case Command::kEdDegree:
      out.ed_degree = analysis.ed_degree(seed);
      break;
    case Command::kVerify:
      out.reports = analysis.verify_theorems();
      out.linear_space_skipped = out.reports->linear_space_skipped;
      break;
    default:
      throw UsageError("not a pipeline command");
  }
  return out;
}

std::string render_text(const JobSpec& job, const std::string& input_label, const Outcome& o) {
  std::ostringstream s;
  s << "command: " << command_name(job.command) << "\n";
  s << "input: " << input_label << "\n";
  if (o.generators) {
    if (o.linear_space_skipped) s << "linear space: data singular locus is empty\n";
    s << "generators:\n";
    for (const auto& g : *o.generators) s << "  " << g << "\n";
    if (o.maybe_not_radical) s << "note: several generators, radical not taken\n";
  }
  if (o.ed_degree) s << "ed degree: " << *o.ed_degree << "\n";
  if (o.reports) {
    if (o.reports->data_singular) {
      const auto& r = *o.reports->data_singular;
      s << "data singular:  dual in DS: " << describe(r.inclusion1)
        << ", DS in dual + Sing: " << describe(r.inclusion2) << "\n";
    } else {
      s << "data singular:  skipped (linear space)\n";
    }
    const auto& r = o.reports->data_isotropic;
    s << "data isotropic: dual in DI: " << describe(r.inclusion1)
      << ", DI in dual + (Q meet X): " << describe(r.inclusion2) << "\n";
    for (const auto* rep : {o.reports->data_singular ? &o.reports->data_singular->inclusion2 : nullptr,
                            &r.inclusion2}) {
      if (rep && rep->strict && rep->certificate) {
        s << "  strictness witness: " << rep->certificate->normalized().to_string() << "\n";
      }
    }
  }
  return s.str();
}

json base_json(const JobSpec& job, const std::string& input_label) {
  return json{{"command", command_name(job.command)},
              {"input_key_or_path", input_label.empty() ? json(nullptr) : json(input_label)},
              {"order", job.order},
              {"seed", job.seed},
              {"generators", nullptr},
              {"flags", {{"maybe_not_radical", false}, {"linear_space_skipped", false}}},
              {"reports", nullptr},
              {"ed_degree", nullptr},
              {"elapsed_ms", 0},
              {"budget", {{"pairs_used", 0}, {"seconds_used", 0.0}}},
              {"error", nullptr}};
}

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "FAIL";
    case CheckStatus::kBudget:
      return "budget";
  }
  return "?";
}

RunResult run_corpus(const JobSpec& job, Clock::time_point t0) {
  RunResult result;
  if (job.command == Command::kCorpusList) {
    std::ostringstream s;
    json list = json::array();
    for (const auto& e : corpus()) {
      const char* tier = e.tier == Tier::kCore ? "core" : "stretch";
      if (job.tier != Tier::kAll && e.tier != job.tier) continue;
      std::string gens;
      for (const auto& g : e.generators) gens += (gens.empty() ? "" : ", ") + g;
      s << std::left << std::setw(18) << e.key << std::setw(9) << tier << e.description << "\n";
      list.push_back({{"key", e.key}, {"tier", tier}, {"description", e.description}, {"ring", e.vars},
                      {"generators", e.generators}});
    }
    if (job.json) {
      json j = base_json(job, "");
      j["entries"] = list;
      j["elapsed_ms"] = ms_since(t0);
      result.output = j.dump(2) + "\n";
    } else {
      result.output = s.str();
    }
    return result;
  }

  if (!job.corpus_key.empty() && find_entry(job.corpus_key) == nullptr) {
    throw UsageError("unknown corpus key '" + job.corpus_key + "'");
  }
  auto checks = corpus_run(job.corpus_key, job.tier, job);
  bool core_fail = false;
  bool core_budget = false;
  std::ostringstream s;
  json arr = json::array();
  for (const auto& c : checks) {
    const CorpusEntry* e = find_entry(c.entry);
    bool core = e->tier == Tier::kCore;
    if (core && c.status == CheckStatus::kFail) core_fail = true;
    if (core && c.status == CheckStatus::kBudget) core_budget = true;
    s << std::left << std::setw(18) << c.entry << std::setw(22) << c.check << std::setw(8) << status_name(c.status)
      << std::right << std::setw(10) << std::fixed << std::setprecision(1) << c.elapsed_ms << " ms"
      << (core ? "" : "  [stretch]") << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
    arr.push_back({{"entry", c.entry},
                   {"check", c.check},
                   {"status", status_name(c.status)},
                   {"tier", core ? "core" : "stretch"},
                   {"elapsed_ms", c.elapsed_ms},
                   {"detail", c.detail}});
  }
  result.exit_code = core_fail ? kExitCheckFailed : core_budget ? kExitBudget : kExitOk;
  if (job.json) {
    json j = base_json(job, job.corpus_key);
    j["checks"] = arr;
    j["elapsed_ms"] = ms_since(t0);
    result.output = j.dump(2) + "\n";
  } else {
    result.output = s.str();
  }
  return result;
}

}  // namespace

std::string_view command_name(Command c) {
  switch (c) {
    case Command::kDual:
      return "dual";
    case Command::kSing:
      return "sing";
    case Command::kDataSingular:
      return "ds";
    case Command::kDataIsotropic:
      return "di";
    case Command::kEdDegree:
      return "eddeg";
    case Command::kVerify:
      return "verify";
    case Command::kCorpusList:
      return "corpus-list";
    case Command::kCorpusRun:
      return "corpus-run";
  }
  return "?";
}

std::optional<Command> command_from_name(std::string_view name) {
  for (auto c : {Command::kDual, Command::kSing, Command::kDataSingular, Command::kDataIsotropic, Command::kEdDegree,
                 Command::kVerify, Command::kCorpusList, Command::kCorpusRun}) {
    if (command_name(c) == name) return c;
  }
  return std::nullopt;
}

std::optional<Tier> tier_from_name(std::string_view name) {
  if (name == "core") return Tier::kCore;
  if (name == "stretch") return Tier::kStretch;
  if (name == "all") return Tier::kAll;
  return std::nullopt;
}

RunResult run(const JobSpec& job) {
  const auto t0 = Clock::now();
  const bool is_corpus = job.command == Command::kCorpusList || job.command == Command::kCorpusRun;
  std::string label = job.corpus_key.empty() ? job.input_path : job.corpus_key;
  Budget budget(job.max_pairs, job.timeout_sec);
  RunResult result;
  auto fail = [&](int code, const char* kind, const std::string& message) {
    result.exit_code = code;
    if (job.json) {
      json j = base_json(job, label);
      j["error"] = {{"kind", kind}, {"message", message}};
      j["elapsed_ms"] = ms_since(t0);
      j["budget"] = {{"pairs_used", budget.pairs_used()}, {"seconds_used", budget.seconds_used()}};
      result.output = j.dump(2) + "\n";
    } else {
      result.output = std::string("error (") + kind + "): " + message + "\n";
    }
  };
  try {
    if (job.max_pairs == 0 || job.timeout_sec <= 0) throw UsageError("budget must be positive");
    if (is_corpus) return run_corpus(job, t0);
    Context ctx = make_context(job, budget);
    ParsedInput in = load_input(job);
    EdAnalysis analysis(ConeInput::make(Ideal(in.vars, in.generators), ctx), ctx);
    Outcome o = execute(job.command, analysis, job.seed);
    if (job.json) {
      json j = base_json(job, label);
      if (o.generators) j["generators"] = *o.generators;
      j["flags"] = {{"maybe_not_radical", o.maybe_not_radical}, {"linear_space_skipped", o.linear_space_skipped}};
      if (o.reports) {
        j["reports"] = {{"ds", o.reports->data_singular ? theorem_json(*o.reports->data_singular) : json(nullptr)},
                        {"di", theorem_json(o.reports->data_isotropic)}};
      }
      if (o.ed_degree) j["ed_degree"] = *o.ed_degree;
      j["elapsed_ms"] = ms_since(t0);
      j["budget"] = {{"pairs_used", budget.pairs_used()}, {"seconds_used", budget.seconds_used()}};
      result.output = j.dump(2) + "\n";
    } else {
      result.output = render_text(job, label, o);
    }
  } catch (const ParseError& e) {
    fail(kExitParse, "parse", e.what());
  } catch (const UsageError& e) {
    fail(kExitParse, "usage", e.what());
  } catch (const BudgetExceeded& e) {
    fail(kExitBudget, "budget", e.what());
  } catch (const GenericityError& e) {
    fail(kExitBudget, "genericity", e.what());
  } catch (const PreconditionError& e) {
    fail(kExitPrecondition, "precondition", e.what());
  } catch (const DimensionError& e) {
    fail(kExitPrecondition, "dimension", e.what());
  }
  return result;
}

}  // namespace edloci::cli
