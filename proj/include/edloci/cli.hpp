#ifndef EDLOCI_CLI_HPP
#define EDLOCI_CLI_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edloci/edlocus.hpp"

namespace edloci::cli {

enum class Command { kDual, kSing, kDataSingular, kDataIsotropic, kEdDegree, kVerify, kCorpusList, kCorpusRun };
enum class Tier { kCore, kStretch, kAll };

/// Exit codes of `edloci`.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitParse = 2,
  kExitBudget = 3,
  kExitPrecondition = 4,
};

struct JobSpec {
  Command command = Command::kDual;
  /// Exactly one of input_path / corpus_key is set for pipeline commands;
  /// corpus-run accepts an empty key meaning "every entry in the tier".
  std::string input_path;
  std::string corpus_key;
  std::string order = "grevlex";
  std::uint64_t seed = 1;
  std::uint64_t max_pairs = 2'000'000;
  double timeout_sec = 600;
  bool json = false;
  Tier tier = Tier::kCore;
};

struct ParsedInput {
  VarSet vars;
  std::vector<Polynomial> generators;
};

/// Line-oriented cone description: `#` comments, one `ring <names...>`
/// line, then one `poly <expression>` line per generator.
ParsedInput parse_input_text(std::string_view text);

/// parse_input_text followed by cone validation (homogeneous, proper,
/// nonzero).
ConeInput parse_input(std::string_view text, const Context& ctx = {});

/// Inverse of parse_input_text.
std::string print_input(const VarSet& vars, const std::vector<Polynomial>& generators);

std::string_view command_name(Command c);
std::optional<Command> command_from_name(std::string_view name);
std::optional<Tier> tier_from_name(std::string_view name);

struct RunResult {
  int exit_code = kExitOk;
  std::string output;
};

/// Executes one job end to end and renders its report (text or JSON).
RunResult run(const JobSpec& job);

// ---- built-in corpus ----

struct ExpectedValue {
  /// Generator strings over the entry's ring; compared by variety equality.
  std::vector<std::string> generators;
  /// Where the value comes from: "literature" or an independent oracle.
  std::string source;
  /// The expected ideal is principal, generated by the product of
  /// `generators`.
  bool product = false;
};

struct ExpectedReport {
  bool inclusion1_strict = false;
  bool inclusion2_strict = false;
  std::string source;
};

struct CorpusEntry {
  std::string key;
  std::string description;
  std::vector<std::string> vars;
  std::vector<std::string> generators;
  Tier tier = Tier::kCore;
  /// Keyed by command name: "dual", "sing", "ds", "di".
  std::map<std::string, ExpectedValue> expected;
  std::optional<ExpectedReport> expected_ds_report;
  std::optional<ExpectedReport> expected_di_report;
  std::optional<int> expected_ed_degree;
  std::string ed_degree_source;
  /// Degree of the principal DS generator, with its source.
  std::optional<int> expected_ds_degree;
  std::string ds_degree_source;
  bool check_biduality = false;
  /// DS must come back as the empty-locus linear-space marker.
  bool expect_linear_space = false;
  /// Terms (over the entry's ring) that must appear, up to a common scalar,
  /// in the cofactor of DI after dividing out the dual generator.
  std::vector<std::string> di_cofactor_terms;
  int di_cofactor_degree = 0;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry* find_entry(std::string_view key);
ParsedInput entry_input(const CorpusEntry& entry);

enum class CheckStatus { kPass, kFail, kBudget };

struct CorpusCheck {
  std::string entry;
  std::string check;
  CheckStatus status = CheckStatus::kPass;
  double elapsed_ms = 0;
  std::string detail;
};

/// Runs every expectation of the matching entries (one key, or all entries
/// in `tier` when key is empty). Each entry gets its own budget.
std::vector<CorpusCheck> corpus_run(std::string_view key, Tier tier, const JobSpec& settings);

}  // namespace edloci::cli

#endif  // EDLOCI_CLI_HPP
