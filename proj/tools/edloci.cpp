#include <CLI11.hpp>
#include <iostream>

#include "edloci/cli.hpp"

using namespace edloci::cli;

int main(int argc, char** argv) {
  CLI::App app{"Euclidean distance loci of affine cones"};
  app.require_subcommand(1);

  JobSpec job;
  std::string tier = "core";

  auto add_common = [&](CLI::App* sub, bool takes_input) {
    if (takes_input) {
      sub->add_option("input", job.input_path, "cone definition file");
      sub->add_option("--corpus", job.corpus_key, "built-in corpus key instead of a file");
    }
    sub->add_option("--order", job.order, "monomial order: lex or grevlex")
        ->check(CLI::IsMember({"lex", "grevlex"}));
    sub->add_option("--seed", job.seed, "seed for random data points");
    sub->add_option("--max-pairs", job.max_pairs, "S-pair budget")->check(CLI::PositiveNumber);
    sub->add_option("--timeout-sec", job.timeout_sec, "wall-clock budget in seconds")->check(CLI::PositiveNumber);
    sub->add_flag("--json", job.json, "emit one JSON object");
  };

  struct Sub {
    const char* name;
    const char* help;
    Command command;
  };
  const Sub subs[] = {
      {"dual", "dual variety", Command::kDual},
      {"sing", "singular locus", Command::kSing},
      {"ds", "data singular locus", Command::kDataSingular},
      {"di", "data isotropic locus", Command::kDataIsotropic},
      {"eddeg", "ED degree", Command::kEdDegree},
      {"verify", "check both locus inclusions", Command::kVerify},
      {"corpus-list", "list built-in examples", Command::kCorpusList},
      {"corpus-run", "run built-in examples against expected values", Command::kCorpusRun},
  };
  for (const auto& s : subs) {
    bool corpus_cmd = s.command == Command::kCorpusList || s.command == Command::kCorpusRun;
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, !corpus_cmd);
    if (corpus_cmd) {
      if (s.command == Command::kCorpusRun) sub->add_option("key", job.corpus_key, "entry key (default: whole tier)");
      sub->add_option("--tier", tier, "core, stretch or all")->check(CLI::IsMember({"core", "stretch", "all"}));
    }
    Command c = s.command;
    sub->callback([&job, c] { job.command = c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }
  job.tier = *tier_from_name(tier);
  if (job.command == Command::kCorpusList && tier == "core" && app.get_subcommand("corpus-list")->count("--tier") == 0) {
    job.tier = Tier::kAll;
  }
  RunResult r = run(job);
  (r.exit_code == kExitOk || r.exit_code == kExitCheckFailed || job.json ? std::cout : std::cerr) << r.output;
  return r.exit_code;
}
