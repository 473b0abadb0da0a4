#include <iostream>

#include "CLI11.hpp"
#include "lyu/cli/batch.hpp"
#include "lyu/cli/runner.hpp"
#include "lyu/cli/verify.hpp"

using namespace lyu::cli;

int main(int argc, char** argv) {
  CLI::App app("Homological invariants of squarefree monomial ideals", "lyubeznik");
  app.require_subcommand(0, 1);

  JobSpec job;
  add_job_options(app, job);

  auto* verify = app.add_subcommand("verify", "check the cycle-graph claims for C_n, n in [from, to]");
  VerifyOptions vopt;
  std::uint32_t vchar = 0;
  std::string vformat = "ascii";
  verify->add_option("--from", vopt.from, "smallest n (>= 3)");
  verify->add_option("--to", vopt.to, "largest n");
  verify->add_flag("--extended", vopt.extended, "raise the cap and default range to include n = 8, 9");
  verify->add_option("--char", vchar, "field characteristic");
  verify->add_option("--format", vformat, "ascii | json")->check(CLI::IsMember({"ascii", "json"}));

  auto* batch = app.add_subcommand("batch", "run a file of jobs, one per line");
  BatchOptions bopt;
  batch->add_option("spec", bopt.spec_file, "job file")->required();
  batch->add_option("--out", bopt.out_dir, "archive directory")->required();
  batch->add_option("--jobs", bopt.jobs, "worker threads")->check(CLI::PositiveNumber);
  batch->add_option("--cache-dir", bopt.cache_dir, "shared cache (default: $LYU_CACHE_DIR or <out>/cache)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) {
      if (vopt.extended && verify->count("--to") == 0) vopt.to = 9;
      vopt.field = vchar == 0 ? lyu::FieldSpec::rationals() : lyu::FieldSpec::prime(vchar);
      const auto report = verify_cycle_claims(vopt);
      std::cout << (vformat == "json" ? report.to_json().dump(2) + "\n" : report.to_ascii());
      return report.passed() ? kExitOk : 1;
    }
    if (*batch) {
      const auto summary = run_batch(bopt);
      std::size_t hits = 0;
      for (const auto& e : summary.entries) hits += e.cache_hit;
      std::cout << summary.succeeded() << " succeeded, " << summary.failed() << " failed, " << hits
                << " cache hits; archive in " << bopt.out_dir.string() << "\n";
      return kExitOk;
    }
  } catch (...) {
    const auto [code, message] = classify(std::current_exception());
    std::cerr << "error: " << message << "\n";
    return code;
  }

  if (job.input.empty()) {
    std::cerr << app.help() << "error: --input is required\n";
    return kExitUsage;
  }
  const auto report = run(job);
  if (report.exit_code != kExitOk) {
    std::cerr << "error: " << report.error << "\n";
    return report.exit_code;
  }
  std::cout << report.output;
  return kExitOk;
}
