#pragma once

#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lyu/cli/cache.hpp"
#include "lyu/cli/results.hpp"

namespace lyu::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitDomain = 3, kExitResource = 4 };

struct JobSpec {
  std::string input;  // ideal text, graph file path, or cycle:<n>
  std::optional<std::size_t> vars;
  Invariant invariant = Invariant::All;
  std::uint32_t characteristic = 0;
  OutputFormat format = OutputFormat::Ascii;
  bool unmixed = false;
  std::optional<std::filesystem::path> cache_dir;
};

/// Registers --input --vars --invariant --char --format --unmixed --cache-dir on `app`.
void add_job_options(CLI::App& app, JobSpec& spec);

struct JobOutcome {
  JobResult result;
  bool cache_hit = false;
};

/// Computes (or loads) the result; throws the library's typed errors.
JobOutcome execute(const JobSpec& spec, const ResultCache* cache);

std::string render(const JobResult& result, OutputFormat format);

struct RunReport {
  int exit_code = kExitOk;
  std::string output;
  std::string error;
  bool cache_hit = false;
};

/// execute + render, with errors mapped to exit codes. Uses spec.cache_dir,
/// falling back to $LYU_CACHE_DIR; no caching when neither is set.
RunReport run(const JobSpec& spec);

/// Exit code and message for a caught exception.
std::pair<int, std::string> classify(const std::exception_ptr& e);

}  // namespace lyu::cli
