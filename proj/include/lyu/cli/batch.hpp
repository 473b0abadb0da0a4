#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace lyu::cli {

struct BatchOptions {
  std::filesystem::path spec_file;
  std::filesystem::path out_dir;
  unsigned jobs = 1;
  std::optional<std::filesystem::path> cache_dir;  // default: $LYU_CACHE_DIR, else <out_dir>/cache
};

struct BatchEntry {
  int line = 0;
  std::string text;
  bool ok = false;
  bool cache_hit = false;
  long elapsed_ms = 0;
  int exit_code = 0;
  std::string error;
  std::string result_file;  // relative to out_dir
};

struct BatchSummary {
  std::vector<BatchEntry> entries;  // in spec-file order
  std::size_t succeeded() const;
  std::size_t failed() const;
};

/// Runs every job line of the spec file (blank lines and '#' comments are
/// skipped). Each line holds job options as on the command line, e.g.
/// `--input cycle:7 --invariant table --char 2`. Writes
/// <out>/job-<line>.json per success, <out>/errors.json and <out>/batch_log.json.
BatchSummary run_batch(const BatchOptions& options);

}  // namespace lyu::cli
