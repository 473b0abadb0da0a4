#include "lyu/cli/batch.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <thread>

#include "lyu/cli/runner.hpp"

namespace lyu::cli {

std::size_t BatchSummary::succeeded() const {
  std::size_t k = 0;
  for (const auto& e : entries) k += e.ok;
  return k;
}

std::size_t BatchSummary::failed() const { return entries.size() - succeeded(); }

namespace {

JobSpec parse_job_line(const std::string& line) {
  JobSpec spec;
  CLI::App app("job");
  add_job_options(app, spec);
  try {
    app.parse(line, false);
  } catch (const CLI::ParseError& e) {
    throw ParseError(0, "job options", std::string(e.what()));
  }
  if (spec.input.empty()) throw ParseError(0, "--input", "job line has no --input");
  return spec;
}

void write_atomic(const std::filesystem::path& path, const std::string& text) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << text;
    if (!out) throw ResourceError("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

BatchSummary run_batch(const BatchOptions& options) {
  std::ifstream in(options.spec_file);
  if (!in) throw DomainError("cannot read batch spec " + options.spec_file.string());
  std::filesystem::create_directories(options.out_dir);
  const auto cache_dir = options.cache_dir   ? *options.cache_dir
                         : ResultCache::default_dir() ? *ResultCache::default_dir()
                                                      : options.out_dir / "cache";
  const ResultCache cache(cache_dir);

  BatchSummary summary;
  std::string line;
  for (int k = 1; std::getline(in, line); ++k) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.back() == '\r') line.pop_back();
    BatchEntry e;
    e.line = k;
    e.text = line.substr(first);
    summary.entries.push_back(std::move(e));
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx; (idx = next++) < summary.entries.size();) {
      auto& e = summary.entries[idx];
      const auto t0 = std::chrono::steady_clock::now();
      try {
        JobSpec spec = parse_job_line(e.text);
        std::optional<ResultCache> own;
        if (spec.cache_dir) own.emplace(*spec.cache_dir);
        const auto outcome = execute(spec, own ? &*own : &cache);
        e.cache_hit = outcome.cache_hit;
        e.result_file = "job-" + std::to_string(e.line) + ".json";
        write_atomic(options.out_dir / e.result_file, to_json(outcome.result).dump(2) + "\n");
        e.ok = true;
      } catch (...) {
        std::tie(e.exit_code, e.error) = classify(std::current_exception());
      }
      e.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(summary.entries.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  nlohmann::json errors = nlohmann::json::array(), log = nlohmann::json::array();
  for (const auto& e : summary.entries) {
    if (!e.ok)
      errors.push_back({{"line", std::to_string(e.line)},
                        {"job", e.text},
                        {"exit_code", std::to_string(e.exit_code)},
                        {"error", e.error}});
    log.push_back({{"line", std::to_string(e.line)},
                   {"job", e.text},
                   {"status", e.ok ? "ok" : "error"},
                   {"cache_hit", e.cache_hit},
                   {"elapsed_ms", std::to_string(e.elapsed_ms)},
                   {"result", e.result_file}});
  }
  write_atomic(options.out_dir / "errors.json", errors.dump(2) + "\n");
  write_atomic(options.out_dir / "batch_log.json", log.dump(2) + "\n");
  return summary;
}

}  // namespace lyu::cli
