#include "lyu/cli/cache.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace lyu::cli {

std::string canonical_key(const MonomialIdeal& ideal, const FieldSpec& field, Invariant inv, bool unmixed) {
  std::vector<std::vector<int>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.exponents());
  std::sort(gens.begin(), gens.end());
  std::string s = "n=" + std::to_string(ideal.nvars()) + ";char=" + std::to_string(field.characteristic) +
                  ";inv=" + to_string(inv) + ";unmixed=" + (unmixed ? "1" : "0") + ";gens=";
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k) s += '|';
    for (std::size_t i = 0; i < gens[k].size(); ++i) s += (i ? "," : "") + std::to_string(gens[k][i]);
  }
  return s;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

ResultCache::ResultCache(std::filesystem::path dir, std::string engine_version)
    : dir_(std::move(dir)), version_(std::move(engine_version)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path ResultCache::entry_path(const std::string& key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(key)));
  return dir_ / name;
}

std::optional<JobResult> ResultCache::load(const std::string& key) const {
  std::ifstream in(entry_path(key));
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("key").get<std::string>() != key || j.at("engine_version").get<std::string>() != version_)
      return std::nullopt;
    return job_result_from_json(j.at("result"));
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entry: recompute and overwrite
  }
}

void ResultCache::store(const std::string& key, const JobResult& result) const {
  static std::atomic<unsigned long> counter{0};
  const auto target = entry_path(key);
  std::ostringstream tag;
  tag << ".tmp-" << ::getpid() << '-' << std::this_thread::get_id() << '-' << counter++;
  const auto tmp = target.string() + tag.str();
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw ResourceError("cannot write cache entry " + tmp);
    nlohmann::json j = {{"key", key}, {"engine_version", version_}, {"result", to_json(result)}};
    out << j.dump(1) << '\n';
    if (!out) throw ResourceError("cannot write cache entry " + tmp);
  }
  std::filesystem::rename(tmp, target);
}

std::optional<std::filesystem::path> ResultCache::default_dir() {
  const char* v = std::getenv(kCacheDirEnv);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::filesystem::path(v);
}

}  // namespace lyu::cli
