#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "lyu/cli/results.hpp"

namespace lyu::cli {

inline constexpr const char* kEngineVersion = "lyu-engine-1";
inline constexpr const char* kCacheDirEnv = "LYU_CACHE_DIR";

/// Canonical text of a cache key: sorted generator exponent vectors,
/// characteristic, invariant and unmixed flag. The engine version is kept
/// out of the key and checked separately so stale entries can be detected.
std::string canonical_key(const MonomialIdeal& ideal, const FieldSpec& field, Invariant inv, bool unmixed);

std::uint64_t fnv1a(std::string_view bytes);

/// On-disk store of JobResults, one JSON file per key. Entries whose stored
/// key or engine version differ from the request count as misses.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir, std::string engine_version = kEngineVersion);

  std::optional<JobResult> load(const std::string& key) const;
  void store(const std::string& key, const JobResult& result) const;

  std::filesystem::path entry_path(const std::string& key) const;
  const std::filesystem::path& dir() const { return dir_; }

  /// $LYU_CACHE_DIR, if set and non-empty.
  static std::optional<std::filesystem::path> default_dir();

 private:
  std::filesystem::path dir_;
  std::string version_;
};

}  // namespace lyu::cli
