#pragma once

// On-disk memo of exact search results, one JSON file per
// (family hash, function, n). Writes go through a temp file and a rename.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "mpat/family.hpp"
#include "mpat/search.hpp"

namespace mpat {

inline constexpr int kCacheSchema = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct ResultRecord {
  std::string family_hash;
  std::string function;
  int n = 0;
  std::uint64_t value = 0;
  Tensor01 witness;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0;
  bool exact = false;
  std::string status;
};

nlohmann::json to_json(const ResultRecord& r);
ResultRecord record_from_json(const nlohmann::json& j);
ResultRecord make_record(const Family& fam, const std::string& function, int n, const SearchOutcome& o);

class ResultCache {
 public:
  /// MPAT_CACHE_DIR, when set, takes precedence over `dir`. An empty result
  /// disables the cache.
  explicit ResultCache(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& dir() const { return dir_; }

  std::optional<ResultRecord> load(const std::string& hash, const std::string& function, int n) const;
  /// Stores exact records only; returns whether a file was written.
  bool store(const ResultRecord& r) const;

 private:
  std::filesystem::path file_for(const std::string& hash, const std::string& function, int n) const;
  std::filesystem::path dir_;
};

}  // namespace mpat
