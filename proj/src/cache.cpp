#include "mpat/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>

#include "mpat/pattern_io.hpp"

namespace mpat {

using nlohmann::json;

json to_json(const ResultRecord& r) {
  return {{"schema", kCacheSchema},
          {"family_hash", r.family_hash},
          {"function", r.function},
          {"n", r.n},
          {"value", r.value},
          {"witness", tensor_to_json(r.witness)},
          {"witness_weight", r.witness.weight()},
          {"nodes", r.nodes},
          {"elapsed_ms", r.elapsed_ms},
          {"exact", r.exact},
          {"status", r.status},
          {"tool_version", kToolVersion}};
}

ResultRecord record_from_json(const json& j) {
  if (j.at("schema").get<int>() != kCacheSchema) throw std::runtime_error("cache record has a different schema");
  ResultRecord r;
  r.family_hash = j.at("family_hash").get<std::string>();
  r.function = j.at("function").get<std::string>();
  r.n = j.at("n").get<int>();
  r.value = j.at("value").get<std::uint64_t>();
  r.witness = tensor_from_json(j.at("witness"));
  r.nodes = j.at("nodes").get<std::uint64_t>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  r.exact = j.at("exact").get<bool>();
  r.status = j.at("status").get<std::string>();
  return r;
}

ResultRecord make_record(const Family& fam, const std::string& function, int n, const SearchOutcome& o) {
  ResultRecord r;
  r.family_hash = family_hash(fam);
  r.function = function;
  r.n = n;
  r.value = o.value;
  r.witness = o.witness;
  r.nodes = o.nodes;
  r.elapsed_ms = o.elapsed.count();
  r.exact = o.exact;
  r.status = to_string(o.status);
  return r;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (const char* env = std::getenv("MPAT_CACHE_DIR"); env && *env) dir_ = env;
}

std::filesystem::path ResultCache::file_for(const std::string& hash, const std::string& function, int n) const {
  return dir_ / (hash + "-" + function + "-" + std::to_string(n) + ".json");
}

std::optional<ResultRecord> ResultCache::load(const std::string& hash, const std::string& function, int n) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(file_for(hash, function, n));
  if (!in) return std::nullopt;
  try {
    ResultRecord r = record_from_json(json::parse(in));
    if (r.family_hash != hash || r.function != function || r.n != n || !r.exact) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable or stale entries are recomputed
  }
}

bool ResultCache::store(const ResultRecord& r) const {
  if (!enabled() || !r.exact) return false;
  std::filesystem::create_directories(dir_);
  const std::filesystem::path target = file_for(r.family_hash, r.function, r.n);
  std::filesystem::path tmp = target;
  tmp += ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream out(tmp);
    if (!out) return false;
    out << to_json(r).dump(2) << '\n';
    if (!out) return false;
  }
  std::filesystem::rename(tmp, target);
  return true;
}

}  // namespace mpat
