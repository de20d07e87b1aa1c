#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

#include "mpat/cache.hpp"
#include "mpat/pattern_io.hpp"

using namespace mpat;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("mpat-test-" + name + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Cache, StoreLoadMatchesRecomputation) {
  ::unsetenv("MPAT_CACHE_DIR");
  const auto dir = fresh_dir("roundtrip");
  const ResultCache cache(dir);
  const Family fam{make_tensor({2, 2}, {{1, 1}, {2, 2}})};
  const SearchOutcome o = ex_exact(fam, 4);
  const ResultRecord rec = make_record(fam, "ex", 4, o);
  EXPECT_FALSE(cache.load(rec.family_hash, "ex", 4));
  EXPECT_TRUE(cache.store(rec));
  const auto hit = cache.load(rec.family_hash, "ex", 4);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->value, ex_exact(fam, 4).value);
  EXPECT_EQ(hit->witness, o.witness);
  EXPECT_EQ(to_json(*hit), to_json(rec));
  EXPECT_FALSE(cache.load(rec.family_hash, "sat", 4));
  std::filesystem::remove_all(dir);
}

TEST(Cache, SkipsInexactRecords) {
  ::unsetenv("MPAT_CACHE_DIR");
  const auto dir = fresh_dir("inexact");
  const ResultCache cache(dir);
  const Family fam{make_tensor({2, 2}, {{1, 1}, {2, 2}})};
  SearchLimits lim;
  lim.max_cells = 2;
  const ResultRecord rec = make_record(fam, "ex", 4, ex_exact(fam, 4, lim));
  EXPECT_FALSE(rec.exact);
  EXPECT_FALSE(cache.store(rec));
  EXPECT_FALSE(std::filesystem::exists(dir));
}

TEST(Cache, EnvironmentOverridesDirectory) {
  const auto dir = fresh_dir("env");
  ::setenv("MPAT_CACHE_DIR", dir.c_str(), 1);
  const ResultCache cache("/nonexistent/elsewhere");
  EXPECT_EQ(cache.dir(), dir);
  ::unsetenv("MPAT_CACHE_DIR");
  EXPECT_FALSE(ResultCache("").enabled());
}

TEST(Cache, RecordJsonHasEveryField) {
  const Family fam{Tensor01::ones_like({1, 2})};
  const nlohmann::json j = to_json(make_record(fam, "sat", 3, sat_exact(fam, 3)));
  for (const char* key : {"schema", "family_hash", "function", "n", "value", "witness", "witness_weight", "nodes",
                          "elapsed_ms", "exact", "status", "tool_version"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(record_from_json(j).value, j.at("value").get<std::uint64_t>());
}
