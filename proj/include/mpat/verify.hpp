#pragma once

// Finite-n verification suites. Each criterion produces a deterministic JSON
// report (no timings or node counts) so runs can be compared byte for byte.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace mpat {

struct VerifyOptions {
  int workers = 0;
  int max_cells = 32;
  std::uint64_t seed = 20240601;
  int corpus_size = 100;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> failures;
  nlohmann::json checks = nlohmann::json::array();
};

/// Criterion ids run by a named suite: exact-values, inequalities, ssat,
/// decisions, determinism, all. Throws std::invalid_argument otherwise.
std::vector<int> suite_criteria(const std::string& suite);

/// Criteria 1-8 and 10 run checks; 9 summarizes 2-8 and needs their results.
CriterionResult run_criterion(int id, const VerifyOptions& opts, const std::vector<CriterionResult>& earlier = {});

nlohmann::json to_json(const CriterionResult& r);

}  // namespace mpat
