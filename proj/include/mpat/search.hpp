#pragma once

// Exact computation of ex, sat and ssat on n^d hosts, plus the saturation
// predicates. The default entry points split the search tree across OpenMP
// threads; the reference:: versions are single-threaded and share no code
// path with the splitting logic, so tests can compare the two.

#include <chrono>
#include <cstdint>
#include <string>

#include "mpat/family.hpp"
#include "mpat/tensor.hpp"

namespace mpat {

enum class SearchStatus {
  Ok,
  NoAvoider,     // some all-zero member fits, so nothing avoids the family
  NoSaturated,   // no saturated matrix of this size exists
  CellGuard,     // too many free cells; nothing was searched
  NodeGuard,     // node budget exhausted; value is a bound, not exact
};

std::string to_string(SearchStatus s);

struct SearchLimits {
  /// Free-cell guard; 0 selects the per-function default (30 for ex, 20 for
  /// sat and ssat). Never more than 128.
  int max_cells = 0;
  /// Node budget; 0 means unlimited.
  std::uint64_t max_nodes = 0;
  /// OpenMP threads for the parallel versions; 0 uses the runtime default.
  int workers = 0;
};

struct SearchOutcome {
  std::uint64_t value = 0;
  Tensor01 witness;
  std::uint64_t nodes = 0;
  std::chrono::duration<double, std::milli> elapsed{0};
  bool exact = false;
  SearchStatus status = SearchStatus::Ok;
  int free_cells = 0;
};

inline constexpr int kDefaultExCells = 30;
inline constexpr int kDefaultSatCells = 20;

/// Maximum weight of an n^d matrix avoiding every member; the witness is the
/// lexicographically least optimal matrix.
SearchOutcome ex_exact(const Family& fam, int n, const SearchLimits& limits = {});
/// Minimum weight of a saturated n^d matrix; lexicographically least witness.
SearchOutcome sat_exact(const Family& fam, int n, const SearchLimits& limits = {});
/// Minimum weight of a semisaturated n^d matrix; lexicographically least witness.
SearchOutcome ssat_exact(const Family& fam, int n, const SearchLimits& limits = {});

/// Avoids fam, and every 0-to-1 flip creates a copy of some member.
bool is_saturated(const Tensor01& m, const Family& fam);
/// Every 0-to-1 flip creates a copy using the flipped cell.
bool is_semisaturated(const Tensor01& m, const Family& fam);

/// Flip 0-cells in lexicographic order whenever the result still avoids fam.
Tensor01 saturate_greedy(const Family& fam, const Tensor01& seed);

namespace reference {

SearchOutcome ex_exact(const Family& fam, int n, const SearchLimits& limits = {});
SearchOutcome sat_exact(const Family& fam, int n, const SearchLimits& limits = {});
SearchOutcome ssat_exact(const Family& fam, int n, const SearchLimits& limits = {});
bool is_saturated(const Tensor01& m, const Family& fam);
bool is_semisaturated(const Tensor01& m, const Family& fam);

}  // namespace reference

}  // namespace mpat
