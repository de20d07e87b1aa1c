#pragma once

#include <chrono>
#include <optional>

#include "mpat/detail/hypergraph.hpp"
#include "mpat/search.hpp"
#include "search/engines.hpp"

namespace mpat::detail {

enum class Objective { Ex, Sat, Ssat };

/// Builds the hypergraph for one objective. Returns a finished outcome when
/// the search can be skipped (guard hit or trivial answer).
std::optional<SearchOutcome> prepare(const Family& fam, int n, Objective obj, const SearchLimits& limits,
                                     CopyHypergraph& h);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::chrono::duration<double, std::milli> elapsed() const { return std::chrono::steady_clock::now() - start_; }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Fill in the common fields once the search is over.
SearchOutcome finish(const CopyHypergraph& h, const NodeBudget& budget, const Stopwatch& clock,
                     std::optional<CellSet> witness, int value, SearchStatus failure);

}  // namespace mpat::detail
