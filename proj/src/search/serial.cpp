#include <atomic>

#include "search/common.hpp"

namespace mpat::reference {

using detail::CellSet;
using detail::CopyHypergraph;
using detail::NodeBudget;
using detail::Objective;

SearchOutcome ex_exact(const Family& fam, int n, const SearchLimits& limits) {
  detail::Stopwatch clock;
  CopyHypergraph h;
  if (auto early = detail::prepare(fam, n, Objective::Ex, limits, h)) return *early;
  NodeBudget budget;
  budget.limit = limits.max_nodes;
  std::atomic<int> best{-1};
  detail::ExEngine(h, budget).maximize(best);
  std::optional<CellSet> witness;
  if (!budget.exhausted) {
    detail::ExEngine e(h, budget);
    if (e.find(best.load())) witness = e.ones();
  }
  return detail::finish(h, budget, clock, witness, best.load(), SearchStatus::NoAvoider);
}

namespace {

SearchOutcome cover_search(const Family& fam, int n, const SearchLimits& limits, Objective obj) {
  detail::Stopwatch clock;
  CopyHypergraph h;
  if (auto early = detail::prepare(fam, n, obj, limits, h)) return *early;
  NodeBudget budget;
  budget.limit = limits.max_nodes;
  for (int w = 0; w <= h.size() && !budget.exhausted; ++w) {
    detail::CoverEngine e(h, budget, obj == Objective::Sat);
    if (e.find(w)) return detail::finish(h, budget, clock, e.ones(), w, SearchStatus::Ok);
  }
  return detail::finish(h, budget, clock, std::nullopt, 0, SearchStatus::NoSaturated);
}

}  // namespace

SearchOutcome sat_exact(const Family& fam, int n, const SearchLimits& limits) {
  return cover_search(fam, n, limits, Objective::Sat);
}

SearchOutcome ssat_exact(const Family& fam, int n, const SearchLimits& limits) {
  return cover_search(fam, n, limits, Objective::Ssat);
}

}  // namespace mpat::reference
