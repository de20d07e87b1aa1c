#include "search/common.hpp"

#include <algorithm>
#include <stdexcept>

namespace mpat {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Ok: return "ok";
    case SearchStatus::NoAvoider: return "no-avoider";
    case SearchStatus::NoSaturated: return "no-saturated";
    case SearchStatus::CellGuard: return "cell-guard";
    case SearchStatus::NodeGuard: return "node-guard";
  }
  return "unknown";
}

namespace detail {

std::optional<SearchOutcome> prepare(const Family& fam, int n, Objective obj, const SearchLimits& limits,
                                     CopyHypergraph& h) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const int fallback = obj == Objective::Ex ? kDefaultExCells : kDefaultSatCells;
  const int cap = std::min(limits.max_cells > 0 ? limits.max_cells : fallback, kMaxSearchCells);
  Stopwatch clock;
  const MaskMode mode = obj == Objective::Ssat ? MaskMode::All : MaskMode::Minimal;
  const bool built = build_hypergraph(fam, n, mode, cap, h);
  SearchOutcome out;
  out.witness = Tensor01::zeros(h.host);
  out.free_cells = h.size();
  if (!built) {
    out.status = SearchStatus::CellGuard;
    out.exact = false;
    out.elapsed = clock.elapsed();
    return out;
  }
  if (h.empty_copy && obj != Objective::Ssat) {
    out.status = obj == Objective::Ex ? SearchStatus::NoAvoider : SearchStatus::NoSaturated;
    out.exact = true;
    out.elapsed = clock.elapsed();
    return out;
  }
  return std::nullopt;
}

SearchOutcome finish(const CopyHypergraph& h, const NodeBudget& budget, const Stopwatch& clock,
                     std::optional<CellSet> witness, int value, SearchStatus failure) {
  SearchOutcome out;
  out.free_cells = h.size();
  out.nodes = budget.used.load();
  out.elapsed = clock.elapsed();
  if (budget.exhausted.load()) {
    out.status = SearchStatus::NodeGuard;
    out.exact = false;
    out.value = static_cast<std::uint64_t>(std::max(value, 0));
    out.witness = witness ? expand(h, *witness) : Tensor01::zeros(h.host);
    return out;
  }
  out.exact = true;
  if (!witness) {
    out.status = failure;
    out.witness = Tensor01::zeros(h.host);
    return out;
  }
  out.status = SearchStatus::Ok;
  out.value = static_cast<std::uint64_t>(value);
  out.witness = expand(h, *witness);
  return out;
}

}  // namespace detail
}  // namespace mpat
