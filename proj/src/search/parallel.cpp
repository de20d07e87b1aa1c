#include <omp.h>

#include <algorithm>
#include <atomic>
#include <vector>

#include "search/common.hpp"

namespace mpat {

using detail::CellSet;
using detail::CopyHypergraph;
using detail::NodeBudget;
using detail::Objective;

namespace {

// Subtrees are cut at a fixed depth so the work split does not depend on the
// thread count; the lowest successful prefix wins, matching the serial order.
constexpr int kSplitDepth = 8;

int threads(const SearchLimits& limits) { return limits.workers > 0 ? limits.workers : omp_get_max_threads(); }

bool bit_of(long long prefix, int depth, int i) { return (prefix >> (depth - 1 - i)) & 1; }

void atomic_min(std::atomic<long long>& a, long long v) {
  long long cur = a.load();
  while (v < cur && !a.compare_exchange_weak(cur, v)) {
  }
}

template <class Engine, class Push, class Run>
std::optional<CellSet> first_prefix(const CopyHypergraph& h, NodeBudget& budget, int workers, Push push, Run run,
                                    auto make) {
  const int depth = std::min(h.size(), kSplitDepth);
  const long long count = 1LL << depth;
  std::atomic<long long> found{count};
  std::vector<std::optional<CellSet>> results(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (long long p = 0; p < count; ++p) {
    if (p > found.load() || budget.exhausted.load()) continue;
    Engine e = make();
    bool ok = true;
    for (int i = 0; i < depth && ok; ++i) ok = push(e, bit_of(p, depth, i));
    if (ok && run(e)) {
      results[p] = e.ones();
      atomic_min(found, p);
    }
  }
  if (found.load() == count) return std::nullopt;
  return results[found.load()];
}

SearchOutcome cover_search(const Family& fam, int n, const SearchLimits& limits, Objective obj) {
  detail::Stopwatch clock;
  CopyHypergraph h;
  if (auto early = detail::prepare(fam, n, obj, limits, h)) return *early;
  NodeBudget budget;
  budget.limit = limits.max_nodes;
  const bool avoid = obj == Objective::Sat;
  for (int w = 0; w <= h.size() && !budget.exhausted; ++w) {
    auto witness = first_prefix<detail::CoverEngine>(
        h, budget, threads(limits), [w](detail::CoverEngine& e, bool one) { return e.push(one, w); },
        [w](detail::CoverEngine& e) { return e.find(w); },
        [&] { return detail::CoverEngine(h, budget, avoid); });
    if (witness) return detail::finish(h, budget, clock, witness, w, SearchStatus::Ok);
  }
  return detail::finish(h, budget, clock, std::nullopt, 0, SearchStatus::NoSaturated);
}

}  // namespace

SearchOutcome ex_exact(const Family& fam, int n, const SearchLimits& limits) {
  detail::Stopwatch clock;
  CopyHypergraph h;
  if (auto early = detail::prepare(fam, n, Objective::Ex, limits, h)) return *early;
  NodeBudget budget;
  budget.limit = limits.max_nodes;
  const int depth = std::min(h.size(), kSplitDepth);
  const long long count = 1LL << depth;
  std::atomic<int> best{-1};
  // Heavy prefixes first: all-ones prefix is index count-1.
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads(limits))
  for (long long q = 0; q < count; ++q) {
    if (budget.exhausted.load()) continue;
    const long long p = count - 1 - q;
    detail::ExEngine e(h, budget);
    bool ok = true;
    for (int i = 0; i < depth && ok; ++i) ok = e.push(bit_of(p, depth, i));
    if (ok) e.maximize(best);
  }
  std::optional<CellSet> witness;
  if (!budget.exhausted) {
    const int target = best.load();
    witness = first_prefix<detail::ExEngine>(
        h, budget, threads(limits), [](detail::ExEngine& e, bool one) { return e.push(one); },
        [target](detail::ExEngine& e) { return e.find(target); }, [&] { return detail::ExEngine(h, budget); });
  }
  return detail::finish(h, budget, clock, witness, best.load(), SearchStatus::NoAvoider);
}

SearchOutcome sat_exact(const Family& fam, int n, const SearchLimits& limits) {
  return cover_search(fam, n, limits, Objective::Sat);
}

SearchOutcome ssat_exact(const Family& fam, int n, const SearchLimits& limits) {
  return cover_search(fam, n, limits, Objective::Ssat);
}

}  // namespace mpat
