#pragma once

// Branch-and-bound engines over a copy hypergraph. Cells are decided in
// compact-index order, so a partial assignment is always a prefix.

#include <atomic>
#include <cstdint>
#include <vector>

#include "mpat/detail/hypergraph.hpp"

namespace mpat::detail {

/// Shared node counter. Engines bail out once `limit` is reached.
struct NodeBudget {
  std::uint64_t limit = 0;  // 0 = unlimited
  std::atomic<std::uint64_t> used{0};
  std::atomic<bool> exhausted{false};

  bool tick() {
    const std::uint64_t u = used.fetch_add(1, std::memory_order_relaxed) + 1;
    if (limit != 0 && u > limit) {
      exhausted.store(true, std::memory_order_relaxed);
      return false;
    }
    return !exhausted.load(std::memory_order_relaxed);
  }
};

/// Maximum-weight avoider search.
class ExEngine {
 public:
  ExEngine(const CopyHypergraph& h, NodeBudget& budget);

  int pos() const { return pos_; }
  int weight() const { return weight_; }
  const CellSet& ones() const { return ones_; }

  /// Decide the next cell. Returns false, leaving state unchanged, when a 1
  /// would complete a copy.
  bool push(bool one);
  void pop();

  /// weight + free cells - disjoint unavoidable zeros.
  int upper_bound() const;

  /// Raise *best to the best completion of the current prefix (1 before 0).
  void maximize(std::atomic<int>& best);
  /// First completion in lexicographic order (0 before 1) of weight exactly
  /// `target`; leaves it applied on success.
  bool find(int target);

 private:
  const CopyHypergraph& h_;
  NodeBudget& budget_;
  std::vector<std::vector<int>> by_max_;
  std::vector<int> packing_order_;
  CellSet ones_;
  int pos_ = 0;
  int weight_ = 0;
};

/// Minimum-weight saturated / semisaturated search at a fixed weight budget.
class CoverEngine {
 public:
  /// `avoid` = saturation (copies forbidden); false = semisaturation.
  CoverEngine(const CopyHypergraph& h, NodeBudget& budget, bool avoid);

  int pos() const { return pos_; }
  const CellSet& ones() const { return ones_; }

  /// Decide the next cell; returns false (state unchanged) if the decision is
  /// immediately infeasible for weight budget `w`.
  bool push(bool one, int w);
  void pop();

  /// First completion (0 before 1) with weight <= w; leaves it applied.
  bool find(int w);

 private:
  void set_zero(int c);
  void unset_zero(int c);
  void set_one(int c);
  void unset_one(int c);
  bool feasible(int w) const { return dead_ == 0 && violations_ == 0 && weight_ + need_ <= w; }

  const CopyHypergraph& h_;
  NodeBudget& budget_;
  bool avoid_;
  std::vector<signed char> val_;  // -1 undecided
  std::vector<int> zeros_in_;     // per mask
  std::vector<int> ones_in_;      // per mask
  std::vector<int> alive_;        // per cell: masks with no zero besides the cell
  int need_ = 0;                  // undecided cells with alive == 0
  int dead_ = 0;                  // zero cells with alive == 0
  int violations_ = 0;            // fully-one masks
  int weight_ = 0;
  int pos_ = 0;
  CellSet ones_;
};

}  // namespace mpat::detail
