#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "mpat/containment.hpp"
#include "mpat/tensor.hpp"

namespace mpat::detail {

/// Host matrix plus a summed-volume table for O(2^d) "any 1 in this box"
/// queries. An optional extra cell is treated as a 1-entry, which lets the
/// predicates ask about host-with-one-flip without rebuilding the table.
class HostIndex {
 public:
  explicit HostIndex(const Tensor01& host);

  const Tensor01& host() const { return *host_; }
  void set_extra(std::optional<std::uint64_t> linear) { extra_ = linear; }

  bool test(const Coord& c) const;
  /// Inclusive 1-based box [lo, hi].
  bool any_in_box(const Coord& lo, const Coord& hi) const;

 private:
  const Tensor01* host_;
  std::vector<std::uint32_t> prefix_;  // empty when the host is too large
  std::array<std::uint64_t, kMaxDims> pstride_{};
  std::optional<std::uint64_t> extra_;
};

/// Backtracking embedding search of one pattern into one host. Variables are
/// the index maps φ_i(j); the search places pattern 1-entries one at a time
/// and keeps every unplaced entry's feasible box non-empty.
class Matcher {
 public:
  Matcher(const HostIndex& host, const Tensor01& pattern);

  /// Pattern side lengths fit inside the host.
  bool fits() const { return fits_; }

  /// Any embedding at all.
  bool exists();
  /// Some embedding maps a 1-entry of the pattern onto `cell`.
  bool exists_through(const Coord& cell);
  /// Lexicographically least embedding in flattened (φ_1..φ_d) order.
  std::optional<Embedding> least_embedding();

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool fix(int i, int j, int v);
  void clear();
  void bounds(int i, int j, int& lo, int& hi) const;
  bool search();
  void plan_order();
  bool place(std::size_t k);
  bool assign(std::size_t k, std::size_t t);
  bool box_ok(std::size_t entry) const;
  bool remaining_boxes_ok(std::size_t from) const;

  const HostIndex& host_;
  const Tensor01& pattern_;
  int d_;
  bool fits_ = true;
  std::vector<Coord> ones_;                // pattern 1-entries
  std::vector<std::vector<int>> phi_;      // 0 = unassigned
  std::vector<std::size_t> order_;
  std::vector<std::vector<int>> free_dims_;  // per order slot
  std::uint64_t nodes_ = 0;
};

}  // namespace mpat::detail
