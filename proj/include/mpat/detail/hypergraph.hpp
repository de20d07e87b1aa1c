#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "mpat/family.hpp"
#include "mpat/tensor.hpp"

namespace mpat::detail {

inline constexpr int kMaxSearchCells = 128;

/// Fixed 128-bit set of compact cell indices.
struct CellSet {
  std::array<std::uint64_t, 2> w{};

  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1U; }
  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
  bool empty() const { return (w[0] | w[1]) == 0; }
  bool intersects(const CellSet& o) const { return ((w[0] & o.w[0]) | (w[1] & o.w[1])) != 0; }
  bool subset_of(const CellSet& o) const { return ((w[0] & ~o.w[0]) | (w[1] & ~o.w[1])) == 0; }
  CellSet operator&(const CellSet& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
  CellSet operator|(const CellSet& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
  CellSet operator~() const { return {{~w[0], ~w[1]}}; }
  /// Cells [0, k).
  static CellSet prefix(int k) {
    CellSet s;
    for (int i = 0; i < 2; ++i) {
      const int lo = i * 64;
      if (k >= lo + 64)
        s.w[i] = ~std::uint64_t{0};
      else if (k > lo)
        s.w[i] = (std::uint64_t{1} << (k - lo)) - 1;
    }
    return s;
  }
  friend bool operator==(const CellSet&, const CellSet&) = default;
};

/// Copies of every family member inside an all-ones n^d host, expressed over
/// the compact indices of the cells that remain free.
struct CopyHypergraph {
  Shape host;
  std::uint64_t host_cells = 0;
  /// Cells pinned to 0 because a single-1 member maps onto them.
  std::vector<char> forced_zero;
  /// Free cells in lexicographic order; compact index -> linear host index.
  std::vector<std::uint64_t> cells;
  std::vector<CellSet> masks;
  std::vector<std::vector<int>> mask_cells;
  std::vector<std::vector<int>> incident;  // per compact cell, mask ids
  /// Some member has no 1-entry and fits: every host contains it.
  bool empty_copy = false;

  int size() const { return static_cast<int>(cells.size()); }
};

enum class MaskMode {
  Minimal,  // drop forced-zero cells and keep inclusion-minimal masks
  All,      // keep every cell and every distinct mask
};

/// Builds the hypergraph. Returns false (with `cells` filled) when the free
/// cell count exceeds `max_cells` or kMaxSearchCells; masks are then absent.
bool build_hypergraph(const Family& fam, int n, MaskMode mode, int max_cells, CopyHypergraph& out);

/// Expand a compact 0/1 assignment back into an n^d tensor.
Tensor01 expand(const CopyHypergraph& h, const CellSet& ones);

}  // namespace mpat::detail
