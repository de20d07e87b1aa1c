#pragma once

// Deterministic generators for the explicit matrices and families.

#include <cstdint>
#include <optional>
#include <vector>

#include "mpat/family.hpp"
#include "mpat/tensor.hpp"

namespace mpat {

/// The monotone diagonal permutation matrices of shape n0^d. The sign vector
/// for dimensions 1..d-1 runs in ascending binary order with '+' = 0, so the
/// identity comes first. Exact duplicates (only when n0 == 1) are dropped.
Family identity_equivalents(int n0, int d);

/// Streams the n0^d matrices with exactly n0 ones, every pair sharing a
/// coordinate, in lexicographic order of their sorted 1-cell lists.
class JFamilyEnumerator {
 public:
  /// Throws std::length_error when n0^d exceeds `max_cells`.
  JFamilyEnumerator(int n0, int d, std::uint64_t max_cells = 4096);

  std::optional<Tensor01> next();

 private:
  bool advance(bool fresh);
  bool compatible(std::size_t upto, std::uint64_t cell) const;

  Shape shape_;
  int n0_;
  std::vector<Coord> coords_;
  std::vector<std::uint64_t> pick_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Tensor01> j_family(int n0, int d, std::uint64_t max_cells = 4096);

/// P_2, ..., P_{d-r} (dimension i of length 2, single 1 at x_i = 2) followed
/// by Q, a column of k + 1 ones along dimension 0.
Family family_pkr(int d, int k, int r);

struct BdrFamily {
  Tensor01 base;  // (r+1)^d with ones where every coordinate is <= r
  Family fam;     // base with one 0-entry flipped, one pattern per 0-entry
};
BdrFamily family_bdr(int d, int r);

/// The unique saturated n^d matrix for a single-1 pattern: ones exactly where
/// some y_i lies outside [q_i, n - k_i + q_i]. A 1 x ... x 1 pattern gives the
/// all-zero matrix.
Tensor01 single_one_saturated(const Tensor01& p, int n);

/// Ones where at least d - k coordinates fall outside [l_i, n + 1 - l_i],
/// l_i being the family's largest side length in dimension i. Needs
/// n > 2 max l_i.
Tensor01 ssat_witness(const Family& fam, int k, int n);

struct SsatPatternResult {
  Tensor01 pattern;
  int face_insertions = 0;
  bool center_inserted = false;
};
/// Single pattern whose semisaturation exponent is k: faces of dimension
/// k+1..d-1 receive interior entries until each has property (iii), then a
/// central entry is added if no entry is alone in all its layers.
SsatPatternResult ssat_exponent_pattern(int d, int k);

/// n^d matrix with ones exactly where x_i == v.
Tensor01 line_witness(int n, int d, int i, int v);

/// Widen the first maximal empty run of layers in every dimension so the
/// result is target_n^d. Throws if some dimension has no empty layer.
Tensor01 inflate_empty_layers(const Tensor01& m, int target_n);

/// n^d matrix with ones where every coordinate is at most r.
Tensor01 corner_matrix(int d, int r, int n);

}  // namespace mpat
