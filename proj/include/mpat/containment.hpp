#pragma once

// Pattern containment: host contains pattern when strictly increasing index
// maps φ_i : [p_i] -> [n_i] send every 1-entry of the pattern onto a 1-entry
// of the host.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "mpat/family.hpp"
#include "mpat/tensor.hpp"

namespace mpat {

/// Per-dimension strictly increasing index maps, 1-based values.
struct Embedding {
  std::vector<std::vector<int>> maps;

  Coord apply(const Coord& pattern_coord) const;
  friend bool operator==(const Embedding&, const Embedding&) = default;
  friend auto operator<=>(const Embedding&, const Embedding&) = default;
};

/// Lexicographically least embedding in the flattened (φ_1, ..., φ_d) order,
/// or nullopt when host avoids pattern. Throws on rank mismatch.
std::optional<Embedding> contains(const Tensor01& host, const Tensor01& pattern);

/// Existence only; cheaper than contains() when the witness is not needed.
bool occurs(const Tensor01& host, const Tensor01& pattern);

/// True iff some embedding maps a 1-entry of pattern exactly onto `cell`.
/// Requires host(cell) == 1.
bool contains_using(const Tensor01& host, const Tensor01& pattern, const Coord& cell);

struct FamilyMatch {
  std::size_t index;
  Embedding embedding;
};

/// First family member (by family order) contained in host.
std::optional<FamilyMatch> contains_any(const Tensor01& host, const Family& fam);

/// True iff host contains no member of fam.
bool avoids_all(const Tensor01& host, const Family& fam);

/// True iff some member has a copy mapping one of its 1-entries onto cell.
/// Requires host(cell) == 1.
bool any_contains_using(const Tensor01& host, const Family& fam, const Coord& cell);

/// Enumerates the 1-images of every embedding of pattern into an all-ones
/// host of shape `host_dims`, as linear indices of that host. Used to build
/// search hypergraphs. fn(std::span<const std::uint64_t>) is called once per
/// embedding of the occupied pattern indices.
template <class Fn>
void for_each_copy(const Shape& host_dims, const Tensor01& pattern, Fn&& fn);

namespace detail {

/// Per dimension, every admissible assignment of the occupied pattern
/// indices (gaps wide enough for the empty indices between them).
std::vector<std::vector<std::vector<int>>> occupied_assignments(const Shape& host_dims,
                                                                const Tensor01& pattern,
                                                                std::vector<std::vector<int>>& occupied);

}  // namespace detail

template <class Fn>
void for_each_copy(const Shape& host_dims, const Tensor01& pattern, Fn&& fn) {
  const int d = pattern.rank();
  std::vector<std::vector<int>> occupied;
  const auto choices = detail::occupied_assignments(host_dims, pattern, occupied);
  for (const auto& per_dim : choices)
    if (per_dim.empty()) return;

  // slot[i][j] = position of pattern index j (0-based) within occupied[i]
  std::vector<std::vector<int>> slot(d);
  for (int i = 0; i < d; ++i) {
    slot[i].assign(pattern.dim(i), -1);
    for (std::size_t k = 0; k < occupied[i].size(); ++k) slot[i][occupied[i][k]] = static_cast<int>(k);
  }
  const std::vector<Coord> ones = pattern.ones();
  std::array<std::uint64_t, kMaxDims> stride{};
  {
    std::uint64_t s = 1;
    for (int i = d - 1; i >= 0; --i) {
      stride[i] = s;
      s *= static_cast<std::uint64_t>(host_dims[i]);
    }
  }
  std::vector<std::uint64_t> image(ones.size());
  std::array<std::size_t, kMaxDims> pick{};
  while (true) {
    for (std::size_t e = 0; e < ones.size(); ++e) {
      std::uint64_t lin = 0;
      for (int i = 0; i < d; ++i) {
        const int v = choices[i][pick[i]][slot[i][ones[e][i] - 1]];
        lin += static_cast<std::uint64_t>(v - 1) * stride[i];
      }
      image[e] = lin;
    }
    fn(std::span<const std::uint64_t>(image));
    int i = d - 1;
    while (i >= 0 && pick[i] + 1 == choices[i].size()) pick[i--] = 0;
    if (i < 0) return;
    ++pick[i];
  }
}

}  // namespace mpat
