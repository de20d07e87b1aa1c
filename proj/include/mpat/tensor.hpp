#pragma once

// d-dimensional 0-1 matrices and their cross-section geometry.
//
// Conventions used across the library:
//   * dimension indices are 0-based;
//   * coordinate values are 1-based, x_i in [1, n_i];
//   * storage linearizes with dimension 0 slowest-varying.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpat {

inline constexpr int kMaxDims = 8;
inline constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 32;

/// Fixed-capacity tuple of at most kMaxDims integers. Unused slots stay zero
/// so that the defaulted comparison is lexicographic for equal lengths.
template <class Tag>
class IndexTuple {
 public:
  constexpr IndexTuple() = default;

  constexpr IndexTuple(std::initializer_list<int> values) {
    if (values.size() > kMaxDims) throw std::length_error("more than 8 dimensions");
    for (int v : values) v_[size_++] = v;
  }

  explicit IndexTuple(std::span<const int> values) {
    if (values.size() > kMaxDims) throw std::length_error("more than 8 dimensions");
    for (int v : values) v_[size_++] = v;
  }

  static IndexTuple filled(int d, int value) {
    IndexTuple t;
    for (int i = 0; i < d; ++i) t.push_back(value);
    return t;
  }

  constexpr int size() const { return size_; }
  constexpr bool empty() const { return size_ == 0; }
  constexpr int operator[](int i) const { return v_[i]; }
  constexpr int& operator[](int i) { return v_[i]; }
  const int* begin() const { return v_.data(); }
  const int* end() const { return v_.data() + size_; }
  int* begin() { return v_.data(); }
  int* end() { return v_.data() + size_; }
  std::span<const int> span() const { return {v_.data(), static_cast<std::size_t>(size_)}; }

  void push_back(int v) {
    if (size_ == kMaxDims) throw std::length_error("more than 8 dimensions");
    v_[size_++] = v;
  }

  /// Copy with position i removed.
  IndexTuple without(int i) const {
    IndexTuple t;
    for (int k = 0; k < size_; ++k)
      if (k != i) t.push_back(v_[k]);
    return t;
  }

  friend constexpr bool operator==(const IndexTuple&, const IndexTuple&) = default;
  friend constexpr auto operator<=>(const IndexTuple&, const IndexTuple&) = default;

 private:
  std::array<int, kMaxDims> v_{};
  int size_ = 0;
};

struct CoordTag {};
struct ShapeTag {};

/// 1-based position of one entry.
using Coord = IndexTuple<CoordTag>;
/// Side lengths n_1..n_d.
using Shape = IndexTuple<ShapeTag>;

std::string to_string(const Coord& c);
std::string to_string(const Shape& s);

/// A set of dimension indices (subset of [0, kMaxDims)).
class DimSet {
 public:
  constexpr DimSet() = default;
  constexpr explicit DimSet(std::uint32_t bits) : bits_(bits) {}
  constexpr DimSet(std::initializer_list<int> dims) {
    for (int i : dims) bits_ |= std::uint32_t{1} << i;
  }
  static constexpr DimSet all(int d) { return DimSet((std::uint32_t{1} << d) - 1); }
  static constexpr DimSet single(int i) { return DimSet(std::uint32_t{1} << i); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(DimSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr DimSet with(int i) const { return DimSet(bits_ | (std::uint32_t{1} << i)); }
  constexpr DimSet minus(DimSet o) const { return DimSet(bits_ & ~o.bits_); }
  constexpr DimSet operator|(DimSet o) const { return DimSet(bits_ | o.bits_); }
  constexpr DimSet operator&(DimSet o) const { return DimSet(bits_ & o.bits_); }
  constexpr int max_dim() const { return bits_ == 0 ? -1 : 31 - std::countl_zero(bits_); }

  std::vector<int> dims() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr bool operator==(DimSet, DimSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// A cross section: the entries whose coordinates on `fixed` equal `at`.
/// Components of `at` outside `fixed` are ignored.
struct SectionSpec {
  DimSet fixed;
  Coord at;

  /// Dimensionality of the section inside a d-dimensional host.
  int dimensionality(int d) const { return d - fixed.size(); }
  /// True iff c lies in this section.
  bool contains(const Coord& c) const {
    for (int i : fixed.dims())
      if (c[i] != at[i]) return false;
    return true;
  }
};

enum class Side : std::uint8_t { Low, High };

/// A face described independently of side lengths: each fixed dimension is
/// pinned to its first (Low) or last (High) index. Instantiating the same
/// FaceSpec against two shapes yields counterpart faces.
struct FaceSpec {
  DimSet fixed;
  DimSet high;  // subset of fixed; the rest of fixed is Low

  Side side(int i) const { return high.contains(i) ? Side::High : Side::Low; }
  friend bool operator==(const FaceSpec&, const FaceSpec&) = default;
};

class TensorBuilder;

/// Immutable d-dimensional 0-1 matrix with dense bit storage.
class Tensor01 {
 public:
  Tensor01() = default;

  static Tensor01 zeros(const Shape& dims);
  static Tensor01 ones_like(const Shape& dims);

  template <class Pred>
  static Tensor01 from_predicate(const Shape& dims, Pred&& pred);

  int rank() const { return dims_.size(); }
  const Shape& dims() const { return dims_; }
  int dim(int i) const { return dims_[i]; }
  std::uint64_t cell_count() const { return cells_; }
  std::uint64_t weight() const { return weight_; }

  bool in_bounds(const Coord& c) const;
  bool get(const Coord& c) const;
  bool test(std::uint64_t linear) const { return (bits_[linear >> 6] >> (linear & 63)) & 1U; }

  std::uint64_t linear_index(const Coord& c) const;
  Coord coord_of(std::uint64_t linear) const;
  std::uint64_t stride(int i) const { return strides_[i]; }

  /// Copy with entry c set to value.
  Tensor01 with(const Coord& c, bool value) const;

  /// All 1-entries in lexicographic order.
  std::vector<Coord> ones() const;

  std::span<const std::uint64_t> words() const { return bits_; }

  friend bool operator==(const Tensor01& a, const Tensor01& b) {
    return a.dims_ == b.dims_ && a.bits_ == b.bits_;
  }

 private:
  friend class TensorBuilder;
  void init_shape(const Shape& dims);
  void recount();

  Shape dims_;
  std::array<std::uint64_t, kMaxDims> strides_{};
  std::uint64_t cells_ = 0;
  std::uint64_t weight_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Mutable staging area for building a Tensor01.
class TensorBuilder {
 public:
  explicit TensorBuilder(const Shape& dims) { t_.init_shape(dims); }
  explicit TensorBuilder(Tensor01 from) : t_(std::move(from)) {}

  const Shape& dims() const { return t_.dims(); }
  bool get(const Coord& c) const { return t_.get(c); }
  bool test(std::uint64_t linear) const { return t_.test(linear); }
  void set(const Coord& c, bool value = true) { set_linear(t_.linear_index(c), value); }
  void set_linear(std::uint64_t linear, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (linear & 63);
    if (value)
      t_.bits_[linear >> 6] |= mask;
    else
      t_.bits_[linear >> 6] &= ~mask;
  }
  Tensor01 build() && {
    t_.recount();
    return std::move(t_);
  }

 private:
  Tensor01 t_;
};

template <class Pred>
Tensor01 Tensor01::from_predicate(const Shape& dims, Pred&& pred) {
  TensorBuilder b(dims);
  const Tensor01 probe = zeros(dims);
  for (std::uint64_t k = 0; k < probe.cell_count(); ++k)
    if (pred(probe.coord_of(k))) b.set_linear(k);
  return std::move(b).build();
}

/// Calls fn(coord) for every coordinate of `dims` in lexicographic order.
template <class Fn>
void for_each_coord(const Shape& dims, Fn&& fn) {
  const int d = dims.size();
  Coord c = Coord::filled(d, 1);
  for (int i = 0; i < d; ++i)
    if (dims[i] < 1) return;
  while (true) {
    fn(static_cast<const Coord&>(c));
    int i = d - 1;
    while (i >= 0 && c[i] == dims[i]) c[i--] = 1;
    if (i < 0) return;
    ++c[i];
  }
}

// ---- construction -------------------------------------------------------

/// Tensor with ones exactly at `ones`. Rejects empty shapes, non-positive
/// side lengths, out-of-range and duplicate coordinates.
Tensor01 make_tensor(const Shape& dims, std::span<const Coord> ones);
Tensor01 make_tensor(const Shape& dims, std::initializer_list<Coord> ones);

// ---- symmetry -----------------------------------------------------------

/// Swap dimensions i and j (side lengths and coordinates).
Tensor01 exchange_dims(const Tensor01& t, int i, int j);
/// Map x_i to n_i + 1 - x_i.
Tensor01 reflect_dim(const Tensor01& t, int i);

// ---- projections --------------------------------------------------------

/// Collapse dimension i: the result is 1 wherever some entry along i is 1.
Tensor01 project(const Tensor01& t, int i);
/// 2-dimensional shadow on dimensions (i, j), shape (n_i, n_j).
Tensor01 project_pair(const Tensor01& t, int i, int j);

// ---- sections and faces -------------------------------------------------

void validate_section(const SectionSpec& s, const Shape& dims);
/// 1-entries of t inside section s, lexicographic.
std::vector<Coord> section_ones(const Tensor01& t, const SectionSpec& s);
/// Concrete section for face f on a host of the given shape.
SectionSpec instantiate_face(const FaceSpec& f, const Shape& dims);
/// C_g and C_f mutually non-nested and |C_g \ C_f| >= k.
bool is_k_orthogonal(const SectionSpec& g, const SectionSpec& f, int k);
bool is_k_orthogonal(DimSet g, DimSet f, int k);

/// i-row through c: every dimension but i fixed.
SectionSpec row_through(const Coord& c, int i);
/// i-layer at index v.
SectionSpec layer(int d, int i, int v);

/// Every FaceSpec with d - dprime fixed dimensions, ordered by the sorted
/// fixed set (lexicographic) and then by side tags (Low < High, first fixed
/// dimension most significant).
std::vector<FaceSpec> faces_of_dimension(int d, int dprime);

/// True iff the i-layer at index v has no 1-entry.
bool layer_is_empty(const Tensor01& t, int i, int v);

}  // namespace mpat
