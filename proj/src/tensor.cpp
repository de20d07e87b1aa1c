#include "mpat/tensor.hpp"

#include <sstream>

namespace mpat {

namespace {

template <class T>
std::string tuple_string(const T& t) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ')';
  return os.str();
}

void check_dim(const Tensor01& t, int i) {
  if (i < 0 || i >= t.rank())
    throw std::out_of_range("dimension index " + std::to_string(i) + " out of range for rank " +
                            std::to_string(t.rank()));
}

}  // namespace

std::string to_string(const Coord& c) { return tuple_string(c); }
std::string to_string(const Shape& s) { return tuple_string(s); }

void Tensor01::init_shape(const Shape& dims) {
  if (dims.empty()) throw std::invalid_argument("empty dims vector");
  std::uint64_t cells = 1;
  for (int i = dims.size() - 1; i >= 0; --i) {
    if (dims[i] < 1) throw std::invalid_argument("side lengths must be positive: " + to_string(dims));
    strides_[i] = cells;
    cells *= static_cast<std::uint64_t>(dims[i]);
    if (cells > kMaxCells) throw std::length_error("tensor exceeds 2^32 cells");
  }
  dims_ = dims;
  cells_ = cells;
  weight_ = 0;
  bits_.assign((cells + 63) / 64, 0);
}

void Tensor01::recount() {
  std::uint64_t w = 0;
  for (std::uint64_t word : bits_) w += static_cast<std::uint64_t>(std::popcount(word));
  weight_ = w;
}

Tensor01 Tensor01::zeros(const Shape& dims) {
  Tensor01 t;
  t.init_shape(dims);
  return t;
}

Tensor01 Tensor01::ones_like(const Shape& dims) {
  Tensor01 t;
  t.init_shape(dims);
  for (auto& w : t.bits_) w = ~std::uint64_t{0};
  if (const auto tail = t.cells_ & 63; tail != 0) t.bits_.back() = (std::uint64_t{1} << tail) - 1;
  t.recount();
  return t;
}

bool Tensor01::in_bounds(const Coord& c) const {
  if (c.size() != rank()) return false;
  for (int i = 0; i < rank(); ++i)
    if (c[i] < 1 || c[i] > dims_[i]) return false;
  return true;
}

std::uint64_t Tensor01::linear_index(const Coord& c) const {
  if (!in_bounds(c)) throw std::out_of_range("coordinate " + to_string(c) + " outside " + to_string(dims_));
  std::uint64_t k = 0;
  for (int i = 0; i < rank(); ++i) k += static_cast<std::uint64_t>(c[i] - 1) * strides_[i];
  return k;
}

Coord Tensor01::coord_of(std::uint64_t linear) const {
  Coord c;
  for (int i = 0; i < rank(); ++i) {
    c.push_back(static_cast<int>(linear / strides_[i]) + 1);
    linear %= strides_[i];
  }
  return c;
}

bool Tensor01::get(const Coord& c) const { return test(linear_index(c)); }

Tensor01 Tensor01::with(const Coord& c, bool value) const {
  TensorBuilder b(*this);
  b.set(c, value);
  return std::move(b).build();
}

std::vector<Coord> Tensor01::ones() const {
  std::vector<Coord> out;
  out.reserve(weight_);
  for (std::size_t w = 0; w < bits_.size(); ++w)
    for (std::uint64_t word = bits_[w]; word != 0; word &= word - 1)
      out.push_back(coord_of(w * 64 + static_cast<std::uint64_t>(std::countr_zero(word))));
  return out;
}

Tensor01 make_tensor(const Shape& dims, std::span<const Coord> ones) {
  TensorBuilder b(dims);
  const Tensor01 probe = Tensor01::zeros(dims);
  for (const Coord& c : ones) {
    if (!probe.in_bounds(c))
      throw std::out_of_range("coordinate " + to_string(c) + " outside " + to_string(dims));
    if (b.get(c)) throw std::invalid_argument("duplicate coordinate " + to_string(c));
    b.set(c);
  }
  return std::move(b).build();
}

Tensor01 make_tensor(const Shape& dims, std::initializer_list<Coord> ones) {
  return make_tensor(dims, std::span<const Coord>(ones.begin(), ones.size()));
}

Tensor01 exchange_dims(const Tensor01& t, int i, int j) {
  check_dim(t, i);
  check_dim(t, j);
  if (i == j) throw std::invalid_argument("exchange_dims needs two distinct dimensions");
  Shape dims = t.dims();
  std::swap(dims[i], dims[j]);
  TensorBuilder b(dims);
  for (Coord c : t.ones()) {
    std::swap(c[i], c[j]);
    b.set(c);
  }
  return std::move(b).build();
}

Tensor01 reflect_dim(const Tensor01& t, int i) {
  check_dim(t, i);
  TensorBuilder b(t.dims());
  for (Coord c : t.ones()) {
    c[i] = t.dim(i) + 1 - c[i];
    b.set(c);
  }
  return std::move(b).build();
}

Tensor01 project(const Tensor01& t, int i) {
  check_dim(t, i);
  if (t.rank() < 2) throw std::invalid_argument("cannot project a 1-dimensional tensor");
  TensorBuilder b(t.dims().without(i));
  for (const Coord& c : t.ones()) b.set(c.without(i));
  return std::move(b).build();
}

Tensor01 project_pair(const Tensor01& t, int i, int j) {
  check_dim(t, i);
  check_dim(t, j);
  if (i == j) throw std::invalid_argument("project_pair needs two distinct dimensions");
  TensorBuilder b(Shape{t.dim(i), t.dim(j)});
  for (const Coord& c : t.ones()) b.set(Coord{c[i], c[j]});
  return std::move(b).build();
}

void validate_section(const SectionSpec& s, const Shape& dims) {
  if (s.fixed.max_dim() >= dims.size())
    throw std::invalid_argument("section fixes a dimension outside the host rank");
  for (int i : s.fixed.dims())
    if (s.at.size() <= i || s.at[i] < 1 || s.at[i] > dims[i])
      throw std::out_of_range("section value out of range in dimension " + std::to_string(i));
}

std::vector<Coord> section_ones(const Tensor01& t, const SectionSpec& s) {
  validate_section(s, t.dims());
  std::vector<Coord> out;
  for (const Coord& c : t.ones())
    if (s.contains(c)) out.push_back(c);
  return out;
}

SectionSpec instantiate_face(const FaceSpec& f, const Shape& dims) {
  if (f.fixed.max_dim() >= dims.size()) throw std::invalid_argument("face fixes a dimension outside the rank");
  if (!f.high.subset_of(f.fixed)) throw std::invalid_argument("face side tags outside its fixed set");
  SectionSpec s{f.fixed, Coord::filled(dims.size(), 0)};
  for (int i : f.fixed.dims()) s.at[i] = f.high.contains(i) ? dims[i] : 1;
  return s;
}

bool is_k_orthogonal(DimSet g, DimSet f, int k) {
  if (k < 1) throw std::invalid_argument("k-orthogonality needs k >= 1");
  return !g.subset_of(f) && !f.subset_of(g) && g.minus(f).size() >= k;
}

bool is_k_orthogonal(const SectionSpec& g, const SectionSpec& f, int k) {
  return is_k_orthogonal(g.fixed, f.fixed, k);
}

SectionSpec row_through(const Coord& c, int i) {
  return SectionSpec{DimSet::all(c.size()).minus(DimSet::single(i)), c};
}

SectionSpec layer(int d, int i, int v) {
  SectionSpec s{DimSet::single(i), Coord::filled(d, 0)};
  s.at[i] = v;
  return s;
}

std::vector<FaceSpec> faces_of_dimension(int d, int dprime) {
  if (d < 1 || d > kMaxDims || dprime < 0 || dprime > d) throw std::invalid_argument("face dimensionality out of range");
  const int fixed = d - dprime;
  std::vector<FaceSpec> out;
  std::vector<int> pick(fixed);
  auto rec = [&](auto&& self, int k, int from) -> void {
    if (k == fixed) {
      DimSet set;
      for (int i : pick) set = set.with(i);
      for (std::uint32_t tags = 0; tags < (1U << fixed); ++tags) {
        DimSet high;
        for (int b = 0; b < fixed; ++b)
          if ((tags >> (fixed - 1 - b)) & 1U) high = high.with(pick[b]);
        out.push_back(FaceSpec{set, high});
      }
      return;
    }
    for (int i = from; i < d; ++i) {
      pick[k] = i;
      self(self, k + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

bool layer_is_empty(const Tensor01& t, int i, int v) {
  for (const Coord& c : t.ones())
    if (c[i] == v) return false;
  return true;
}

}  // namespace mpat
