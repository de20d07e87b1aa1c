#include "mpat/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mpat/transforms.hpp"

namespace mpat {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

Shape cube(int d, int n) { return Shape::filled(d, n); }

}  // namespace

Family identity_equivalents(int n0, int d) {
  require(n0 >= 1 && d >= 1 && d <= kMaxDims, "identity_equivalents needs n0 >= 1 and 1 <= d <= 8");
  std::vector<Tensor01> out;
  for (std::uint32_t signs = 0; signs < (1U << (d - 1)); ++signs) {
    TensorBuilder b(cube(d, n0));
    for (int j = 1; j <= n0; ++j) {
      Coord c;
      c.push_back(j);
      for (int i = 1; i < d; ++i) c.push_back((signs >> (d - 1 - i)) & 1U ? n0 + 1 - j : j);
      b.set(c);
    }
    out.push_back(std::move(b).build());
  }
  return Family::deduplicated(std::move(out));
}

JFamilyEnumerator::JFamilyEnumerator(int n0, int d, std::uint64_t max_cells) : n0_(n0) {
  require(n0 >= 1 && d >= 1 && d <= kMaxDims, "j_family needs n0 >= 1 and 1 <= d <= 8");
  shape_ = cube(d, n0);
  std::uint64_t cells = 1;
  for (int i = 0; i < d; ++i) {
    cells *= static_cast<std::uint64_t>(n0);
    if (cells > max_cells) throw std::length_error("j_family enumeration exceeds the cell guard");
  }
  for_each_coord(shape_, [&](const Coord& c) { coords_.push_back(c); });
}

bool JFamilyEnumerator::compatible(std::size_t upto, std::uint64_t cell) const {
  const Coord& c = coords_[cell];
  for (std::size_t k = 0; k < upto; ++k) {
    const Coord& o = coords_[pick_[k]];
    bool share = false;
    for (int i = 0; i < c.size() && !share; ++i) share = c[i] == o[i];
    if (!share) return false;
  }
  return true;
}

bool JFamilyEnumerator::advance(bool fresh) {
  const std::uint64_t total = coords_.size();
  const std::size_t want = static_cast<std::size_t>(n0_);
  std::uint64_t from = 0;
  if (!fresh) {
    from = pick_.back() + 1;
    pick_.pop_back();
  }
  while (true) {
    if (pick_.size() == want) return true;
    std::uint64_t c = from;
    while (c < total && (total - c < want - pick_.size() || !compatible(pick_.size(), c))) ++c;
    if (c < total && total - c >= want - pick_.size()) {
      pick_.push_back(c);
      from = c + 1;
      continue;
    }
    if (pick_.empty()) return false;
    from = pick_.back() + 1;
    pick_.pop_back();
  }
}

std::optional<Tensor01> JFamilyEnumerator::next() {
  if (done_) return std::nullopt;
  const bool found = advance(!started_);
  started_ = true;
  if (!found) {
    done_ = true;
    return std::nullopt;
  }
  TensorBuilder b(shape_);
  for (std::uint64_t k : pick_) b.set(coords_[k]);
  return std::move(b).build();
}

std::vector<Tensor01> j_family(int n0, int d, std::uint64_t max_cells) {
  JFamilyEnumerator e(n0, d, max_cells);
  std::vector<Tensor01> out;
  while (auto t = e.next()) out.push_back(std::move(*t));
  return out;
}

Family family_pkr(int d, int k, int r) {
  require(d >= 1 && d <= kMaxDims, "d out of range");
  require(k >= 1, "k must be at least 1");
  require(r >= 0 && r <= d - 1, "r must lie in [0, d-1]");
  std::vector<Tensor01> out;
  for (int i = 1; i < d - r; ++i) {
    Shape s = cube(d, 1);
    s[i] = 2;
    Coord c = Coord::filled(d, 1);
    c[i] = 2;
    out.push_back(make_tensor(s, {c}));
  }
  Shape q = cube(d, 1);
  q[0] = k + 1;
  out.push_back(Tensor01::ones_like(q));
  return Family(std::move(out));
}

Tensor01 corner_matrix(int d, int r, int n) {
  require(d >= 1 && d <= kMaxDims && r >= 0 && n >= r && n >= 1, "corner_matrix parameters out of range");
  return Tensor01::from_predicate(cube(d, n), [r](const Coord& c) {
    return std::all_of(c.begin(), c.end(), [r](int x) { return x <= r; });
  });
}

BdrFamily family_bdr(int d, int r) {
  require(d >= 2 && d <= kMaxDims && r >= 1, "family_bdr needs d >= 2 and r >= 1");
  std::uint64_t cells = 1;
  for (int i = 0; i < d; ++i) {
    cells *= static_cast<std::uint64_t>(r + 1);
    if (cells > 4096) throw std::length_error("family_bdr exceeds the size guard");
  }
  Tensor01 base = corner_matrix(d, r, r + 1);
  std::vector<Tensor01> pats;
  for_each_coord(base.dims(), [&](const Coord& c) {
    if (!base.get(c)) pats.push_back(base.with(c, true));
  });
  return BdrFamily{std::move(base), Family(std::move(pats))};
}

Tensor01 single_one_saturated(const Tensor01& p, int n) {
  require(p.weight() == 1, "single_one_saturated needs a pattern with exactly one 1-entry");
  const int d = p.rank();
  for (int i = 0; i < d; ++i) require(n >= p.dim(i), "n is smaller than a side length of the pattern");
  const Coord q = p.ones().front();
  return Tensor01::from_predicate(cube(d, n), [&](const Coord& y) {
    for (int i = 0; i < d; ++i)
      if (y[i] < q[i] || y[i] > n - p.dim(i) + q[i]) return true;
    return false;
  });
}

Tensor01 ssat_witness(const Family& fam, int k, int n) {
  const int d = fam.rank();
  require(k >= 0 && k <= d - 1, "k must lie in [0, d-1]");
  const Shape l = fam.max_dims();
  for (int i = 0; i < d; ++i)
    require(n > 2 * l[i], "ssat_witness needs n > 2 * max side length (got n = " + std::to_string(n) + ")");
  return Tensor01::from_predicate(cube(d, n), [&](const Coord& x) {
    int outside = 0;
    for (int i = 0; i < d; ++i) outside += x[i] < l[i] || x[i] > n + 1 - l[i];
    return outside >= d - k;
  });
}

namespace {

int ceil_half(int l) { return (l + 1) / 2; }

// An interior entry of face f that is alone in each of its j-layers, j free.
bool has_property_iii(const Tensor01& p, const FaceSpec& f) {
  const SectionSpec s = instantiate_face(f, p.dims());
  const std::vector<Coord> ones = p.ones();
  for (const Coord& o : ones) {
    if (!s.contains(o)) continue;
    bool ok = true;
    for (int i = 0; i < p.rank() && ok; ++i)
      if (!f.fixed.contains(i)) ok = o[i] > 1 && o[i] < p.dim(i);
    for (int j = 0; j < p.rank() && ok; ++j) {
      if (f.fixed.contains(j)) continue;
      for (const Coord& y : ones)
        if (y != o && y[j] == o[j]) {
          ok = false;
          break;
        }
    }
    if (ok) return true;
  }
  return false;
}

// Grow every dimension outside `grow` by one at ceil(l_i / 2) and put a 1 at
// `at` (fixed dims) / the new midpoints (grown dims).
Tensor01 insert_midpoint(const Tensor01& p, DimSet grow, const Coord& at) {
  const int d = p.rank();
  Shape dims = p.dims();
  Coord mid = Coord::filled(d, 0);
  for (int i = 0; i < d; ++i)
    if (grow.contains(i)) {
      mid[i] = ceil_half(p.dim(i));
      dims[i] += 1;
    }
  TensorBuilder b(dims);
  for (Coord x : p.ones()) {
    for (int i = 0; i < d; ++i)
      if (grow.contains(i) && x[i] >= mid[i]) x[i] += 1;
    b.set(x);
  }
  Coord o = at;
  for (int i = 0; i < d; ++i)
    if (grow.contains(i)) o[i] = mid[i];
  b.set(o);
  return std::move(b).build();
}

bool lone_in_all_layers(const Tensor01& p) {
  const std::vector<Coord> ones = p.ones();
  for (const Coord& o : ones) {
    bool alone = true;
    for (const Coord& y : ones) {
      if (y == o) continue;
      for (int i = 0; i < p.rank() && alone; ++i) alone = y[i] != o[i];
      if (!alone) break;
    }
    if (alone) return true;
  }
  return false;
}

}  // namespace

SsatPatternResult ssat_exponent_pattern(int d, int k) {
  require(d >= 2 && d <= kMaxDims, "ssat_exponent_pattern needs 2 <= d <= 8");
  require(k >= 0 && k <= d - 1, "k must lie in [0, d-1]");
  SsatPatternResult res{Tensor01::zeros(cube(d, 4))};
  for (int dp = k + 1; dp <= d - 1; ++dp) {
    const std::vector<FaceSpec> faces = faces_of_dimension(d, dp);
    while (true) {
      auto it = std::find_if(faces.begin(), faces.end(),
                             [&](const FaceSpec& f) { return !has_property_iii(res.pattern, f); });
      if (it == faces.end()) break;
      const SectionSpec s = instantiate_face(*it, res.pattern.dims());
      Coord at = Coord::filled(d, 0);
      for (int i : it->fixed.dims()) at[i] = s.at[i];
      res.pattern = insert_midpoint(res.pattern, DimSet::all(d).minus(it->fixed), at);
      ++res.face_insertions;
    }
  }
  if (!lone_in_all_layers(res.pattern)) {
    res.pattern = insert_midpoint(res.pattern, DimSet::all(d), Coord::filled(d, 0));
    res.center_inserted = true;
  }
  return res;
}

Tensor01 line_witness(int n, int d, int i, int v) {
  require(n >= 1 && d >= 1 && d <= kMaxDims, "line_witness parameters out of range");
  if (i < 0 || i >= d) throw std::out_of_range("dimension index out of range");
  if (v < 1 || v > n) throw std::out_of_range("layer index out of range");
  return Tensor01::from_predicate(cube(d, n), [&](const Coord& x) { return x[i] == v; });
}

Tensor01 inflate_empty_layers(const Tensor01& m, int target_n) {
  Tensor01 cur = m;
  for (int i = 0; i < m.rank(); ++i) {
    require(target_n >= m.dim(i), "target size smaller than the matrix");
    int first = 0;
    for (int v = 1; v <= m.dim(i) && first == 0; ++v)
      if (layer_is_empty(m, i, v)) first = v;
    if (first == 0) throw std::invalid_argument("dimension " + std::to_string(i) + " has no empty layer");
    for (int extra = m.dim(i); extra < target_n; ++extra) cur = insert_empty_layer(cur, i, first - 1);
  }
  return cur;
}

}  // namespace mpat
