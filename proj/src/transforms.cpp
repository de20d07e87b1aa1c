#include "mpat/transforms.hpp"

#include <stdexcept>
#include <string>

namespace mpat {

namespace {

void check_dim(const Tensor01& p, int i) {
  if (i < 0 || i >= p.rank())
    throw std::out_of_range("dimension index " + std::to_string(i) + " out of range for rank " +
                            std::to_string(p.rank()));
}

Shape grown(const Tensor01& p, int i, int by) {
  Shape s = p.dims();
  s[i] += by;
  return s;
}

}  // namespace

Tensor01 replicate_dim(const Tensor01& p, int i) {
  check_dim(p, i);
  Shape dims = p.dims();
  dims.push_back(p.dim(i));
  TensorBuilder b(dims);
  for (Coord c : p.ones()) {
    c.push_back(c[i]);
    b.set(c);
  }
  return std::move(b).build();
}

Tensor01 lower_entry(const Tensor01& p, int i, const Coord& c) {
  check_dim(p, i);
  if (!p.get(c)) throw std::invalid_argument(to_string(c) + " is not a 1-entry");
  if (c[i] != p.dim(i)) throw std::invalid_argument(to_string(c) + " is not a bottom entry along the given dimension");
  TensorBuilder b(grown(p, i, 1));
  for (const Coord& x : p.ones())
    if (x != c) b.set(x);
  Coord moved = c;
  moved[i] += 1;
  b.set(moved);
  return std::move(b).build();
}

Tensor01 lift_entry(const Tensor01& p, int i, const Coord& c) {
  check_dim(p, i);
  if (!p.get(c)) throw std::invalid_argument(to_string(c) + " is not a 1-entry");
  if (c[i] != 1) throw std::invalid_argument(to_string(c) + " is not a top entry along the given dimension");
  Coord mirrored = c;
  mirrored[i] = p.dim(i);
  const Tensor01 low = lower_entry(reflect_dim(p, i), i, mirrored);
  return reflect_dim(low, i);
}

Tensor01 insert_empty_layer(const Tensor01& p, int i, int pos) {
  check_dim(p, i);
  if (pos < 0 || pos > p.dim(i))
    throw std::out_of_range("layer position " + std::to_string(pos) + " outside [0, " + std::to_string(p.dim(i)) + "]");
  TensorBuilder b(grown(p, i, 1));
  for (Coord x : p.ones()) {
    if (x[i] > pos) x[i] += 1;
    b.set(x);
  }
  return std::move(b).build();
}

Tensor01 insert_one_layers(const Tensor01& p, int i, int pos, const Coord& row, int t) {
  check_dim(p, i);
  if (t < 1) throw std::invalid_argument("need at least one inserted layer");
  if (pos < 1 || pos > p.dim(i) - 1)
    throw std::out_of_range("layer position " + std::to_string(pos) + " outside [1, " +
                            std::to_string(p.dim(i) - 1) + "]");
  if (row.size() != p.rank() - 1) throw std::invalid_argument("row coordinates need d - 1 values");
  const Shape rest = p.dims().without(i);
  for (int k = 0; k < row.size(); ++k)
    if (row[k] < 1 || row[k] > rest[k]) throw std::out_of_range("row coordinate out of range: " + to_string(row));
  TensorBuilder b(grown(p, i, t));
  for (Coord x : p.ones()) {
    if (x[i] > pos) x[i] += t;
    b.set(x);
  }
  for (int s = 1; s <= t; ++s) {
    Coord x;
    for (int k = 0, r = 0; k < p.rank(); ++k) x.push_back(k == i ? pos + s : row[r++]);
    b.set(x);
  }
  return std::move(b).build();
}

}  // namespace mpat
