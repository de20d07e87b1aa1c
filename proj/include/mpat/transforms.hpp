#pragma once

// Pattern operations with finite-n consequences for the extremal function.

#include "mpat/tensor.hpp"

namespace mpat {

/// Append a dimension of length l_i; every 1-entry x goes to (x, x_i).
Tensor01 replicate_dim(const Tensor01& p, int i);

/// Move the bottom 1-entry c (c_i == l_i) one step past the end of
/// dimension i, which grows by one.
Tensor01 lower_entry(const Tensor01& p, int i, const Coord& c);

/// Mirror of lower_entry: c must be a top entry (c_i == 1); every other entry
/// shifts one step along i and c stays in the new first layer.
Tensor01 lift_entry(const Tensor01& p, int i, const Coord& c);

/// Insert an all-zero i-layer after the first `pos` layers (pos in [0, l_i]).
Tensor01 insert_empty_layer(const Tensor01& p, int i, int pos);

/// Insert t i-layers after the first `pos` layers (pos in [1, l_i - 1]), each
/// holding a single 1 whose other coordinates are `row` (d - 1 values, in
/// dimension order with i skipped).
Tensor01 insert_one_layers(const Tensor01& p, int i, int pos, const Coord& row, int t);

}  // namespace mpat
