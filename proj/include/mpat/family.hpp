#pragma once

#include <cstddef>
#include <vector>

#include "mpat/tensor.hpp"

namespace mpat {

/// Ordered, non-empty, duplicate-free list of patterns sharing one rank.
class Family {
 public:
  explicit Family(std::vector<Tensor01> patterns);
  Family(std::initializer_list<Tensor01> patterns) : Family(std::vector<Tensor01>(patterns)) {}

  /// Like the constructor but silently drops exact duplicates.
  static Family deduplicated(std::vector<Tensor01> patterns);

  int rank() const { return patterns_.front().rank(); }
  std::size_t size() const { return patterns_.size(); }
  const Tensor01& operator[](std::size_t i) const { return patterns_[i]; }
  const std::vector<Tensor01>& patterns() const { return patterns_; }
  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }

  /// Largest side length over the family, per dimension.
  Shape max_dims() const;
  bool has_empty_pattern() const;

 private:
  std::vector<Tensor01> patterns_;
};

}  // namespace mpat
