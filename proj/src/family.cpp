#include "mpat/family.hpp"

#include <algorithm>

namespace mpat {

Family::Family(std::vector<Tensor01> patterns) : patterns_(std::move(patterns)) {
  if (patterns_.empty()) throw std::invalid_argument("a family needs at least one pattern");
  const int d = patterns_.front().rank();
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (patterns_[i].rank() != d) throw std::invalid_argument("family patterns have mixed dimensionality");
    for (std::size_t j = 0; j < i; ++j)
      if (patterns_[j] == patterns_[i])
        throw std::invalid_argument("duplicate pattern at index " + std::to_string(i));
  }
}

Family Family::deduplicated(std::vector<Tensor01> patterns) {
  std::vector<Tensor01> unique;
  for (auto& p : patterns)
    if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(std::move(p));
  return Family(std::move(unique));
}

Shape Family::max_dims() const {
  Shape out = patterns_.front().dims();
  for (const auto& p : patterns_)
    for (int i = 0; i < rank(); ++i) out[i] = std::max(out[i], p.dim(i));
  return out;
}

bool Family::has_empty_pattern() const {
  return std::any_of(patterns_.begin(), patterns_.end(), [](const Tensor01& p) { return p.weight() == 0; });
}

}  // namespace mpat
