#include "search/engines.hpp"

#include <algorithm>
#include <numeric>

namespace mpat::detail {

ExEngine::ExEngine(const CopyHypergraph& h, NodeBudget& budget) : h_(h), budget_(budget) {
  by_max_.assign(h.size(), {});
  for (std::size_t m = 0; m < h.masks.size(); ++m) by_max_[h.mask_cells[m].back()].push_back(static_cast<int>(m));
  packing_order_.resize(h.masks.size());
  std::iota(packing_order_.begin(), packing_order_.end(), 0);
  std::stable_sort(packing_order_.begin(), packing_order_.end(),
                   [&](int a, int b) { return h.mask_cells[a].size() < h.mask_cells[b].size(); });
}

bool ExEngine::push(bool one) {
  const int c = pos_;
  if (one) {
    CellSet next = ones_;
    next.set(c);
    for (int m : by_max_[c])
      if (h_.masks[m].subset_of(next)) return false;
    ones_ = next;
    ++weight_;
  }
  ++pos_;
  return true;
}

void ExEngine::pop() {
  --pos_;
  if (ones_.test(pos_)) {
    ones_.reset(pos_);
    --weight_;
  }
}

int ExEngine::upper_bound() const {
  const CellSet decided = CellSet::prefix(pos_);
  const CellSet zeros = decided & ~ones_;
  const CellSet open = CellSet::prefix(h_.size()) & ~decided;
  CellSet used;
  int packed = 0;
  for (int m : packing_order_) {
    const CellSet& mask = h_.masks[m];
    if (mask.intersects(zeros)) continue;
    const CellSet part = mask & open;
    if (part.empty() || part.intersects(used)) continue;
    used = used | part;
    ++packed;
  }
  return weight_ + (h_.size() - pos_) - packed;
}

void ExEngine::maximize(std::atomic<int>& best) {
  if (!budget_.tick()) return;
  if (pos_ == h_.size()) {
    int b = best.load();
    while (weight_ > b && !best.compare_exchange_weak(b, weight_)) {
    }
    return;
  }
  if (weight_ + (h_.size() - pos_) <= best.load()) return;
  if (upper_bound() <= best.load()) return;
  for (bool one : {true, false}) {
    if (!push(one)) continue;
    maximize(best);
    pop();
  }
}

bool ExEngine::find(int target) {
  if (!budget_.tick()) return false;
  if (pos_ == h_.size()) return weight_ == target;
  if (upper_bound() < target) return false;
  for (bool one : {false, true}) {
    if (!push(one)) continue;
    if (find(target)) return true;
    pop();
  }
  return false;
}

CoverEngine::CoverEngine(const CopyHypergraph& h, NodeBudget& budget, bool avoid)
    : h_(h), budget_(budget), avoid_(avoid) {
  val_.assign(h.size(), -1);
  zeros_in_.assign(h.masks.size(), 0);
  ones_in_.assign(h.masks.size(), 0);
  alive_.resize(h.size());
  for (int c = 0; c < h.size(); ++c) {
    alive_[c] = static_cast<int>(h.incident[c].size());
    if (alive_[c] == 0) ++need_;
  }
}

void CoverEngine::set_zero(int c) {
  val_[c] = 0;
  for (int m : h_.incident[c]) {
    for (int x : h_.mask_cells[m]) {
      if (x == c) continue;
      if (zeros_in_[m] - (val_[x] == 0) == 0 && --alive_[x] == 0) {
        if (val_[x] == 0)
          ++dead_;
        else if (val_[x] < 0)
          ++need_;
      }
    }
    ++zeros_in_[m];
  }
}

void CoverEngine::unset_zero(int c) {
  const auto& inc = h_.incident[c];
  for (auto it = inc.rbegin(); it != inc.rend(); ++it) {
    const int m = *it;
    --zeros_in_[m];
    for (int x : h_.mask_cells[m]) {
      if (x == c) continue;
      if (zeros_in_[m] - (val_[x] == 0) == 0 && alive_[x]++ == 0) {
        if (val_[x] == 0)
          --dead_;
        else if (val_[x] < 0)
          --need_;
      }
    }
  }
  val_[c] = -1;
}

void CoverEngine::set_one(int c) {
  if (alive_[c] == 0) --need_;
  val_[c] = 1;
  ++weight_;
  ones_.set(c);
  if (avoid_)
    for (int m : h_.incident[c])
      if (++ones_in_[m] == static_cast<int>(h_.mask_cells[m].size())) ++violations_;
}

void CoverEngine::unset_one(int c) {
  if (avoid_)
    for (int m : h_.incident[c])
      if (ones_in_[m]-- == static_cast<int>(h_.mask_cells[m].size())) --violations_;
  ones_.reset(c);
  --weight_;
  val_[c] = -1;
  if (alive_[c] == 0) ++need_;
}

bool CoverEngine::push(bool one, int w) {
  const int c = pos_;
  if (one) {
    if (weight_ >= w) return false;
    set_one(c);
    if (!feasible(w)) {
      unset_one(c);
      return false;
    }
  } else {
    if (alive_[c] == 0) return false;
    set_zero(c);
    if (!feasible(w)) {
      unset_zero(c);
      return false;
    }
  }
  ++pos_;
  return true;
}

void CoverEngine::pop() {
  const int c = --pos_;
  if (val_[c] == 1)
    unset_one(c);
  else
    unset_zero(c);
}

bool CoverEngine::find(int w) {
  if (!budget_.tick()) return false;
  if (pos_ == h_.size()) return true;
  for (bool one : {false, true}) {
    if (!push(one, w)) continue;
    if (find(w)) return true;
    pop();
  }
  return false;
}

}  // namespace mpat::detail
