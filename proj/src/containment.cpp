#include "mpat/containment.hpp"

#include <algorithm>
#include <stdexcept>

#include "mpat/detail/matcher.hpp"

namespace mpat {

namespace detail {

namespace {
constexpr std::uint64_t kMaxPrefixCells = std::uint64_t{1} << 26;
}

HostIndex::HostIndex(const Tensor01& host) : host_(&host) {
  const int d = host.rank();
  std::uint64_t cells = 1;
  for (int i = d - 1; i >= 0; --i) {
    pstride_[i] = cells;
    cells *= static_cast<std::uint64_t>(host.dim(i) + 1);
  }
  if (cells > kMaxPrefixCells) return;
  prefix_.assign(cells, 0);
  for (const Coord& c : host.ones()) {
    std::uint64_t k = 0;
    for (int i = 0; i < d; ++i) k += static_cast<std::uint64_t>(c[i]) * pstride_[i];
    prefix_[k] = 1;
  }
  // Running sums along each axis in turn.
  for (int i = 0; i < d; ++i) {
    const std::uint64_t s = pstride_[i];
    const std::uint64_t span = s * static_cast<std::uint64_t>(host.dim(i) + 1);
    for (std::uint64_t k = 0; k < cells; ++k)
      if (k % span >= s) prefix_[k] += prefix_[k - s];
  }
}

bool HostIndex::test(const Coord& c) const {
  std::uint64_t k = 0;
  for (int i = 0; i < c.size(); ++i) k += static_cast<std::uint64_t>(c[i] - 1) * host_->stride(i);
  return host_->test(k) || (extra_ && *extra_ == k);
}

bool HostIndex::any_in_box(const Coord& lo, const Coord& hi) const {
  const int d = host_->rank();
  if (extra_) {
    const Coord e = host_->coord_of(*extra_);
    bool inside = true;
    for (int i = 0; i < d && inside; ++i) inside = lo[i] <= e[i] && e[i] <= hi[i];
    if (inside) return true;
  }
  if (prefix_.empty()) return true;
  std::int64_t total = 0;
  for (std::uint32_t corner = 0; corner < (1U << d); ++corner) {
    std::uint64_t k = 0;
    bool zero = false;
    for (int i = 0; i < d; ++i) {
      const int v = (corner >> i) & 1U ? lo[i] - 1 : hi[i];
      if (v == 0) zero = true;
      k += static_cast<std::uint64_t>(v) * pstride_[i];
    }
    if (zero) continue;
    const std::int64_t term = prefix_[k];
    total += std::popcount(corner) % 2 ? -term : term;
  }
  return total > 0;
}

Matcher::Matcher(const HostIndex& host, const Tensor01& pattern)
    : host_(host), pattern_(pattern), d_(pattern.rank()), ones_(pattern.ones()) {
  phi_.resize(d_);
  for (int i = 0; i < d_; ++i) {
    phi_[i].assign(pattern.dim(i), 0);
    if (pattern.dim(i) > host.host().dim(i)) fits_ = false;
  }
}

void Matcher::clear() {
  for (auto& m : phi_) std::fill(m.begin(), m.end(), 0);
}

void Matcher::bounds(int i, int j, int& lo, int& hi) const {
  const int n = host_.host().dim(i);
  const int p = pattern_.dim(i);
  lo = j + 1;
  hi = n - p + j + 1;
  for (int a = j - 1; a >= 0; --a)
    if (phi_[i][a] != 0) {
      lo = std::max(lo, phi_[i][a] + (j - a));
      break;
    }
  for (int b = j + 1; b < p; ++b)
    if (phi_[i][b] != 0) {
      hi = std::min(hi, phi_[i][b] - (b - j));
      break;
    }
}

bool Matcher::fix(int i, int j, int v) {
  int lo = 0, hi = 0;
  bounds(i, j, lo, hi);
  if (v < lo || v > hi) return false;
  phi_[i][j] = v;
  return true;
}

void Matcher::plan_order() {
  order_.clear();
  free_dims_.clear();
  std::vector<std::vector<char>> known(d_);
  for (int i = 0; i < d_; ++i) {
    known[i].resize(phi_[i].size());
    for (std::size_t j = 0; j < phi_[i].size(); ++j) known[i][j] = phi_[i][j] != 0;
  }
  std::vector<char> placed(ones_.size(), 0);
  for (std::size_t step = 0; step < ones_.size(); ++step) {
    std::size_t best = ones_.size();
    int best_known = -1;
    for (std::size_t e = 0; e < ones_.size(); ++e) {
      if (placed[e]) continue;
      int cnt = 0;
      for (int i = 0; i < d_; ++i) cnt += known[i][ones_[e][i] - 1];
      if (cnt > best_known) {
        best_known = cnt;
        best = e;
      }
    }
    placed[best] = 1;
    order_.push_back(best);
    std::vector<int> free;
    for (int i = 0; i < d_; ++i) {
      char& k = known[i][ones_[best][i] - 1];
      if (!k) free.push_back(i);
      k = 1;
    }
    free_dims_.push_back(std::move(free));
  }
}

bool Matcher::box_ok(std::size_t entry) const {
  Coord lo = Coord::filled(d_, 0), hi = Coord::filled(d_, 0);
  for (int i = 0; i < d_; ++i) {
    const int j = ones_[entry][i] - 1;
    if (phi_[i][j] != 0) {
      lo[i] = hi[i] = phi_[i][j];
    } else {
      bounds(i, j, lo[i], hi[i]);
      if (lo[i] > hi[i]) return false;
    }
  }
  return host_.any_in_box(lo, hi);
}

bool Matcher::remaining_boxes_ok(std::size_t from) const {
  for (std::size_t k = from; k < order_.size(); ++k)
    if (!box_ok(order_[k])) return false;
  return true;
}

bool Matcher::place(std::size_t k) {
  if (k == order_.size()) return true;
  return assign(k, 0);
}

bool Matcher::assign(std::size_t k, std::size_t t) {
  const Coord& e = ones_[order_[k]];
  if (t == free_dims_[k].size()) {
    Coord c = Coord::filled(d_, 0);
    for (int i = 0; i < d_; ++i) c[i] = phi_[i][e[i] - 1];
    return host_.test(c) && place(k + 1);
  }
  const int i = free_dims_[k][t];
  const int j = e[i] - 1;
  int lo = 0, hi = 0;
  bounds(i, j, lo, hi);
  for (int v = lo; v <= hi; ++v) {
    ++nodes_;
    phi_[i][j] = v;
    if (remaining_boxes_ok(k) && assign(k, t + 1)) return true;
  }
  phi_[i][j] = 0;
  return false;
}

bool Matcher::search() {
  if (!fits_) return false;
  plan_order();
  const auto saved = phi_;
  const bool found = remaining_boxes_ok(0) && place(0);
  phi_ = saved;
  return found;
}

bool Matcher::exists() {
  clear();
  return search();
}

bool Matcher::exists_through(const Coord& cell) {
  if (!fits_) return false;
  for (const Coord& o : ones_) {
    clear();
    bool ok = true;
    for (int i = 0; i < d_ && ok; ++i) ok = fix(i, o[i] - 1, cell[i]);
    if (ok && search()) {
      clear();
      return true;
    }
  }
  clear();
  return false;
}

std::optional<Embedding> Matcher::least_embedding() {
  clear();
  if (!search()) return std::nullopt;
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < pattern_.dim(i); ++j) {
      int lo = 0, hi = 0;
      bounds(i, j, lo, hi);
      int v = lo;
      for (; v <= hi; ++v) {
        phi_[i][j] = v;
        if (search()) break;
      }
      if (v > hi) throw std::logic_error("embedding search lost a feasible assignment");
    }
  Embedding out{phi_};
  clear();
  return out;
}

std::vector<std::vector<std::vector<int>>> occupied_assignments(const Shape& host_dims, const Tensor01& pattern,
                                                                std::vector<std::vector<int>>& occupied) {
  const int d = pattern.rank();
  occupied.assign(d, {});
  std::vector<std::vector<std::vector<int>>> out(d);
  const std::vector<Coord> ones = pattern.ones();
  for (int i = 0; i < d; ++i) {
    std::vector<char> used(pattern.dim(i), 0);
    for (const Coord& c : ones) used[c[i] - 1] = 1;
    for (int j = 0; j < pattern.dim(i); ++j)
      if (used[j]) occupied[i].push_back(j);
    const int n = host_dims[i];
    const int p = pattern.dim(i);
    if (p > n) continue;
    const auto& occ = occupied[i];
    std::vector<int> cur(occ.size());
    // Depth-first over strictly increasing values honoring the gaps.
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == occ.size()) {
        out[i].push_back(cur);
        return;
      }
      const int lo = k == 0 ? occ[k] + 1 : cur[k - 1] + (occ[k] - occ[k - 1]);
      const int hi = n - p + occ[k] + 1;
      for (int v = lo; v <= hi; ++v) {
        cur[k] = v;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
  }
  return out;
}

}  // namespace detail

namespace {

void check_ranks(const Tensor01& host, const Tensor01& pattern) {
  if (host.rank() != pattern.rank())
    throw std::invalid_argument("dimensionality mismatch: host has " + std::to_string(host.rank()) +
                                ", pattern has " + std::to_string(pattern.rank()));
}

void check_family(const Tensor01& host, const Family& fam) {
  if (fam.rank() != host.rank())
    throw std::invalid_argument("dimensionality mismatch between host and family");
}

}  // namespace

Coord Embedding::apply(const Coord& pattern_coord) const {
  Coord out;
  for (int i = 0; i < pattern_coord.size(); ++i) out.push_back(maps[i][pattern_coord[i] - 1]);
  return out;
}

std::optional<Embedding> contains(const Tensor01& host, const Tensor01& pattern) {
  check_ranks(host, pattern);
  detail::HostIndex index(host);
  detail::Matcher m(index, pattern);
  return m.least_embedding();
}

bool occurs(const Tensor01& host, const Tensor01& pattern) {
  check_ranks(host, pattern);
  detail::HostIndex index(host);
  detail::Matcher m(index, pattern);
  return m.exists();
}

bool contains_using(const Tensor01& host, const Tensor01& pattern, const Coord& cell) {
  check_ranks(host, pattern);
  if (!host.get(cell)) throw std::invalid_argument("cell " + to_string(cell) + " is a 0-entry of the host");
  detail::HostIndex index(host);
  detail::Matcher m(index, pattern);
  return m.exists_through(cell);
}

std::optional<FamilyMatch> contains_any(const Tensor01& host, const Family& fam) {
  check_family(host, fam);
  detail::HostIndex index(host);
  for (std::size_t k = 0; k < fam.size(); ++k) {
    detail::Matcher m(index, fam[k]);
    if (auto e = m.least_embedding()) return FamilyMatch{k, std::move(*e)};
  }
  return std::nullopt;
}

bool avoids_all(const Tensor01& host, const Family& fam) {
  check_family(host, fam);
  detail::HostIndex index(host);
  for (const Tensor01& p : fam) {
    detail::Matcher m(index, p);
    if (m.exists()) return false;
  }
  return true;
}

bool any_contains_using(const Tensor01& host, const Family& fam, const Coord& cell) {
  check_family(host, fam);
  if (!host.get(cell)) throw std::invalid_argument("cell " + to_string(cell) + " is a 0-entry of the host");
  detail::HostIndex index(host);
  for (const Tensor01& p : fam) {
    detail::Matcher m(index, p);
    if (m.exists_through(cell)) return true;
  }
  return false;
}

}  // namespace mpat
