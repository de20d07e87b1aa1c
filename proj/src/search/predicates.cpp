#include <omp.h>

#include <atomic>
#include <stdexcept>

#include "mpat/containment.hpp"
#include "mpat/detail/matcher.hpp"
#include "mpat/search.hpp"

namespace mpat {

namespace {

void check(const Tensor01& m, const Family& fam) {
  if (m.rank() != fam.rank()) throw std::invalid_argument("dimensionality mismatch between matrix and family");
}

// Does flipping `cell` (a 0 of the indexed host) create a copy through it?
bool flip_creates_copy(detail::HostIndex& index, const Family& fam, std::uint64_t cell) {
  index.set_extra(cell);
  const Coord c = index.host().coord_of(cell);
  bool hit = false;
  for (const Tensor01& p : fam) {
    detail::Matcher m(index, p);
    if (m.exists_through(c)) {
      hit = true;
      break;
    }
  }
  index.set_extra(std::nullopt);
  return hit;
}

bool all_flips_parallel(const Tensor01& m, const Family& fam) {
  const detail::HostIndex shared(m);
  std::atomic<bool> ok{true};
  const long long cells = static_cast<long long>(m.cell_count());
#pragma omp parallel
  {
    detail::HostIndex local = shared;
#pragma omp for schedule(dynamic, 16)
    for (long long k = 0; k < cells; ++k) {
      if (!ok.load(std::memory_order_relaxed) || m.test(static_cast<std::uint64_t>(k))) continue;
      if (!flip_creates_copy(local, fam, static_cast<std::uint64_t>(k))) ok.store(false);
    }
  }
  return ok.load();
}

bool all_flips_serial(const Tensor01& m, const Family& fam) {
  detail::HostIndex index(m);
  for (std::uint64_t k = 0; k < m.cell_count(); ++k)
    if (!m.test(k) && !flip_creates_copy(index, fam, k)) return false;
  return true;
}

}  // namespace

bool is_saturated(const Tensor01& m, const Family& fam) {
  check(m, fam);
  return avoids_all(m, fam) && all_flips_parallel(m, fam);
}

bool is_semisaturated(const Tensor01& m, const Family& fam) {
  check(m, fam);
  return all_flips_parallel(m, fam);
}

namespace reference {

bool is_saturated(const Tensor01& m, const Family& fam) {
  check(m, fam);
  return avoids_all(m, fam) && all_flips_serial(m, fam);
}

bool is_semisaturated(const Tensor01& m, const Family& fam) {
  check(m, fam);
  return all_flips_serial(m, fam);
}

}  // namespace reference

Tensor01 saturate_greedy(const Family& fam, const Tensor01& seed) {
  check(seed, fam);
  if (!avoids_all(seed, fam)) throw std::invalid_argument("seed already contains a family member");
  // A rejected cell stays rejected as more ones arrive, so one pass suffices.
  TensorBuilder b(seed);
  Tensor01 cur = seed;
  for (std::uint64_t k = 0; k < seed.cell_count(); ++k) {
    if (cur.test(k)) continue;
    detail::HostIndex index(cur);
    if (!flip_creates_copy(index, fam, k)) {
      b.set_linear(k);
      cur = TensorBuilder(b).build();
    }
  }
  return cur;
}

}  // namespace mpat
