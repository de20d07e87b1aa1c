#include "mpat/detail/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>

#include "mpat/containment.hpp"

namespace mpat::detail {

namespace {

struct CellSetHash {
  std::size_t operator()(const CellSet& s) const { return std::hash<std::uint64_t>()(s.w[0] * 0x9E3779B97F4A7C15ULL ^ s.w[1]); }
};

}  // namespace

bool build_hypergraph(const Family& fam, int n, MaskMode mode, int max_cells, CopyHypergraph& out) {
  const int d = fam.rank();
  out = CopyHypergraph{};
  out.host = Shape::filled(d, n);
  out.host_cells = 1;
  for (int i = 0; i < d; ++i) out.host_cells *= static_cast<std::uint64_t>(n);
  out.forced_zero.assign(out.host_cells, 0);

  for (const Tensor01& p : fam) {
    if (p.weight() == 0) {
      bool fits = true;
      for (int i = 0; i < d; ++i) fits = fits && p.dim(i) <= n;
      out.empty_copy = out.empty_copy || fits;
    }
    if (mode == MaskMode::Minimal && p.weight() == 1)
      for_each_copy(out.host, p, [&](std::span<const std::uint64_t> img) { out.forced_zero[img[0]] = 1; });
  }

  std::vector<int> compact(out.host_cells, -1);
  for (std::uint64_t k = 0; k < out.host_cells; ++k)
    if (!out.forced_zero[k]) {
      compact[k] = static_cast<int>(out.cells.size());
      out.cells.push_back(k);
    }
  if (out.size() > max_cells || out.size() > kMaxSearchCells) return false;

  std::unordered_set<CellSet, CellSetHash> seen;
  for (const Tensor01& p : fam) {
    if (p.weight() == 0) continue;
    if (mode == MaskMode::Minimal && p.weight() == 1) continue;
    for_each_copy(out.host, p, [&](std::span<const std::uint64_t> img) {
      CellSet m;
      for (std::uint64_t lin : img) {
        if (compact[lin] < 0) return;  // touches a forced zero: can never complete
        m.set(compact[lin]);
      }
      if (seen.insert(m).second) out.masks.push_back(m);
    });
  }

  if (mode == MaskMode::Minimal) {
    std::sort(out.masks.begin(), out.masks.end(),
              [](const CellSet& a, const CellSet& b) { return a.count() != b.count() ? a.count() < b.count() : a.w < b.w; });
    std::vector<CellSet> minimal;
    for (const CellSet& m : out.masks) {
      bool dominated = false;
      for (const CellSet& k : minimal)
        if (k.subset_of(m)) {
          dominated = true;
          break;
        }
      if (!dominated) minimal.push_back(m);
    }
    out.masks = std::move(minimal);
  }

  out.mask_cells.resize(out.masks.size());
  out.incident.assign(out.cells.size(), {});
  for (std::size_t m = 0; m < out.masks.size(); ++m)
    for (int c = 0; c < out.size(); ++c)
      if (out.masks[m].test(c)) {
        out.mask_cells[m].push_back(c);
        out.incident[c].push_back(static_cast<int>(m));
      }
  return true;
}

Tensor01 expand(const CopyHypergraph& h, const CellSet& ones) {
  TensorBuilder b(h.host);
  for (int c = 0; c < h.size(); ++c)
    if (ones.test(c)) b.set_linear(h.cells[c]);
  return std::move(b).build();
}

}  // namespace mpat::detail
