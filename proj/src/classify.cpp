#include "mpat/classify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mpat/constructions.hpp"
#include "mpat/containment.hpp"

namespace mpat {

namespace {

using boost::multiprecision::cpp_int;

void require_nonempty(const Family& fam) {
  if (fam.has_empty_pattern()) throw std::invalid_argument("classification needs non-empty patterns");
}

DimSet agreement(const Coord& a, const Coord& b) {
  DimSet s;
  for (int i = 0; i < a.size(); ++i)
    if (a[i] == b[i]) s = s.with(i);
  return s;
}

// No other entry shares a (k+1)-orthogonal section with o.
bool isolated_from_orthogonal(const std::vector<Coord>& ones, const Coord& o, DimSet face, int k) {
  for (const Coord& y : ones) {
    if (y == o) continue;
    const std::uint32_t agree = agreement(o, y).bits();
    for (std::uint32_t g = agree; g != 0; g = (g - 1) & agree)
      if (is_k_orthogonal(DimSet(g), face, k + 1)) return false;
  }
  return true;
}

bool shares_at_most(const std::vector<Coord>& ones, const Coord& o, int k) {
  for (const Coord& y : ones)
    if (y != o && agreement(o, y).size() > k) return false;
  return true;
}

}  // namespace

PropertyResult ssat_property_i(const Family& fam, int k) {
  require_nonempty(fam);
  const int d = fam.rank();
  if (k < 0 || k > d - 1) throw std::invalid_argument("k must lie in [0, d-1]");
  PropertyResult res;
  res.holds = true;
  for (int dp = k + 1; dp <= d - 1; ++dp)
    for (const FaceSpec& f : faces_of_dimension(d, dp)) {
      std::optional<EntryRef> found;
      for (std::size_t pi = 0; pi < fam.size() && !found; ++pi) {
        const Tensor01& p = fam[pi];
        const SectionSpec s = instantiate_face(f, p.dims());
        const std::vector<Coord> ones = p.ones();
        for (const Coord& o : ones)
          if (s.contains(o) && isolated_from_orthogonal(ones, o, f.fixed, k)) {
            found = EntryRef{pi, o};
            break;
          }
      }
      res.faces.emplace_back(f, found);
      if (!found) {
        res.holds = false;
        return res;
      }
    }
  return res;
}

PropertyResult ssat_property_ii(const Family& fam, int k) {
  require_nonempty(fam);
  const int d = fam.rank();
  if (k < 0 || k > d - 1) throw std::invalid_argument("k must lie in [0, d-1]");
  PropertyResult res;
  for (std::size_t pi = 0; pi < fam.size(); ++pi) {
    const std::vector<Coord> ones = fam[pi].ones();
    for (const Coord& o : ones)
      if (shares_at_most(ones, o, k)) {
        res.holds = true;
        res.entry = EntryRef{pi, o};
        return res;
      }
  }
  return res;
}

SsatClassification ssat_exponent(const Family& fam) {
  require_nonempty(fam);
  SsatClassification out;
  for (int k = 0; k < fam.rank(); ++k) {
    PropertyResult pi = ssat_property_i(fam, k);
    PropertyResult pii = ssat_property_ii(fam, k);
    if (pi.holds && pii.holds) {
      out.exponent = k;
      out.property_i = std::move(pi);
      out.property_ii = std::move(pii);
      return out;
    }
    out.failures.push_back(!pi.holds && !pii.holds ? "i+ii" : (!pi.holds ? "i" : "ii"));
  }
  throw std::logic_error("no admissible semisaturation exponent; k = d-1 should always qualify");
}

bool ssat_bounded_single(const Tensor01& p) {
  if (p.weight() == 0) throw std::invalid_argument("pattern has no 1-entry");
  const int d = p.rank();
  const std::vector<Coord> ones = p.ones();
  auto alone_in_layer = [&](const Coord& o, int j) {
    return std::none_of(ones.begin(), ones.end(), [&](const Coord& y) { return y != o && y[j] == o[j]; });
  };
  for (int dp = 1; dp <= d - 1; ++dp)
    for (const FaceSpec& f : faces_of_dimension(d, dp)) {
      const SectionSpec s = instantiate_face(f, p.dims());
      const bool ok = std::any_of(ones.begin(), ones.end(), [&](const Coord& o) {
        if (!s.contains(o)) return false;
        for (int j = 0; j < d; ++j)
          if (!f.fixed.contains(j) && !alone_in_layer(o, j)) return false;
        return true;
      });
      if (!ok) return false;
    }
  return std::any_of(ones.begin(), ones.end(), [&](const Coord& o) { return shares_at_most(ones, o, 0); });
}

std::string to_string(O1Status s) {
  switch (s) {
    case O1Status::BoundedO1: return "BoundedO1";
    case O1Status::NotO1AtDepth: return "NotO1AtDepth";
    case O1Status::Aborted: return "Aborted";
  }
  return "unknown";
}

O1Verdict ex_o1_decide(const Family& fam, int n0_max, std::uint64_t max_cells) {
  if (n0_max < 1) throw std::invalid_argument("n0_max must be at least 1");
  const int d = fam.rank();
  O1Verdict v;
  for (int n0 = 1; n0 <= n0_max; ++n0) {
    std::optional<Tensor01> avoider;
    for (const Tensor01& m : identity_equivalents(n0, d))
      if (avoids_all(m, fam)) {
        avoider = m;
        break;
      }
    if (!avoider) {
      try {
        JFamilyEnumerator j(n0, d, max_cells);
        while (auto m = j.next())
          if (avoids_all(*m, fam)) {
            avoider = std::move(*m);
            break;
          }
      } catch (const std::length_error& e) {
        v.status = O1Status::Aborted;
        v.n0 = n0;
        v.note = e.what();
        return v;
      }
    }
    if (!avoider) {
      v.status = O1Status::BoundedO1;
      v.n0 = n0;
      v.bound = boost::multiprecision::pow(cpp_int(n0 - 1), 1 + (1 << (d - 1)));
      return v;
    }
    v.avoiders.push_back(std::move(*avoider));
  }
  v.status = O1Status::NotO1AtDepth;
  v.n0 = n0_max;
  return v;
}

std::vector<Tensor01> alternation_images() {
  const Tensor01 base = make_tensor({2, 4}, {{1, 1}, {2, 2}, {1, 3}, {2, 4}});
  std::vector<Tensor01> out;
  for (int t = 0; t < 2; ++t)
    for (int r = 0; r < 4; ++r) {
      Tensor01 img = t ? exchange_dims(base, 0, 1) : base;
      if (r & 1) img = reflect_dim(img, 0);
      if (r & 2) img = reflect_dim(img, 1);
      if (std::find(out.begin(), out.end(), img) == out.end()) out.push_back(img);
    }
  return out;
}

MinNonlinReport minnonlin_filters(const Tensor01& p) {
  if (p.weight() == 0) throw std::invalid_argument("pattern has no 1-entry");
  const int d = p.rank();
  MinNonlinReport rep;

  std::vector<int> sorted(p.dims().begin(), p.dims().end());
  std::sort(sorted.begin(), sorted.end());
  long long s = 1;
  for (int i = 0; i + 1 < d; ++i) s += 2LL * (2 * sorted[i] - 2);
  rep.dims_bound.pass = sorted.back() <= s;
  rep.dims_bound.detail = "longest side " + std::to_string(sorted.back()) + ", bound " + std::to_string(s);

  int twos = 0, ones_dims = 0;
  for (int x : sorted) {
    twos += x == 2;
    ones_dims += x == 1;
  }
  const bool exempt = p.weight() == p.cell_count() && twos == 2 && ones_dims == d - 2;
  if (exempt) {
    rep.weight_bound.detail = "exempt: all-ones with two sides of length 2";
  } else {
    long long best = -1;
    for (int j = 0; j < d; ++j) {
      long long prod = 1;
      for (int i = 0; i < d; ++i)
        if (i != j) prod *= p.dim(i);
      const long long b = p.dim(j) - 1 + prod;
      if (best < 0 || b < best) best = b;
    }
    rep.weight_bound.pass = static_cast<long long>(p.weight()) <= best;
    rep.weight_bound.detail = "weight " + std::to_string(p.weight()) + ", bound " + std::to_string(best);
  }

  bool has_empty_layer = false;
  for (int i = 0; i < d; ++i)
    for (int v = 1; v <= p.dim(i); ++v) has_empty_layer = has_empty_layer || layer_is_empty(p, i, v);
  const bool is_own_lift = p.weight() == 4 && !has_empty_layer;
  const std::vector<Tensor01> images = alternation_images();
  for (int i = 0; i < d && rep.alternation.pass; ++i)
    for (int j = i + 1; j < d && rep.alternation.pass; ++j) {
      const Tensor01 proj = project_pair(p, i, j);
      for (const Tensor01& img : images)
        if (occurs(proj, img)) {
          if (is_own_lift) {
            rep.alternation.detail = "alternation spans the whole pattern on dims " + std::to_string(i) + "," +
                                     std::to_string(j);
          } else {
            rep.alternation.pass = false;
            rep.alternation.detail = "projection on dims " + std::to_string(i) + "," + std::to_string(j) +
                                     " contains the alternation";
          }
          break;
        }
    }

  for (int i = 0; i < d && rep.end_layers.pass; ++i)
    for (int v : {1, p.dim(i)})
      if (layer_is_empty(p, i, v)) {
        rep.end_layers.pass = false;
        rep.end_layers.detail = "empty layer " + std::to_string(v) + " in dimension " + std::to_string(i);
        break;
      }
  return rep;
}

cpp_int minnonlin_count_bound(const std::vector<int>& dims) {
  long long s = 1;
  cpp_int prod = 1;
  for (int k : dims) {
    if (k < 1) throw std::invalid_argument("side lengths must be positive");
    s += 2LL * (2 * k - 2);
    prod *= k;
  }
  const unsigned pexp = static_cast<unsigned>(prod);  // prod small at any feasible size
  cpp_int total = 0;
  cpp_int scale = 1;  // prod^(j-1)
  for (long long j = 1; j <= s; ++j) {
    total += (boost::multiprecision::pow(cpp_int(j + 1), pexp) - boost::multiprecision::pow(cpp_int(j), pexp)) * scale;
    scale *= prod;
  }
  return total;
}

}  // namespace mpat
