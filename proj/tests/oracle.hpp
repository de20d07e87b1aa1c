#pragma once

// Brute-force references used only by the tests. Nothing here calls the
// library's containment or search code.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "mpat/family.hpp"
#include "mpat/tensor.hpp"

namespace oracle {

using mpat::Coord;
using mpat::Family;
using mpat::Shape;
using mpat::Tensor01;

/// Strictly increasing maps [k] -> [n], lexicographic.
inline std::vector<std::vector<int>> increasing_maps(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

/// Every embedding, in lexicographic order of (phi_1, ..., phi_d); fn returns
/// false to stop.
inline void for_each_embedding(const Tensor01& host, const Tensor01& p,
                               const std::function<bool(const std::vector<std::vector<int>>&)>& fn) {
  const int d = p.rank();
  std::vector<std::vector<std::vector<int>>> choices(d);
  for (int i = 0; i < d; ++i) choices[i] = increasing_maps(p.dim(i), host.dim(i));
  std::vector<std::vector<int>> phi(d);
  const std::vector<Coord> ones = p.ones();
  bool stop = false;
  std::function<void(int)> rec = [&](int i) {
    if (stop) return;
    if (i == d) {
      for (const Coord& x : ones) {
        Coord y = x;
        for (int j = 0; j < d; ++j) y[j] = phi[j][x[j] - 1];
        if (!host.get(y)) return;
      }
      if (!fn(phi)) stop = true;
      return;
    }
    for (const auto& m : choices[i]) {
      phi[i] = m;
      rec(i + 1);
      if (stop) return;
    }
  };
  rec(0);
}

inline std::optional<std::vector<std::vector<int>>> least_embedding(const Tensor01& host, const Tensor01& p) {
  std::optional<std::vector<std::vector<int>>> out;
  for_each_embedding(host, p, [&](const auto& phi) {
    out = phi;
    return false;
  });
  return out;
}

inline bool contains(const Tensor01& host, const Tensor01& p) { return least_embedding(host, p).has_value(); }

inline bool contains_using(const Tensor01& host, const Tensor01& p, const Coord& cell) {
  bool found = false;
  for_each_embedding(host, p, [&](const auto& phi) {
    for (const Coord& x : p.ones()) {
      bool hit = true;
      for (int j = 0; j < p.rank(); ++j) hit = hit && phi[j][x[j] - 1] == cell[j];
      if (hit) {
        found = true;
        return false;
      }
    }
    return true;
  });
  return found;
}

inline bool avoids(const Tensor01& host, const Family& fam) {
  for (const Tensor01& p : fam)
    if (oracle::contains(host, p)) return false;
  return true;
}

inline bool saturated(const Tensor01& m, const Family& fam) {
  if (!avoids(m, fam)) return false;
  for (std::uint64_t k = 0; k < m.cell_count(); ++k)
    if (!m.test(k) && avoids(m.with(m.coord_of(k), true), fam)) return false;
  return true;
}

inline bool semisaturated(const Tensor01& m, const Family& fam) {
  for (std::uint64_t k = 0; k < m.cell_count(); ++k) {
    if (m.test(k)) continue;
    const Coord c = m.coord_of(k);
    const Tensor01 f = m.with(c, true);
    bool created = false;
    for (const Tensor01& p : fam) created = created || oracle::contains_using(f, p, c);
    if (!created) return false;
  }
  return true;
}

/// Matrix number x with cell 0 as the most significant bit, so increasing x
/// walks the matrices in lexicographic order of their bit strings.
inline Tensor01 matrix_from_bits(const Shape& dims, std::uint64_t x, std::uint64_t cells) {
  return Tensor01::from_predicate(dims, [&](const Coord& c) {
    const std::uint64_t k = Tensor01::zeros(dims).linear_index(c);
    return ((x >> (cells - 1 - k)) & 1U) != 0;
  });
}

struct Best {
  std::uint64_t value = 0;
  Tensor01 witness;
  bool found = false;
};

enum class Goal { Ex, Sat, Ssat };

/// Exhaustive optimum over every n^d matrix; the witness is the first optimum
/// in bit-string order.
inline Best brute(const Family& fam, int n, Goal goal) {
  const Shape dims = Shape::filled(fam.rank(), n);
  const std::uint64_t cells = Tensor01::zeros(dims).cell_count();
  Best best;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << cells); ++x) {
    const std::uint64_t w = static_cast<std::uint64_t>(std::popcount(x));
    if (best.found && (goal == Goal::Ex ? w <= best.value : w >= best.value)) continue;
    const Tensor01 m = matrix_from_bits(dims, x, cells);
    const bool ok = goal == Goal::Ex ? avoids(m, fam) : goal == Goal::Sat ? saturated(m, fam) : semisaturated(m, fam);
    if (!ok) continue;
    best = {w, m, true};
  }
  return best;
}

inline Tensor01 random_tensor(std::mt19937_64& rng, const Shape& dims, double p_one) {
  std::bernoulli_distribution coin(p_one);
  return Tensor01::from_predicate(dims, [&](const Coord&) { return coin(rng); });
}

inline Shape random_shape(std::mt19937_64& rng, int d, int lo, int hi) {
  std::uniform_int_distribution<int> side(lo, hi);
  Shape s;
  for (int i = 0; i < d; ++i) s.push_back(side(rng));
  return s;
}

/// Random pattern with at least one 1.
inline Tensor01 random_pattern(std::mt19937_64& rng, int d, int lo, int hi, double p_one = 0.5) {
  for (;;) {
    Tensor01 t = random_tensor(rng, random_shape(rng, d, lo, hi), p_one);
    if (t.weight() > 0) return t;
  }
}

}  // namespace oracle
