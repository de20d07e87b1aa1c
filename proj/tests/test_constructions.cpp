#include <gtest/gtest.h>

#include <set>

#include "mpat/constructions.hpp"
#include "mpat/containment.hpp"
#include "mpat/search.hpp"
#include "oracle.hpp"

using namespace mpat;

TEST(Constructions, IdentityEquivalents) {
  const Family f = identity_equivalents(3, 2);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], make_tensor({3, 3}, {{1, 1}, {2, 2}, {3, 3}}));
  EXPECT_EQ(f[1], make_tensor({3, 3}, {{1, 3}, {2, 2}, {3, 1}}));
  EXPECT_EQ(identity_equivalents(2, 3).size(), 4u);
  EXPECT_EQ(identity_equivalents(1, 3).size(), 1u);
  for (const Tensor01& t : identity_equivalents(3, 3)) {
    EXPECT_EQ(t.weight(), 3u);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(project(project(t, (i + 1) % 3), i < 2 ? 0 : 1).weight(), 3u);
  }
}

// Every n0-subset of the n0^d cells whose members pairwise share a coordinate.
std::set<std::vector<std::uint64_t>> j_family_oracle(int n0, int d) {
  const Tensor01 box = Tensor01::zeros(Shape::filled(d, n0));
  const std::uint64_t cells = box.cell_count();
  std::set<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> pick;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t from) {
    if (static_cast<int>(pick.size()) == n0) {
      out.insert(pick);
      return;
    }
    for (std::uint64_t k = from; k < cells; ++k) {
      const Coord c = box.coord_of(k);
      bool ok = true;
      for (std::uint64_t q : pick) {
        const Coord e = box.coord_of(q);
        bool share = false;
        for (int i = 0; i < d; ++i) share = share || e[i] == c[i];
        ok = ok && share;
      }
      if (!ok) continue;
      pick.push_back(k);
      rec(k + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

TEST(Constructions, JFamilyMatchesOracle) {
  for (auto [n0, d] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 2}}) {
    std::set<std::vector<std::uint64_t>> got;
    std::vector<std::uint64_t> prev;
    for (const Tensor01& t : j_family(n0, d)) {
      std::vector<std::uint64_t> cells;
      for (const Coord& c : t.ones()) cells.push_back(t.linear_index(c));
      EXPECT_LT(prev, cells);  // lexicographic stream
      prev = cells;
      got.insert(cells);
    }
    EXPECT_EQ(got, j_family_oracle(n0, d)) << n0 << " " << d;
  }
  EXPECT_EQ(j_family(2, 2).size(), 4u);
  EXPECT_EQ(j_family(2, 3).size(), 24u);
  EXPECT_EQ(j_family(3, 3).size(), 945u);
  EXPECT_THROW(JFamilyEnumerator(5, 3, 100), std::length_error);
}

TEST(Constructions, FamilyPkr) {
  const Family f = family_pkr(3, 2, 1);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], make_tensor({1, 2, 1}, {{1, 2, 1}}));
  EXPECT_EQ(f[1], Tensor01::ones_like({3, 1, 1}));
  const Family g = family_pkr(2, 1, 0);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], make_tensor({1, 2}, {{1, 2}}));
}

TEST(Constructions, FamilyBdr) {
  const BdrFamily b = family_bdr(2, 1);
  EXPECT_EQ(b.base, make_tensor({2, 2}, {{1, 1}}));
  EXPECT_EQ(b.fam.size(), 3u);
  for (const Tensor01& p : b.fam) EXPECT_EQ(p.weight(), 2u);
  EXPECT_EQ(family_bdr(3, 2).fam.size(), 27u - 8u);
}

TEST(Constructions, SingleOneSaturatedIsTheBruteForceOptimum) {
  for (const Shape& dims : std::vector<Shape>{{1, 2}, {2, 2}, {2, 1}, {1, 3}})
    for_each_coord(dims, [&](const Coord& q) {
      const Tensor01 p = make_tensor(dims, {q});
      const Family fam{p};
      for (int n : {3, 4}) {
        const Tensor01 m = single_one_saturated(p, n);
        EXPECT_TRUE(oracle::saturated(m, fam));
        const oracle::Best best = oracle::brute(fam, n, oracle::Goal::Sat);
        EXPECT_EQ(best.value, m.weight());
        EXPECT_EQ(best.witness, m);
      }
    });
  EXPECT_EQ(single_one_saturated(make_tensor({1, 1}, {{1, 1}}), 3).weight(), 0u);
}

TEST(Constructions, SsatWitnessIsSemisaturated) {
  const Family j2{Tensor01::ones_like({2, 2})};
  const Tensor01 w = ssat_witness(j2, 1, 6);
  EXPECT_EQ(w.weight(), 20u);
  EXPECT_TRUE(oracle::semisaturated(w, j2));
  EXPECT_EQ(ssat_witness(j2, 0, 6).weight(), 4u);
  EXPECT_THROW(ssat_witness(j2, 1, 4), std::invalid_argument);
}

TEST(Constructions, SsatExponentPatterns) {
  EXPECT_EQ(ssat_exponent_pattern(2, 1).pattern, make_tensor({5, 5}, {{2, 2}}));
  const SsatPatternResult r = ssat_exponent_pattern(2, 0);
  EXPECT_EQ(r.pattern, make_tensor({6, 6}, {{1, 2}, {2, 1}, {3, 6}, {6, 3}}));
  EXPECT_EQ(ssat_exponent_pattern(3, 2).pattern, make_tensor({5, 5, 5}, {{2, 2, 2}}));
  EXPECT_EQ(ssat_exponent_pattern(3, 1).pattern.weight(), 6u);
  EXPECT_EQ(ssat_exponent_pattern(3, 0).pattern.dims(), (Shape{13, 13, 13}));
}

TEST(Constructions, LineAndCorner) {
  EXPECT_EQ(line_witness(3, 2, 0, 2), make_tensor({3, 3}, {{2, 1}, {2, 2}, {2, 3}}));
  EXPECT_EQ(corner_matrix(2, 1, 3), make_tensor({3, 3}, {{1, 1}}));
  EXPECT_EQ(corner_matrix(3, 2, 4).weight(), 8u);
  const Tensor01 big = inflate_empty_layers(corner_matrix(2, 1, 3), 5);
  EXPECT_EQ(big, make_tensor({5, 5}, {{1, 1}}));
  EXPECT_THROW(inflate_empty_layers(Tensor01::ones_like({2, 2}), 4), std::invalid_argument);
}
