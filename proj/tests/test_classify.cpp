#include <gtest/gtest.h>

#include <random>

#include "mpat/classify.hpp"
#include "mpat/containment.hpp"
#include "mpat/search.hpp"
#include "oracle.hpp"

using namespace mpat;

namespace {

const Tensor01 kI2 = make_tensor({2, 2}, {{1, 1}, {2, 2}});
const Tensor01 kJ2 = Tensor01::ones_like({2, 2});

// Some entry shares at most k coordinates with every other 1 of its pattern.
bool property_ii_oracle(const Family& fam, int k) {
  for (const Tensor01& p : fam) {
    const auto ones = p.ones();
    for (const Coord& o : ones) {
      bool alone = true;
      for (const Coord& y : ones) {
        if (y == o) continue;
        int shared = 0;
        for (int i = 0; i < p.rank(); ++i) shared += y[i] == o[i];
        alone = alone && shared <= k;
      }
      if (alone) return true;
    }
  }
  return false;
}

}  // namespace

TEST(Classify, PropertyExamples) {
  EXPECT_TRUE(ssat_property_i(Family{make_tensor({1, 1}, {{1, 1}})}, 0).holds);
  EXPECT_FALSE(ssat_property_i(Family{kJ2}, 0).holds);
  EXPECT_TRUE(ssat_property_i(Family{kJ2}, 1).holds);
  EXPECT_TRUE(ssat_property_ii(Family{kI2}, 0).holds);
  EXPECT_FALSE(ssat_property_ii(Family{kJ2}, 0).holds);
  EXPECT_TRUE(ssat_property_ii(Family{kJ2}, 1).holds);
  const PropertyResult r = ssat_property_ii(Family{kI2}, 0);
  ASSERT_TRUE(r.entry);
  EXPECT_EQ(r.entry->entry, (Coord{1, 1}));
}

TEST(Classify, ExponentExamples) {
  EXPECT_EQ(ssat_exponent(Family{make_tensor({1, 1}, {{1, 1}})}).exponent, 0);
  EXPECT_EQ(ssat_exponent(Family{kI2}).exponent, 0);
  const SsatClassification j = ssat_exponent(Family{kJ2});
  EXPECT_EQ(j.exponent, 1);
  ASSERT_EQ(j.failures.size(), 1u);
  EXPECT_NE(j.failures[0].find("ii"), std::string::npos);
  EXPECT_EQ(ssat_exponent(Family{Tensor01::ones_like({2, 2, 2})}).exponent, 2);
  EXPECT_TRUE(ssat_bounded_single(kI2));
  EXPECT_FALSE(ssat_bounded_single(kJ2));
}

TEST(Classify, PropertyIiMatchesOracle) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 300; ++it) {
    const int d = 2 + static_cast<int>(rng() % 2);
    const Family fam{oracle::random_pattern(rng, d, 1, 3)};
    for (int k = 0; k < d; ++k) EXPECT_EQ(ssat_property_ii(fam, k).holds, property_ii_oracle(fam, k)) << it;
  }
}

TEST(Classify, BoundedTestAgreesWithExponent) {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 300; ++it) {
    const int d = 2 + static_cast<int>(rng() % 2);
    const Tensor01 p = oracle::random_pattern(rng, d, 1, 4, 0.35);
    EXPECT_EQ(ssat_bounded_single(p), ssat_exponent(Family{p}).exponent == 0) << it;
  }
}

TEST(Classify, ExponentIsMonotoneEvidence) {
  // Properties at k = d - 1 hold for every non-empty family.
  std::mt19937_64 rng(41);
  for (int it = 0; it < 100; ++it) {
    const int d = 2 + static_cast<int>(rng() % 2);
    const Family fam{oracle::random_pattern(rng, d, 1, 3)};
    EXPECT_TRUE(ssat_property_i(fam, d - 1).holds);
    EXPECT_TRUE(ssat_property_ii(fam, d - 1).holds);
    const int e = ssat_exponent(fam).exponent;
    EXPECT_GE(e, 0);
    EXPECT_LE(e, d - 1);
  }
}

TEST(Classify, DecideO1Examples) {
  const Family four{Tensor01::ones_like({1, 2}), Tensor01::ones_like({2, 1}), kI2, make_tensor({2, 2}, {{1, 2}, {2, 1}})};
  const O1Verdict v = ex_o1_decide(four, 4);
  EXPECT_EQ(v.status, O1Status::BoundedO1);
  EXPECT_EQ(v.n0, 2);
  EXPECT_EQ(v.bound, 1);
  EXPECT_EQ(ex_exact(four, 3).value, 1u);

  const O1Verdict row = ex_o1_decide(Family{Tensor01::ones_like({1, 2})}, 4);
  EXPECT_EQ(row.status, O1Status::NotO1AtDepth);
  ASSERT_EQ(row.avoiders.size(), 4u);
  EXPECT_EQ(row.avoiders[2], make_tensor({3, 3}, {{1, 1}, {2, 2}, {3, 3}}));

  const O1Verdict one = ex_o1_decide(Family{make_tensor({1, 1}, {{1, 1}})}, 4);
  EXPECT_EQ(one.status, O1Status::BoundedO1);
  EXPECT_EQ(one.n0, 1);
  EXPECT_EQ(one.bound, 0);
}

TEST(Classify, DecideO1IsSound) {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 40; ++it) {
    std::vector<Tensor01> pats;
    for (int k = 0; k < 3; ++k) pats.push_back(oracle::random_pattern(rng, 2, 1, 2));
    const Family fam = Family::deduplicated(pats);
    const O1Verdict v = ex_o1_decide(fam, 3);
    for (std::size_t i = 0; i < v.avoiders.size(); ++i) {
      EXPECT_TRUE(oracle::avoids(v.avoiders[i], fam));
      EXPECT_EQ(v.avoiders[i].weight(), i + 1);
    }
    if (v.status == O1Status::BoundedO1)
      for (int n = 3; n <= 4; ++n) EXPECT_LE(ex_exact(fam, n, SearchLimits{64, 0, 0}).value, v.bound) << it;
  }
}

TEST(Classify, MinNonlinFilters) {
  const Tensor01 cor = make_tensor({2, 2, 2}, {{1, 1, 1}, {1, 2, 1}, {2, 1, 2}, {2, 2, 2}});
  EXPECT_TRUE(minnonlin_filters(cor).all_pass());
  const Tensor01 alt = make_tensor({2, 5}, {{1, 1}, {1, 3}, {2, 2}, {2, 4}});
  EXPECT_FALSE(minnonlin_filters(alt).alternation.pass);
  const Tensor01 tall = make_tensor({2, 2, 12}, {{1, 1, 1}, {2, 2, 12}});
  EXPECT_FALSE(minnonlin_filters(tall).dims_bound.pass);
  EXPECT_EQ(alternation_images().size(), 4u);
}

TEST(Classify, CountBound) {
  EXPECT_EQ(minnonlin_count_bound({1}), 1);
  EXPECT_EQ(minnonlin_count_bound({2}), 289);
  EXPECT_EQ(minnonlin_count_bound({1, 1}), 1);
}
