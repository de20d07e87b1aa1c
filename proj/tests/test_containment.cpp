#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <span>

#include "mpat/containment.hpp"
#include "oracle.hpp"

using namespace mpat;

TEST(Containment, Examples) {
  const Tensor01 i2 = make_tensor({2, 2}, {{1, 1}, {2, 2}});
  const Tensor01 anti = make_tensor({2, 2}, {{1, 2}, {2, 1}});
  const Tensor01 i3 = make_tensor({3, 3}, {{1, 1}, {2, 2}, {3, 3}});
  EXPECT_TRUE(occurs(i3, i2));
  EXPECT_FALSE(occurs(i3, anti));
  const auto e = contains(i3, i2);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->maps, (std::vector<std::vector<int>>{{1, 2}, {1, 2}}));
  EXPECT_EQ(e->apply({2, 2}), (Coord{2, 2}));
  EXPECT_TRUE(contains_using(i3, i2, {3, 3}));
  EXPECT_FALSE(occurs(Tensor01::zeros({2, 2}), make_tensor({1, 1}, {{1, 1}})));
  EXPECT_TRUE(occurs(Tensor01::zeros({2, 2}), Tensor01::zeros({2, 1})));
  EXPECT_FALSE(occurs(Tensor01::ones_like({2, 2}), Tensor01::zeros({3, 1})));
  EXPECT_THROW(occurs(i3, make_tensor({1}, {{1}})), std::invalid_argument);
}

TEST(Containment, Family) {
  const Tensor01 host = make_tensor({3, 3}, {{1, 3}, {2, 2}, {3, 1}});
  const Family fam{make_tensor({2, 2}, {{1, 1}, {2, 2}}), make_tensor({2, 2}, {{1, 2}, {2, 1}})};
  const auto m = contains_any(host, fam);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->index, 1u);
  EXPECT_FALSE(avoids_all(host, fam));
  EXPECT_TRUE(any_contains_using(host, fam, {2, 2}));
  EXPECT_TRUE(avoids_all(host, Family{make_tensor({2, 2}, {{1, 1}, {2, 2}})}));
}

struct ContainmentCase {
  int d;
  int host_lo, host_hi, pat_hi;
  double density;
};

class ContainmentOracle : public ::testing::TestWithParam<ContainmentCase> {};

TEST_P(ContainmentOracle, AgreesWithBruteForce) {
  const ContainmentCase c = GetParam();
  std::mt19937_64 rng(1000 + c.d);
  for (int it = 0; it < 150; ++it) {
    const Tensor01 host = oracle::random_tensor(rng, oracle::random_shape(rng, c.d, c.host_lo, c.host_hi), c.density);
    const Tensor01 p = oracle::random_tensor(rng, oracle::random_shape(rng, c.d, 1, c.pat_hi), 0.5);
    const auto want = oracle::least_embedding(host, p);
    const auto got = contains(host, p);
    ASSERT_EQ(got.has_value(), want.has_value()) << it;
    EXPECT_EQ(occurs(host, p), want.has_value());
    if (want) EXPECT_EQ(got->maps, *want) << it;
    for (const Coord& cell : host.ones())
      EXPECT_EQ(contains_using(host, p, cell), oracle::contains_using(host, p, cell)) << it;
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, ContainmentOracle,
                         ::testing::Values(ContainmentCase{1, 1, 7, 4, 0.5}, ContainmentCase{2, 2, 5, 3, 0.6},
                                           ContainmentCase{3, 2, 4, 2, 0.6}, ContainmentCase{4, 1, 3, 2, 0.7}));

TEST(Containment, SymmetryInvariance) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 200; ++it) {
    const int d = 2 + static_cast<int>(rng() % 2);
    const Tensor01 host = oracle::random_tensor(rng, oracle::random_shape(rng, d, 2, 4), 0.6);
    const Tensor01 p = oracle::random_pattern(rng, d, 1, 3);
    const int i = static_cast<int>(rng() % d), j = (i + 1 + static_cast<int>(rng() % d)) % d;
    const bool base = occurs(host, p);
    EXPECT_EQ(occurs(reflect_dim(host, i), reflect_dim(p, i)), base);
    if (i != j) EXPECT_EQ(occurs(exchange_dims(host, i, j), exchange_dims(p, i, j)), base);
  }
}

TEST(Containment, MonotoneInHost) {
  std::mt19937_64 rng(9);
  for (int it = 0; it < 200; ++it) {
    const Tensor01 host = oracle::random_tensor(rng, oracle::random_shape(rng, 2, 2, 5), 0.4);
    const Tensor01 p = oracle::random_pattern(rng, 2, 1, 3);
    if (!occurs(host, p)) continue;
    const Coord c = host.coord_of(rng() % host.cell_count());
    EXPECT_TRUE(occurs(host.with(c, true), p));
  }
}

TEST(Containment, ForEachCopyVisitsEveryImage) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 60; ++it) {
    const int d = 2 + static_cast<int>(rng() % 2);
    const Tensor01 p = oracle::random_pattern(rng, d, 1, 3);
    const Tensor01 host = Tensor01::ones_like(oracle::random_shape(rng, d, 2, 4));
    std::set<std::vector<std::uint64_t>> got, want;
    for_each_copy(host.dims(), p, [&](std::span<const std::uint64_t> img) {
      std::vector<std::uint64_t> v(img.begin(), img.end());
      std::sort(v.begin(), v.end());
      got.insert(v);
    });
    oracle::for_each_embedding(host, p, [&](const auto& phi) {
      std::vector<std::uint64_t> v;
      for (const Coord& x : p.ones()) {
        Coord y = x;
        for (int j = 0; j < d; ++j) y[j] = phi[j][x[j] - 1];
        v.push_back(host.linear_index(y));
      }
      std::sort(v.begin(), v.end());
      want.insert(v);
      return true;
    });
    EXPECT_EQ(got, want) << it;
  }
}
