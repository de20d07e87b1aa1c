#include <gtest/gtest.h>

#include <random>

#include "mpat/containment.hpp"
#include "mpat/transforms.hpp"
#include "oracle.hpp"

using namespace mpat;

TEST(Transforms, ReplicateExample) {
  const Tensor01 p = make_tensor({2, 3}, {{1, 1}, {2, 3}});
  const Tensor01 r = replicate_dim(p, 1);
  EXPECT_EQ(r, make_tensor({2, 3, 3}, {{1, 1, 1}, {2, 3, 3}}));
}

TEST(Transforms, LowerAndLiftExamples) {
  const Tensor01 p = make_tensor({2, 2}, {{1, 1}, {2, 2}});
  EXPECT_EQ(lower_entry(p, 0, {2, 2}), make_tensor({3, 2}, {{1, 1}, {3, 2}}));
  EXPECT_EQ(lift_entry(p, 0, {1, 1}), make_tensor({3, 2}, {{1, 1}, {3, 2}}));
  EXPECT_THROW(lower_entry(p, 0, {1, 1}), std::invalid_argument);
  EXPECT_THROW(lower_entry(p, 0, {2, 1}), std::invalid_argument);
  EXPECT_THROW(lift_entry(p, 1, {2, 2}), std::invalid_argument);
}

TEST(Transforms, InsertExamples) {
  const Tensor01 p = make_tensor({2, 2}, {{1, 1}, {2, 2}});
  EXPECT_EQ(insert_empty_layer(p, 1, 1), make_tensor({2, 3}, {{1, 1}, {2, 3}}));
  EXPECT_EQ(insert_empty_layer(p, 0, 0), make_tensor({3, 2}, {{2, 1}, {3, 2}}));
  EXPECT_EQ(insert_one_layers(make_tensor({1, 2}, {{1, 1}, {1, 2}}), 1, 1, Coord{1}, 2),
            Tensor01::ones_like({1, 4}));
  EXPECT_THROW(insert_empty_layer(p, 0, 3), std::out_of_range);
  EXPECT_THROW(insert_one_layers(p, 0, 0, Coord{1}, 1), std::out_of_range);
}

TEST(Transforms, Properties) {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 200; ++it) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const Tensor01 p = oracle::random_pattern(rng, d, 1, 3);
    const int i = static_cast<int>(rng() % d);

    const Tensor01 r = replicate_dim(p, i);
    EXPECT_EQ(r.rank(), d + 1);
    EXPECT_EQ(r.weight(), p.weight());
    EXPECT_EQ(project(r, d), p);

    const int pos = static_cast<int>(rng() % (p.dim(i) + 1));
    const Tensor01 e = insert_empty_layer(p, i, pos);
    EXPECT_EQ(e.dim(i), p.dim(i) + 1);
    EXPECT_EQ(e.weight(), p.weight());
    EXPECT_TRUE(layer_is_empty(e, i, pos + 1));
    EXPECT_TRUE(oracle::contains(e, p));

    for (const Coord& c : p.ones()) {
      if (c[i] == p.dim(i)) {
        const Tensor01 l = lower_entry(p, i, c);
        EXPECT_EQ(l.weight(), p.weight());
        Coord moved = c;
        moved[i] += 1;
        EXPECT_TRUE(l.get(moved));
        EXPECT_EQ(l.with(moved, false), insert_empty_layer(p.with(c, false), i, p.dim(i)));
      }
      if (c[i] == 1) {
        Coord rc = c;
        rc[i] = p.dim(i);
        EXPECT_EQ(lift_entry(p, i, c), reflect_dim(lower_entry(reflect_dim(p, i), i, rc), i));
      }
    }

    if (p.dim(i) >= 2 && d >= 2) {
      const int at = 1 + static_cast<int>(rng() % (p.dim(i) - 1));
      Coord row;
      for (int j = 0; j < d; ++j)
        if (j != i) row.push_back(1 + static_cast<int>(rng() % p.dim(j)));
      const int t = 1 + static_cast<int>(rng() % 2);
      const Tensor01 q = insert_one_layers(p, i, at, row, t);
      EXPECT_EQ(q.weight(), p.weight() + static_cast<std::uint64_t>(t));
      EXPECT_EQ(q.dim(i), p.dim(i) + t);
      EXPECT_TRUE(oracle::contains(q, p));
    }
  }
}
