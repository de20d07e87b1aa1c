#include <gtest/gtest.h>

#include <random>

#include "mpat/constructions.hpp"
#include "mpat/containment.hpp"
#include "mpat/search.hpp"
#include "oracle.hpp"

using namespace mpat;

namespace {

Family random_family(std::mt19937_64& rng, int d) {
  const int size = 1 + static_cast<int>(rng() % 2);
  std::vector<Tensor01> pats;
  for (int k = 0; k < size; ++k) pats.push_back(oracle::random_pattern(rng, d, 1, 3, 0.55));
  return Family::deduplicated(pats);
}

struct SearchCase {
  int d;
  int n;
  std::uint64_t seed;
};

}  // namespace

class SearchOracle : public ::testing::TestWithParam<SearchCase> {};

TEST_P(SearchOracle, ValuesAndWitnessesMatchExhaustiveSearch) {
  const SearchCase c = GetParam();
  std::mt19937_64 rng(c.seed);
  SearchLimits lim;
  lim.max_cells = 64;
  for (int it = 0; it < 6; ++it) {
    const Family fam = random_family(rng, c.d);
    const auto ex_b = oracle::brute(fam, c.n, oracle::Goal::Ex);
    const auto sat_b = oracle::brute(fam, c.n, oracle::Goal::Sat);
    const auto ssat_b = oracle::brute(fam, c.n, oracle::Goal::Ssat);

    for (bool parallel : {true, false}) {
      const SearchOutcome ex = parallel ? ex_exact(fam, c.n, lim) : reference::ex_exact(fam, c.n, lim);
      ASSERT_TRUE(ex.exact);
      EXPECT_EQ(ex.value, ex_b.value) << it;
      EXPECT_EQ(ex.witness, ex_b.witness) << it;

      const SearchOutcome sat = parallel ? sat_exact(fam, c.n, lim) : reference::sat_exact(fam, c.n, lim);
      EXPECT_EQ(sat.status == SearchStatus::Ok, sat_b.found) << it;
      if (sat_b.found) {
        EXPECT_EQ(sat.value, sat_b.value) << it;
        EXPECT_EQ(sat.witness, sat_b.witness) << it;
      }

      const SearchOutcome ssat = parallel ? ssat_exact(fam, c.n, lim) : reference::ssat_exact(fam, c.n, lim);
      ASSERT_TRUE(ssat.exact);
      EXPECT_EQ(ssat.value, ssat_b.value) << it;
      EXPECT_EQ(ssat.witness, ssat_b.witness) << it;
      EXPECT_LE(ssat.value, sat_b.found ? sat_b.value : ssat.value);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Small, SearchOracle,
                         ::testing::Values(SearchCase{1, 9, 1}, SearchCase{2, 3, 2}, SearchCase{2, 4, 3},
                                           SearchCase{2, 4, 4}, SearchCase{3, 2, 5}));

TEST(Search, IdentityValues) {
  for (int k : {2, 3})
    for (int n = 3; n <= 5; ++n) {
      const Family fam{identity_equivalents(k, 2)[0]};
      const std::uint64_t want = static_cast<std::uint64_t>((k - 1) * (2 * n - (k - 1)));
      const SearchLimits lim{32, 0, 0};
      EXPECT_EQ(ex_exact(fam, n, lim).value, want);
      EXPECT_EQ(sat_exact(fam, n, lim).value, want);
    }
}

TEST(Search, SmallKnownValues) {
  EXPECT_EQ(ex_exact(Family{Tensor01::ones_like({2, 2})}, 3).value, 6u);
  EXPECT_EQ(ssat_exact(Family{make_tensor({2, 2}, {{1, 1}, {2, 2}})}, 4).value, 4u);
  EXPECT_EQ(ssat_exact(Family{Tensor01::ones_like({2, 2})}, 4).value, 7u);
}

TEST(Search, ParallelMatchesReferenceAcrossWorkerCounts) {
  const Family fam{make_tensor({3, 3}, {{1, 1}, {2, 2}, {3, 3}})};
  const SearchOutcome ref = reference::sat_exact(fam, 5, SearchLimits{32, 0, 0});
  for (int w : {1, 2, 3, 4}) {
    SearchLimits lim{32, 0, w};
    const SearchOutcome par = sat_exact(fam, 5, lim);
    EXPECT_EQ(par.value, ref.value);
    EXPECT_EQ(par.witness, ref.witness);
    const SearchOutcome ex = ex_exact(fam, 5, lim);
    EXPECT_EQ(ex.witness, reference::ex_exact(fam, 5, lim).witness);
    EXPECT_TRUE(par.exact);
  }
}

TEST(Search, Guards) {
  const Family fam{make_tensor({2, 2}, {{1, 1}, {2, 2}})};
  SearchLimits small;
  small.max_cells = 4;
  const SearchOutcome g = ex_exact(fam, 5, small);
  EXPECT_EQ(g.status, SearchStatus::CellGuard);
  EXPECT_FALSE(g.exact);
  EXPECT_EQ(g.free_cells, 25);
  SearchLimits nodes;
  nodes.max_cells = 32;
  nodes.max_nodes = 3;
  const SearchOutcome h = sat_exact(fam, 5, nodes);
  EXPECT_EQ(h.status, SearchStatus::NodeGuard);
  EXPECT_FALSE(h.exact);
}

TEST(Search, EmptyPatternHasNoAvoider) {
  const Family fam{Tensor01::zeros({1, 1})};
  EXPECT_EQ(ex_exact(fam, 3).status, SearchStatus::NoAvoider);
  EXPECT_EQ(sat_exact(fam, 3).status, SearchStatus::NoSaturated);
}

TEST(Search, PredicatesMatchOracle) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 300; ++it) {
    const int d = 2 + static_cast<int>(rng() % 2);
    const Family fam = random_family(rng, d);
    const int n = d == 2 ? 4 : 3;
    const Tensor01 m = oracle::random_tensor(rng, Shape::filled(d, n), 0.5);
    EXPECT_EQ(is_saturated(m, fam), oracle::saturated(m, fam)) << it;
    EXPECT_EQ(is_semisaturated(m, fam), oracle::semisaturated(m, fam)) << it;
    EXPECT_EQ(reference::is_saturated(m, fam), oracle::saturated(m, fam)) << it;
    EXPECT_EQ(reference::is_semisaturated(m, fam), oracle::semisaturated(m, fam)) << it;
  }
}

TEST(Search, SaturateGreedyProducesSaturatedSuperset) {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 100; ++it) {
    const Family fam = random_family(rng, 2);
    if (fam.has_empty_pattern()) continue;
    const Tensor01 seed = Tensor01::zeros({5, 5});
    if (!avoids_all(seed, fam)) continue;
    const Tensor01 s = saturate_greedy(fam, seed);
    EXPECT_TRUE(oracle::saturated(s, fam)) << it;
    EXPECT_GE(s.weight(), sat_exact(fam, 5, SearchLimits{64, 0, 0}).value);
  }
}
