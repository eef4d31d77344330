#include <gtest/gtest.h>

#include <random>

#include "lian/lian_search.hpp"
#include "lian/oracle.hpp"
#include "lian/urban_map.hpp"

namespace lian {
namespace {

TEST(Oracle, ColinearEndpoints) {
  const Grid g(20, 20);
  const auto len = oracle_delta_search(g, {10, 2}, {10, 12}, 5, 20);
  ASSERT_TRUE(len.has_value());
  EXPECT_DOUBLE_EQ(*len, 10.0);
}

TEST(Oracle, ShortcutIntoGoal) {
  const Grid g(5, 20);
  const auto len = oracle_delta_search(g, {2, 0}, {2, 7}, 3, 45);
  ASSERT_TRUE(len.has_value());
  EXPECT_DOUBLE_EQ(*len, 7.0);
}

TEST(Oracle, Disconnected) {
  Grid g(9, 9);
  g.block_rect(0, 4, 9, 5);
  EXPECT_FALSE(oracle_delta_search(g, {4, 0}, {4, 8}, 2, 90).has_value());
}

TEST(Oracle, RefusesLargeGrids) {
  const Grid g(33, 32);
  EXPECT_THROW(oracle_delta_search(g, {0, 0}, {5, 5}, 3, 45), OracleRefused);
  EXPECT_NO_THROW(oracle_delta_search(Grid(32, 32), {0, 0}, {5, 5}, 3, 45));
}

TEST(Oracle, AgreesWithUnweightedLian) {
  std::mt19937_64 rng(31);
  int solved = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Grid g = generate_random_grid(rng(), 14, 14, 0.15);
    std::uniform_int_distribution<int> c(0, 13);
    const Cell s{c(rng), c(rng)};
    const Cell goal{c(rng), c(rng)};
    if (!g.traversable(s) || !g.traversable(goal) || s == goal) continue;
    SearchParams p;
    p.delta = 3;
    p.alpha_max = 45;
    const auto expected = oracle_delta_search(g, s, goal, 3, 45);
    const SearchResult r = lian_search(g, s, goal, p);
    ASSERT_EQ(expected.has_value(), r.found());
    if (expected) {
      ++solved;
      ASSERT_NEAR(r.length(), *expected, 1e-6);
    }
  }
  EXPECT_GT(solved, 5);
}

}  // namespace
}  // namespace lian
