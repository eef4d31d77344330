#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "lian/lian_search.hpp"
#include "lian/urban_map.hpp"
#include "support/reference.hpp"

namespace lian {
namespace {

SearchParams lian_params(int delta, double alpha, double w = 1.0) {
  SearchParams p;
  p.delta = delta;
  p.alpha_max = alpha;
  p.heuristic_weight = w;
  return p;
}

TEST(LianSearch, ColinearOnEmptyGrid) {
  const Grid g(20, 20);
  for (double w : {1.0, 2.0}) {
    const SearchResult r = lian_search(g, {10, 0}, {10, 15}, lian_params(5, 25, w));
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.path->cells(), (std::vector<Cell>{{10, 0}, {10, 5}, {10, 10}, {10, 15}}));
    EXPECT_DOUBLE_EQ(r.length(), 15.0);
    EXPECT_NEAR(max_turn_angle(*r.path), 0.0, 1e-9);
    EXPECT_EQ(r.section_deltas, (std::vector<int>{5, 5, 5}));
    EXPECT_DOUBLE_EQ(r.cost, 15.0);
  }
}

TEST(LianSearch, DisconnectedByFullWall) {
  Grid g(9, 9);
  g.block_rect(0, 4, 9, 5);
  const SearchResult r = lian_search(g, {4, 0}, {4, 8}, lian_params(3, 45));
  EXPECT_EQ(r.outcome, Outcome::NoPath);
  EXPECT_FALSE(r.path.has_value());
  EXPECT_GT(r.nodes_expanded, 0u);
}

TEST(LianSearch, InvalidTasksAndParameters) {
  Grid g(10, 10);
  g.set_blocked({0, 0}, true);
  EXPECT_THROW(lian_search(g, {0, 0}, {5, 5}, lian_params(3, 45)), InvalidTask);
  EXPECT_THROW(lian_search(g, {1, 1}, {10, 5}, lian_params(3, 45)), InvalidTask);
  EXPECT_THROW(lian_search(g, {1, 1}, {1, 1}, lian_params(3, 45)), InvalidTask);
  EXPECT_THROW(lian_search(g, {1, 1}, {5, 5}, lian_params(0, 45)), std::invalid_argument);
  EXPECT_THROW(lian_search(g, {1, 1}, {5, 5}, lian_params(3, 0)), std::invalid_argument);
  EXPECT_THROW(lian_search(g, {1, 1}, {5, 5}, lian_params(3, 180)), std::invalid_argument);
  EXPECT_THROW(lian_search(g, {1, 1}, {5, 5}, lian_params(3, 45, 0.5)), std::invalid_argument);
}

TEST(LianExpand, StartNodeIgnoresAngleAndKeepsInBoundsCircle) {
  const Grid g(30, 30);
  {
    LianSearch s(g, {15, 15}, {29, 29}, lian_params(5, 10));
    const NodeId root = s.make_node({15, 15}, kNoNode, 5);
    s.close(root);
    EXPECT_EQ(s.expand(root).size(), 28u);
  }
  {
    // Corner start: only the in-bounds quarter of the ring survives.
    LianSearch s(g, {0, 0}, {29, 29}, lian_params(5, 10));
    const NodeId root = s.make_node({0, 0}, kNoNode, 5);
    s.close(root);
    std::size_t in_bounds = 0;
    for (auto [di, dj] : testing::reference_circle(5))
      if (di >= 0 && dj >= 0) ++in_bounds;
    EXPECT_EQ(s.expand(root).size(), in_bounds);
  }
}

TEST(LianExpand, PrunesTurnsAboveLimit) {
  const Grid g(30, 30);
  LianSearch s(g, {15, 10}, {29, 29}, lian_params(5, 30));
  const NodeId west = s.make_node({15, 5}, kNoNode, 5);
  const NodeId node = s.make_node({15, 10}, west, 5);
  s.close(west);
  s.close(node);
  const auto pushed = s.expand(node);
  ASSERT_FALSE(pushed.empty());
  std::set<Cell> cells;
  for (const NodeEvent& e : pushed) {
    cells.insert(e.cell);
    EXPECT_TRUE(angle_within(turn_angle(Offset{0, 5}, e.cell - Cell{15, 10}), 30.0));
    EXPECT_DOUBLE_EQ(e.g, 5.0 + euclid_dist({15, 10}, e.cell));
  }
  EXPECT_FALSE(cells.contains({20, 10}));  // due south: 90 degree turn
  EXPECT_TRUE(cells.contains({15, 15}));   // straight on
  std::size_t expected = 0;
  for (auto [di, dj] : testing::reference_circle(5))
    if (testing::reference_turn({0, 5}, {di, dj}) <= 30.0 + 1e-9) ++expected;
  EXPECT_EQ(pushed.size(), expected);
}

TEST(LianExpand, AppendsNearbyGoal) {
  const Grid g(30, 30);
  LianSearch s(g, {10, 10}, {10, 13}, lian_params(5, 30));
  const NodeId root = s.make_node({10, 10}, kNoNode, 5);
  s.close(root);
  const auto pushed = s.expand(root);
  EXPECT_EQ(std::count_if(pushed.begin(), pushed.end(), [](const NodeEvent& e) { return e.cell == Cell{10, 13}; }), 1);
  EXPECT_EQ(pushed.size(), 29u);
}

TEST(LianExpand, GoalOnRingIsNotDuplicated) {
  const Grid g(30, 30);
  LianSearch s(g, {10, 10}, {10, 15}, lian_params(5, 30));
  const NodeId root = s.make_node({10, 10}, kNoNode, 5);
  s.close(root);
  const auto pushed = s.expand(root);
  EXPECT_EQ(pushed.size(), 28u);
}

TEST(LianExpand, ClosedTwinsAreSkipped) {
  const Grid g(30, 30);
  LianSearch s(g, {15, 15}, {29, 29}, lian_params(5, 30));
  const NodeId root = s.make_node({15, 15}, kNoNode, 5);
  const NodeId twin = s.make_node({20, 15}, root, 5);
  s.close(root);
  s.close(twin);
  EXPECT_EQ(s.expand(root).size(), 27u);
}

TEST(ReconstructPath, Chains) {
  const std::vector<ChainLink> nodes{{{0, 0}, kNoNode}, {{0, 5}, 0}, {{3, 9}, 1}};
  const Path two = reconstruct_path(nodes, 2);
  EXPECT_EQ(two.sections.size(), 2u);
  EXPECT_EQ(two.start(), (Cell{0, 0}));
  EXPECT_EQ(two.goal(), (Cell{3, 9}));
  const Path one = reconstruct_path(nodes, 1);
  EXPECT_EQ(one.sections.size(), 1u);
  EXPECT_DOUBLE_EQ(max_turn_angle(one), 0.0);
}

TEST(ReconstructPath, BrokenChains) {
  const std::vector<ChainLink> dangling{{{0, 0}, kNoNode}, {{0, 5}, 7}};
  EXPECT_THROW(reconstruct_path(dangling, 1), std::logic_error);
  const std::vector<ChainLink> cycle{{{0, 0}, 1}, {{0, 5}, 0}};
  EXPECT_THROW(reconstruct_path(cycle, 1), std::logic_error);
  const std::vector<ChainLink> root_only{{{0, 0}, kNoNode}};
  EXPECT_THROW(reconstruct_path(root_only, 0), std::logic_error);
}

TEST(LianSearch, Budgets) {
  const Grid g(64, 64);
  SearchParams p = lian_params(3, 20);
  p.budget.max_expansions = 5;
  const SearchResult r = lian_search(g, {0, 0}, {63, 40}, p);
  EXPECT_EQ(r.outcome, Outcome::BudgetExhausted);
  EXPECT_EQ(r.nodes_expanded, 5u);

  SearchParams q = lian_params(3, 20);
  q.budget.max_time = std::chrono::duration<double>(0.0);
  EXPECT_EQ(lian_search(g, {0, 0}, {63, 40}, q).outcome, Outcome::BudgetExhausted);
}

// Runs a search with hooks and checks the search-discipline invariants.
void check_discipline(const Grid& g, Cell s, Cell goal, const SearchParams& p) {
  std::map<NodeId, NodeEvent> pushed;
  std::vector<double> popped_f;
  std::set<std::pair<Cell, std::optional<Cell>>> expanded;
  SearchHooks hooks;
  hooks.on_push = [&](const NodeEvent& e) { pushed[e.id] = e; };
  hooks.on_expand = [&](const NodeEvent& e) {
    popped_f.push_back(e.f);
    ASSERT_TRUE(expanded.insert({e.cell, e.parent_cell}).second) << "expanded twice";
  };
  const SearchResult r = lian_search(g, s, goal, p, hooks);

  for (const auto& [id, e] : pushed) {
    double chain = 0.0;
    for (NodeId k = id; pushed.at(k).parent_id != kNoNode; k = pushed.at(k).parent_id)
      chain += euclid_dist(pushed.at(pushed.at(k).parent_id).cell, pushed.at(k).cell);
    ASSERT_NEAR(e.g, chain, 1e-9);
  }
  if (p.heuristic_weight == 1.0)
    for (std::size_t k = 1; k < popped_f.size(); ++k) ASSERT_GE(popped_f[k], popped_f[k - 1] - 1e-9);

  if (r.found()) {
    ASSERT_TRUE(validate_path(g, *r.path, s, goal, p.alpha_max));
    ASSERT_NEAR(r.length(), r.cost, 1e-9);
    for (std::size_t k = 0; k + 1 < r.path->sections.size(); ++k)
      ASSERT_TRUE(testing::on_circle(r.path->sections[k].tail, r.path->sections[k].head, p.delta));
  }
}

TEST(LianSearch, DisciplineOnRandomGrids) {
  std::mt19937_64 rng(2024);
  const double alphas[] = {20, 30, 45, 90};
  for (int trial = 0; trial < 60; ++trial) {
    const Grid g = generate_random_grid(rng(), 20, 20, 0.15);
    std::uniform_int_distribution<int> c(0, 19);
    Cell s{c(rng), c(rng)};
    Cell goal{c(rng), c(rng)};
    if (!g.traversable(s) || !g.traversable(goal) || s == goal) continue;
    SearchParams p = lian_params(2 + trial % 4, alphas[trial % 4], trial % 3 == 0 ? 2.0 : 1.0);
    check_discipline(g, s, goal, p);
  }
}

}  // namespace
}  // namespace lian
