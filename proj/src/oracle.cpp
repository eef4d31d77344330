#include "lian/oracle.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <queue>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lian/search.hpp"

namespace lian {

namespace {

// Turn between direction vectors via atan2, kept apart from turn_angle().
double heading_change_deg(Offset u, Offset v) {
  const double cross = static_cast<double>(u.di) * v.dj - static_cast<double>(u.dj) * v.di;
  const double dot = static_cast<double>(u.di) * v.di + static_cast<double>(u.dj) * v.dj;
  return std::abs(std::atan2(cross, dot)) * 180.0 / std::numbers::pi;
}

}  // namespace

std::optional<double> oracle_delta_search(const Grid& grid, Cell start, Cell goal, int delta, double alpha_max,
                                          std::size_t max_cells) {
  if (grid.size() > max_cells)
    throw OracleRefused("oracle refuses a " + std::to_string(grid.height()) + "x" + std::to_string(grid.width()) +
                        " grid (bound " + std::to_string(max_cells) + " cells)");
  check_task(grid, start, goal);
  if (delta < 1) throw std::invalid_argument("delta must be >= 1");

  const std::vector<Cell> ring = midpoint_circle({0, 0}, delta);
  constexpr int kNoPred = -1;
  using State = std::pair<int, int>;  // (cell index, predecessor index or kNoPred)
  using Item = std::tuple<double, int, int>;

  std::map<State, double> best;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  auto index = [&](Cell c) { return static_cast<int>(grid.index(c)); };

  best[{index(start), kNoPred}] = 0.0;
  heap.emplace(0.0, index(start), kNoPred);

  while (!heap.empty()) {
    const auto [d, at, pred] = heap.top();
    heap.pop();
    if (d > best[{at, pred}]) continue;
    const Cell b = grid.cell_at(static_cast<std::size_t>(at));
    if (b == goal) return d;

    std::vector<Cell> next;
    bool goal_listed = false;
    for (Cell o : ring) {
      const Cell c{b.i + o.i, b.j + o.j};
      goal_listed = goal_listed || c == goal;
      next.push_back(c);
    }
    if (!goal_listed && euclid_dist(b, goal) < delta) next.push_back(goal);

    for (Cell c : next) {
      if (!grid.in_bounds(c) || grid.blocked(c) || c == b) continue;
      if (pred != kNoPred) {
        const Cell a = grid.cell_at(static_cast<std::size_t>(pred));
        if (heading_change_deg(b - a, c - b) > alpha_max + kAngleSlackDeg) continue;
      }
      if (!line_of_sight(grid, b, c)) continue;
      const double nd = d + euclid_dist(b, c);
      const State s{index(c), at};
      auto it = best.find(s);
      if (it == best.end() || nd < it->second) {
        best[s] = nd;
        heap.emplace(nd, s.first, s.second);
      }
    }
  }
  return std::nullopt;
}

}  // namespace lian
