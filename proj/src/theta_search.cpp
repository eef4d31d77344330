#include "lian/theta_search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <queue>

namespace lian {

void ThetaParams::validate() const {
  if (!(alpha_max > 0.0 && alpha_max < 180.0)) throw std::invalid_argument("alpha_max must lie in (0, 180)");
  if (!(heuristic_weight >= 1.0)) throw std::invalid_argument("heuristic weight must be >= 1");
}

namespace {

constexpr std::int64_t kNone = -1;
constexpr Offset kNeighbours[8] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1}};

struct Entry {
  double f;
  double g;
  Cell cell;
  std::uint64_t seq;
};

struct WorseEntry {
  bool operator()(const Entry& a, const Entry& b) const {
    if (a.f != b.f) return a.f > b.f;
    if (a.g != b.g) return a.g < b.g;
    if (a.cell != b.cell) return b.cell < a.cell;
    return a.seq > b.seq;
  }
};

class ThetaLa {
 public:
  ThetaLa(const Grid& grid, Cell start, Cell goal, const ThetaParams& params)
      : grid_(grid),
        start_(start),
        goal_(goal),
        params_(params),
        g_(grid.size(), std::numeric_limits<double>::infinity()),
        parent_(grid.size(), kNone),
        closed_(grid.size(), 0) {}

  SearchResult run() {
    using Clock = std::chrono::steady_clock;
    const auto t0 = Clock::now();
    SearchResult result;
    auto finish = [&](Outcome outcome) {
      result.outcome = outcome;
      result.nodes_created = generated_;
      result.max_stored_nodes = generated_;  // every generated cell sits in OPEN or CLOSED
      result.elapsed = Clock::now() - t0;
      return result;
    };

    const auto s = static_cast<std::int64_t>(grid_.index(start_));
    g_[s] = 0.0;
    ++generated_;
    push(start_);

    while (!open_.empty()) {
      if (params_.budget.max_expansions && result.nodes_expanded >= *params_.budget.max_expansions)
        return finish(Outcome::BudgetExhausted);
      if (params_.budget.max_time && Clock::now() - t0 > *params_.budget.max_time)
        return finish(Outcome::BudgetExhausted);

      const Entry top = open_.top();
      open_.pop();
      const std::size_t idx = grid_.index(top.cell);
      if (closed_[idx] || top.g != g_[idx]) continue;  // superseded entry

      if (top.cell == goal_) {
        std::vector<Cell> cells;
        for (std::int64_t k = static_cast<std::int64_t>(idx); k != kNone; k = parent_[k])
          cells.push_back(grid_.cell_at(static_cast<std::size_t>(k)));
        std::reverse(cells.begin(), cells.end());
        Path path = Path::through(cells);
        // Per-cell bookkeeping can leave stale angle context; such paths count as failures.
        if (!validate_path(grid_, path, start_, goal_, params_.alpha_max)) return finish(Outcome::NoPath);
        result.path = std::move(path);
        result.cost = top.g;
        return finish(Outcome::PathFound);
      }

      closed_[idx] = 1;
      ++result.nodes_expanded;
      for (Offset o : kNeighbours) {
        const Cell c = top.cell + o;
        if (!grid_.traversable(c) || closed_[grid_.index(c)]) continue;
        relax(top.cell, c);
      }
    }
    return finish(Outcome::NoPath);
  }

 private:
  std::int64_t idx(Cell c) const { return static_cast<std::int64_t>(grid_.index(c)); }
  Cell at(std::int64_t k) const { return grid_.cell_at(static_cast<std::size_t>(k)); }

  double len(Cell a, Cell b) const { return params_.use_weights ? weighted_len(grid_, a, b) : euclid_dist(a, b); }

  // Turn at `via` between <bp(via), via> and <via, to>; vacuous at the start.
  bool angle_ok(Cell via, Cell to) const {
    const std::int64_t bp = parent_[idx(via)];
    if (bp == kNone) return true;
    return angle_within(turn_angle(via - at(bp), to - via), params_.alpha_max);
  }

  void relax(Cell s, Cell c) {
    const std::int64_t p = parent_[idx(s)];
    const bool via_grandparent = p != kNone && line_of_sight_unchecked(grid_, at(p), c) && angle_ok(at(p), c);
    const bool via_parent = angle_ok(s, c);
    double candidate = std::numeric_limits<double>::infinity();
    Cell from = s;
    if (via_grandparent) {
      candidate = g_[p] + len(at(p), c);
      from = at(p);
    }
    // Weighted lengths break the triangle inequality, so the detour through s can be cheaper.
    if (via_parent && (!via_grandparent || params_.use_weights)) {
      const double through_s = g_[idx(s)] + len(s, c);
      if (through_s + 1e-9 < candidate) {
        candidate = through_s;
        from = s;
      }
    }
    if (candidate == std::numeric_limits<double>::infinity()) return;
    const std::int64_t k = idx(c);
    if (candidate < g_[k]) {
      if (g_[k] == std::numeric_limits<double>::infinity()) ++generated_;
      g_[k] = candidate;
      parent_[k] = idx(from);
      push(c);
    }
  }

  void push(Cell c) {
    const double g = g_[idx(c)];
    open_.push({g + params_.heuristic_weight * euclid_dist(c, goal_), g, c, seq_++});
  }

  const Grid& grid_;
  Cell start_;
  Cell goal_;
  const ThetaParams& params_;
  std::vector<double> g_;
  std::vector<std::int64_t> parent_;
  std::vector<std::uint8_t> closed_;
  std::priority_queue<Entry, std::vector<Entry>, WorseEntry> open_;
  std::uint64_t seq_ = 0;
  std::size_t generated_ = 0;
};

}  // namespace

SearchResult theta_la_search(const Grid& grid, Cell start, Cell goal, const ThetaParams& params) {
  params.validate();
  check_task(grid, start, goal);
  return ThetaLa(grid, start, goal, params).run();
}

}  // namespace lian
