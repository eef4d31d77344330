#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lian/geometry.hpp"
#include "lian/grid.hpp"

namespace lian {

enum class Outcome { PathFound, NoPath, BudgetExhausted };

std::string_view to_string(Outcome outcome);

/// Thrown when a start/goal pair cannot be searched on the given grid.
class InvalidTask : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Search limits checked once per iteration of the main loop.
struct Budget {
  std::optional<std::size_t> max_expansions;
  std::optional<std::chrono::duration<double>> max_time;
};

/// Parameters for dynamic Delta adjustment.
struct DynamicDelta {
  int delta_min = 1;
  int delta_max = 1;
  int n_increase = 2;

  /// Published bindings: min = init/2, max = init, n = 2.
  static DynamicDelta from_initial(int delta_init) { return {std::max(1, delta_init / 2), delta_init, 2}; }
};

struct SearchParams {
  double alpha_max = 25.0;          ///< degrees, 0 < alpha_max < 180
  int delta = 5;                    ///< fixed Delta, or the initial one when `dynamic` is set
  double heuristic_weight = 1.0;    ///< f = g + w * h
  std::optional<DynamicDelta> dynamic;
  Budget budget;

  /// Throws std::invalid_argument when any field is out of range.
  void validate() const;
};

/// Node as seen by search observers.
struct NodeEvent {
  std::int64_t id = -1;
  std::int64_t parent_id = -1;  ///< -1 for the start node
  Cell cell;
  std::optional<Cell> parent_cell;
  double g = 0.0;
  double f = 0.0;
  int delta = 0;          ///< Delta this node will expand with
  int section_delta = 0;  ///< Delta used to generate this node (0 for start)
};

/// Optional instrumentation; unset callbacks cost one branch each.
struct SearchHooks {
  std::function<void(const NodeEvent&)> on_push;
  std::function<void(const NodeEvent&)> on_expand;
};

struct SearchResult {
  Outcome outcome = Outcome::NoPath;
  std::optional<Path> path;
  /// Delta that generated each section of `path` (LIAN family only).
  std::vector<int> section_deltas;
  double cost = 0.0;  ///< g of the goal node (weighted length for wTheta*)
  std::size_t nodes_created = 0;
  std::size_t nodes_expanded = 0;
  std::size_t max_stored_nodes = 0;  ///< peak |OPEN| + |CLOSED|
  std::chrono::duration<double> elapsed{0.0};

  bool found() const { return outcome == Outcome::PathFound; }
  double length() const { return path ? path_length(*path) : 0.0; }
};

/// Result of checking a path against the planning constraints.
struct PathCheck {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Verifies endpoints, adjacency, per-section line-of-sight and the
/// maximum angle of alteration.
PathCheck validate_path(const Grid& grid, const Path& path, Cell start, Cell goal, double alpha_max);

/// Throws InvalidTask unless start and goal are distinct traversable cells.
void check_task(const Grid& grid, Cell start, Cell goal);

}  // namespace lian
