#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "lian/geometry.hpp"
#include "lian/grid.hpp"

namespace lian {

/// Thrown when a grid exceeds the brute-force oracle's size bound.
class OracleRefused : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultOracleMaxCells = 32 * 32;

/// Length of the shortest Delta-solution from start to goal, or nullopt if
/// none exists.
///
/// Exhaustive Dijkstra over (cell, predecessor) states: an edge (a, b) ->
/// (b, c) exists when c lies on CIRCLE(b, delta) (or c is the goal and
/// dist(b, goal) < delta), b-c is visible and the turn at b is within
/// alpha_max (unconstrained from the start). Intended for small grids only;
/// throws OracleRefused above `max_cells` cells.
std::optional<double> oracle_delta_search(const Grid& grid, Cell start, Cell goal, int delta, double alpha_max,
                                          std::size_t max_cells = kDefaultOracleMaxCells);

}  // namespace lian
