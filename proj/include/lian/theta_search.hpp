#pragma once

#include <vector>

#include "lian/geometry.hpp"
#include "lian/grid.hpp"
#include "lian/search.hpp"

namespace lian {

/// Obstacle-proximity weighting: circles of radius `r` around every
/// obstacle boundary cell, ray cells weighted p * (1 + (1 - dist) / r).
struct WeightParams {
  double p = 0.1;  ///< max weighting penalty
  int r = 12;      ///< radius in cells

  void validate() const;
};

/// Blocked cells with at least one traversable 8-neighbour.
std::vector<Cell> obstacle_boundary(const Grid& grid);

/// Weight field for `grid`, one entry per cell in row-major order. Cells
/// touched by several rays keep the maximum candidate weight; blocked and
/// untouched cells get 0. Parallelised over boundary cells with OpenMP.
std::vector<double> compute_obstacle_weights(const Grid& grid, const WeightParams& params);

/// Single-threaded reference for compute_obstacle_weights.
std::vector<double> compute_obstacle_weights_serial(const Grid& grid, const WeightParams& params);

/// Copy of `grid` carrying the obstacle weight field.
Grid with_obstacle_weights(Grid grid, const WeightParams& params);

/// dist(a, b) * (1 + avgW), avgW being the mean weight over the Bresenham
/// line a-b including both endpoints. The caller has checked visibility.
double weighted_len(const Grid& grid, Cell a, Cell b);

struct ThetaParams {
  double alpha_max = 25.0;
  double heuristic_weight = 1.0;
  /// Use weighted_len for section costs (wTheta*-LA). The grid must carry
  /// the weight field already.
  bool use_weights = false;
  Budget budget;

  void validate() const;
};

/// Basic Theta* on the 8-connected grid with a turn-angle check on both the
/// grandparent shortcut and the plain parent edge. One g-value per cell, so
/// the search is incomplete under angle constraints.
SearchResult theta_la_search(const Grid& grid, Cell start, Cell goal, const ThetaParams& params);

}  // namespace lian
