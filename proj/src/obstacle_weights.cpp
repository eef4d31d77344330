#include "lian/theta_search.hpp"

#include <algorithm>
#include <stdexcept>

namespace lian {

void WeightParams::validate() const {
  if (!(p > 0.0)) throw std::invalid_argument("weight penalty p must be > 0");
  if (r < 1) throw std::invalid_argument("weight radius r must be >= 1");
}

std::vector<Cell> obstacle_boundary(const Grid& grid) {
  std::vector<Cell> out;
  for (int i = 0; i < grid.height(); ++i) {
    for (int j = 0; j < grid.width(); ++j) {
      const Cell c{i, j};
      if (grid.traversable(c)) continue;
      bool fringe = false;
      for (int di = -1; di <= 1 && !fringe; ++di)
        for (int dj = -1; dj <= 1 && !fringe; ++dj)
          if ((di != 0 || dj != 0) && grid.traversable({i + di, j + dj})) fringe = true;
      if (fringe) out.push_back(c);
    }
  }
  return out;
}

namespace {

// Raises `field` to the weights cast by one boundary cell.
void stamp(const Grid& grid, const WeightParams& params, std::span<const Offset> ring, Cell center,
           std::vector<double>& field) {
  for (Offset o : ring) {
    trace_line(center, center + o, [&](Cell c) {
      if (grid.traversable(c)) {
        const double w = params.p * (1.0 + (1.0 - euclid_dist(center, c)) / params.r);
        double& slot = field[grid.index(c)];
        slot = std::max(slot, w);
      }
      return true;
    });
  }
}

}  // namespace

std::vector<double> compute_obstacle_weights_serial(const Grid& grid, const WeightParams& params) {
  params.validate();
  const auto ring = circle_offsets(params.r);
  std::vector<double> field(grid.size(), 0.0);
  for (Cell c : obstacle_boundary(grid)) stamp(grid, params, ring, c, field);
  return field;
}

std::vector<double> compute_obstacle_weights(const Grid& grid, const WeightParams& params) {
  params.validate();
  const auto ring = circle_offsets(params.r);
  const auto boundary = obstacle_boundary(grid);
  const auto count = static_cast<long>(boundary.size());
  std::vector<double> field(grid.size(), 0.0);

#pragma omp parallel
  {
    std::vector<double> local(grid.size(), 0.0);
#pragma omp for schedule(dynamic, 16)
    for (long k = 0; k < count; ++k) stamp(grid, params, ring, boundary[static_cast<std::size_t>(k)], local);
#pragma omp critical(lian_weight_merge)
    for (std::size_t idx = 0; idx < field.size(); ++idx) field[idx] = std::max(field[idx], local[idx]);
  }
  return field;
}

Grid with_obstacle_weights(Grid grid, const WeightParams& params) {
  grid.set_weights(compute_obstacle_weights(grid, params));
  return grid;
}

double weighted_len(const Grid& grid, Cell a, Cell b) {
  double sum = 0.0;
  std::size_t count = 0;
  trace_line(a, b, [&](Cell c) {
    sum += grid.in_bounds(c) ? grid.weight(c) : 0.0;
    ++count;
    return true;
  });
  return euclid_dist(a, b) * (1.0 + sum / static_cast<double>(count));
}

}  // namespace lian
