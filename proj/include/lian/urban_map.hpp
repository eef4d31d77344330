#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lian/geometry.hpp"
#include "lian/grid.hpp"

namespace lian {

/// City-block style map: axis-aligned rectangular buildings separated by
/// streets of at least `street_width` free cells.
struct UrbanMapParams {
  int height = 128;
  int width = 128;
  double density = 0.25;  ///< target blocked fraction, in [0, 1)
  int min_size = 4;       ///< building side length range, cells
  int max_size = 16;
  int street_width = 2;
};

/// Places buildings until the blocked fraction reaches the target density
/// or placement stalls. Same seed and parameters give the same grid.
Grid generate_urban_map(std::uint64_t seed, const UrbanMapParams& params);

/// Uniform random obstacles: every cell is blocked with probability `density`.
Grid generate_random_grid(std::uint64_t seed, int height, int width, double density);

/// Thrown when task sampling cannot satisfy its constraints.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TaskSampling {
  std::size_t count = 5;
  /// Minimum start-goal distance as a fraction of the grid diagonal.
  double min_dist_fraction = 0.7;
  std::size_t max_attempts = 100000;
};

/// Samples distinct traversable start/goal pairs at least
/// `min_dist_fraction` of the diagonal apart. Throws SamplingError when
/// `max_attempts` draws are not enough.
std::vector<std::pair<Cell, Cell>> sample_tasks(const Grid& grid, std::uint64_t seed, const TaskSampling& sampling);

}  // namespace lian
