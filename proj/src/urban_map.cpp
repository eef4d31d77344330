#include "lian/urban_map.hpp"

#include <cmath>
#include <random>
#include <string>

namespace lian {

Grid generate_urban_map(std::uint64_t seed, const UrbanMapParams& params) {
  if (!(params.density >= 0.0 && params.density < 1.0)) throw std::invalid_argument("density must lie in [0, 1)");
  if (params.min_size < 1 || params.max_size < params.min_size)
    throw std::invalid_argument("building size range must satisfy 1 <= min <= max");
  if (params.street_width < 0) throw std::invalid_argument("street width must be >= 0");

  Grid grid(params.height, params.width);
  if (params.density == 0.0) return grid;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> side(params.min_size, params.max_size);
  const auto target = static_cast<std::size_t>(std::ceil(params.density * static_cast<double>(grid.size())));
  std::size_t blocked = 0;
  const int gap = params.street_width;

  // Stall after this many consecutive rejected placements.
  constexpr int kMaxMisses = 2000;
  int misses = 0;
  while (blocked < target && misses < kMaxMisses) {
    const int h = side(rng);
    const int w = side(rng);
    const int i0 = std::uniform_int_distribution<int>(0, std::max(0, params.height - h))(rng);
    const int j0 = std::uniform_int_distribution<int>(0, std::max(0, params.width - w))(rng);
    const int i1 = std::min(i0 + h, params.height);
    const int j1 = std::min(j0 + w, params.width);

    bool clear = true;
    for (int i = std::max(0, i0 - gap); i < std::min(params.height, i1 + gap) && clear; ++i)
      for (int j = std::max(0, j0 - gap); j < std::min(params.width, j1 + gap) && clear; ++j)
        if (!grid.traversable({i, j})) clear = false;
    if (!clear) {
      ++misses;
      continue;
    }
    misses = 0;
    grid.block_rect(i0, j0, i1, j1);
    blocked += static_cast<std::size_t>(i1 - i0) * static_cast<std::size_t>(j1 - j0);
  }
  return grid;
}

Grid generate_random_grid(std::uint64_t seed, int height, int width, double density) {
  if (!(density >= 0.0 && density < 1.0)) throw std::invalid_argument("density must lie in [0, 1)");
  Grid grid(height, width);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  for (int i = 0; i < height; ++i)
    for (int j = 0; j < width; ++j)
      if (coin(rng)) grid.set_blocked({i, j}, true);
  return grid;
}

std::vector<std::pair<Cell, Cell>> sample_tasks(const Grid& grid, std::uint64_t seed, const TaskSampling& sampling) {
  const double diagonal = std::hypot(static_cast<double>(grid.height() - 1), static_cast<double>(grid.width() - 1));
  const double min_dist = sampling.min_dist_fraction * diagonal;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> row(0, grid.height() - 1);
  std::uniform_int_distribution<int> col(0, grid.width() - 1);

  std::vector<std::pair<Cell, Cell>> tasks;
  std::size_t attempts = 0;
  while (tasks.size() < sampling.count) {
    if (attempts++ >= sampling.max_attempts)
      throw SamplingError("could only sample " + std::to_string(tasks.size()) + " of " +
                          std::to_string(sampling.count) + " tasks with start-goal distance >= " +
                          std::to_string(min_dist));
    const Cell s{row(rng), col(rng)};
    const Cell g{row(rng), col(rng)};
    if (s == g || !grid.traversable(s) || !grid.traversable(g)) continue;
    if (euclid_dist(s, g) < min_dist) continue;
    tasks.emplace_back(s, g);
  }
  return tasks;
}

}  // namespace lian
