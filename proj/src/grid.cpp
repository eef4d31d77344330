#include "lian/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lian {

namespace {

std::string describe(Cell c) { return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")"; }

}  // namespace

Grid::Grid(int height, int width) : height_(height), width_(width) {
  if (height < 1 || width < 1)
    throw std::invalid_argument("grid dimensions must be positive, got " + std::to_string(height) + "x" +
                                std::to_string(width));
  const auto n = static_cast<std::size_t>(height) * static_cast<std::size_t>(width);
  blocked_.assign(n, 0);
  weights_.assign(n, 0.0);
}

bool Grid::blocked(Cell c) const {
  if (!in_bounds(c)) throw std::out_of_range("cell " + describe(c) + " outside grid");
  return blocked_[index(c)] != 0;
}

void Grid::set_blocked(Cell c, bool value) {
  if (!in_bounds(c)) throw std::out_of_range("cell " + describe(c) + " outside grid");
  blocked_[index(c)] = value ? 1 : 0;
}

void Grid::block_rect(int i0, int j0, int i1, int j1) {
  for (int i = std::max(i0, 0); i < std::min(i1, height_); ++i)
    for (int j = std::max(j0, 0); j < std::min(j1, width_); ++j) blocked_[index({i, j})] = 1;
}

std::size_t Grid::traversable_count() const {
  return static_cast<std::size_t>(std::count(blocked_.begin(), blocked_.end(), std::uint8_t{0}));
}

void Grid::set_weights(std::vector<double> weights) {
  if (weights.size() != blocked_.size()) throw std::invalid_argument("weight field size does not match grid");
  if (std::any_of(weights.begin(), weights.end(), [](double w) { return !(w >= 0.0); }))
    throw std::invalid_argument("weights must be non-negative");
  weights_ = std::move(weights);
}

bool Grid::has_weights() const {
  return std::any_of(weights_.begin(), weights_.end(), [](double w) { return w != 0.0; });
}

bool line_of_sight(const Grid& grid, Cell a, Cell b) {
  if (!grid.in_bounds(a)) throw std::out_of_range("line-of-sight endpoint " + describe(a) + " outside grid");
  if (!grid.in_bounds(b)) throw std::out_of_range("line-of-sight endpoint " + describe(b) + " outside grid");
  return line_of_sight_unchecked(grid, a, b);
}

}  // namespace lian
