#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lian/geometry.hpp"

namespace lian {

/// Occupancy grid of `height` x `width` cells with an optional non-negative
/// per-cell weight field (all zero unless obstacle weighting was applied).
class Grid {
 public:
  Grid(int height, int width);

  int height() const { return height_; }
  int width() const { return width_; }
  std::size_t size() const { return blocked_.size(); }

  bool in_bounds(Cell c) const { return c.i >= 0 && c.j >= 0 && c.i < height_ && c.j < width_; }
  std::size_t index(Cell c) const { return static_cast<std::size_t>(c.i) * width_ + c.j; }
  Cell cell_at(std::size_t index) const {
    return {static_cast<int>(index / width_), static_cast<int>(index % width_)};
  }

  /// Out-of-bounds cells are reported as not traversable.
  bool traversable(Cell c) const { return in_bounds(c) && !blocked_[index(c)]; }
  /// Throws std::out_of_range for cells outside the grid.
  bool blocked(Cell c) const;
  void set_blocked(Cell c, bool value);
  /// Blocks every in-bounds cell of the half-open rectangle [i0,i1) x [j0,j1).
  void block_rect(int i0, int j0, int i1, int j1);

  std::size_t traversable_count() const;

  double weight(Cell c) const { return weights_[index(c)]; }
  std::span<const double> weights() const { return weights_; }
  /// Replaces the weight field; throws std::invalid_argument on a size
  /// mismatch or a negative entry.
  void set_weights(std::vector<double> weights);
  bool has_weights() const;

  friend bool operator==(const Grid& a, const Grid& b) = default;

 private:
  int height_;
  int width_;
  std::vector<std::uint8_t> blocked_;
  std::vector<double> weights_;
};

/// True iff every cell on the Bresenham line a-b is traversable. Symmetric.
/// Throws std::out_of_range if either endpoint is outside the grid.
bool line_of_sight(const Grid& grid, Cell a, Cell b);

/// line_of_sight without the bounds check on endpoints; out-of-bounds cells
/// simply count as blocked.
inline bool line_of_sight_unchecked(const Grid& grid, Cell a, Cell b) {
  return trace_line(a, b, [&](Cell c) { return grid.traversable(c); });
}

}  // namespace lian
