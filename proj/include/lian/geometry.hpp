#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <utility>
#include <vector>

namespace lian {

/// Grid cell addressed by row `i` and column `j`.
struct Cell {
  int i = 0;
  int j = 0;

  friend constexpr bool operator==(const Cell&, const Cell&) = default;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// Integer displacement between two cells, (row delta, column delta).
struct Offset {
  int di = 0;
  int dj = 0;

  friend constexpr bool operator==(const Offset&, const Offset&) = default;
};

constexpr Offset operator-(Cell head, Cell tail) { return {head.i - tail.i, head.j - tail.j}; }
constexpr Cell operator+(Cell c, Offset o) { return {c.i + o.di, c.j + o.dj}; }

double euclid_dist(Cell a, Cell b);

/// Visits the Bresenham rasterization of a-b, endpoints included.
///
/// Tracing always starts at the lexicographically smaller endpoint so the
/// visited cells do not depend on argument order. `visit` returns false to
/// stop early; the return value tells whether the whole line was visited.
template <class Visit>
bool trace_line(Cell a, Cell b, Visit&& visit) {
  if (b < a) std::swap(a, b);
  const int di = b.i - a.i;  // >= 0 after canonical ordering
  const int dj = b.j - a.j;
  const int adj = std::abs(dj);
  const int sj = dj < 0 ? -1 : 1;
  int i = a.i;
  int j = a.j;
  if (di >= adj) {
    int err = 2 * adj - di;
    for (int k = 0; k <= di; ++k) {
      if (!visit(Cell{i, j})) return false;
      if (err > 0) {
        j += sj;
        err -= 2 * di;
      }
      err += 2 * adj;
      ++i;
    }
  } else {
    int err = 2 * di - adj;
    for (int k = 0; k <= adj; ++k) {
      if (!visit(Cell{i, j})) return false;
      if (err > 0) {
        ++i;
        err -= 2 * adj;
      }
      err += 2 * di;
      j += sj;
    }
  }
  return true;
}

/// Bresenham rasterization of a-b ordered from a to b. The cell set is
/// identical for (a, b) and (b, a).
std::vector<Cell> bresenham_line(Cell a, Cell b);

/// Midpoint-circle rasterization of radius `radius` around the origin as
/// offsets, duplicates removed, sorted lexicographically. Throws
/// std::invalid_argument for radius < 1.
std::vector<Offset> circle_offsets(int radius);

/// CIRCLE(center, radius). Cells may lie outside any particular grid.
std::vector<Cell> midpoint_circle(Cell center, int radius);

/// Angle in degrees in [0, 180] between two nonzero displacement vectors.
double turn_angle(Offset u, Offset v);

/// Angle comparisons accept anything within this slack of the bound.
inline constexpr double kAngleSlackDeg = 1e-9;

inline bool angle_within(double angle_deg, double bound_deg) {
  return angle_deg <= bound_deg + kAngleSlackDeg;
}

/// Ordered pair of cells.
struct Section {
  Cell tail;
  Cell head;

  double length() const { return euclid_dist(tail, head); }
  Offset vector() const { return head - tail; }

  friend bool operator==(const Section&, const Section&) = default;
};

/// Angle of alteration between adjacent sections. Throws
/// std::invalid_argument if either section has zero length or the sections
/// do not share the middle cell.
double turn_angle(const Section& e1, const Section& e2);

/// Chain of adjacent sections.
struct Path {
  std::vector<Section> sections;

  /// Builds the section chain through `cells` (at least two cells).
  static Path through(const std::vector<Cell>& cells);

  /// Vertex list: first tail followed by every head.
  std::vector<Cell> cells() const;
  bool empty() const { return sections.empty(); }
  Cell start() const { return sections.front().tail; }
  Cell goal() const { return sections.back().head; }
};

/// Sum of section lengths. Throws std::invalid_argument on an empty path.
double path_length(const Path& path);

/// Maximum angle of alteration over consecutive sections; 0 for a single
/// section. Throws std::invalid_argument on an empty path.
double max_turn_angle(const Path& path);

}  // namespace lian

template <>
struct std::hash<lian::Cell> {
  std::size_t operator()(const lian::Cell& c) const noexcept {
    return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.i)) << 32) |
                                      static_cast<std::uint32_t>(c.j));
  }
};
