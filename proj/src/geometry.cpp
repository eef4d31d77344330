#include "lian/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lian {

double euclid_dist(Cell a, Cell b) {
  const double di = static_cast<double>(b.i) - a.i;
  const double dj = static_cast<double>(b.j) - a.j;
  return std::sqrt(di * di + dj * dj);
}

std::vector<Cell> bresenham_line(Cell a, Cell b) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(std::max(std::abs(b.i - a.i), std::abs(b.j - a.j))) + 1);
  trace_line(a, b, [&](Cell c) {
    cells.push_back(c);
    return true;
  });
  if (cells.front() != a) std::reverse(cells.begin(), cells.end());
  return cells;
}

std::vector<Offset> circle_offsets(int radius) {
  if (radius < 1) throw std::invalid_argument("circle radius must be >= 1, got " + std::to_string(radius));
  std::vector<Offset> out;
  auto plot8 = [&](int x, int y) {
    out.push_back({x, y});
    out.push_back({y, x});
    out.push_back({-y, x});
    out.push_back({-x, y});
    out.push_back({-x, -y});
    out.push_back({-y, -x});
    out.push_back({y, -x});
    out.push_back({x, -y});
  };
  int x = radius;
  int y = 0;
  int d = 1 - radius;
  while (x >= y) {
    plot8(x, y);
    ++y;
    if (d < 0) {
      d += 2 * y + 1;
    } else {
      --x;
      d += 2 * (y - x) + 1;
    }
  }
  auto less = [](Offset a, Offset b) { return a.di != b.di ? a.di < b.di : a.dj < b.dj; };
  std::sort(out.begin(), out.end(), less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Cell> midpoint_circle(Cell center, int radius) {
  std::vector<Cell> cells;
  for (Offset o : circle_offsets(radius)) cells.push_back(center + o);
  return cells;
}

double turn_angle(Offset u, Offset v) {
  const double dot = static_cast<double>(u.di) * v.di + static_cast<double>(u.dj) * v.dj;
  // One sqrt of the exact integer product: parallel vectors give exactly +-1.
  const double nu2 = static_cast<double>(u.di) * u.di + static_cast<double>(u.dj) * u.dj;
  const double nv2 = static_cast<double>(v.di) * v.di + static_cast<double>(v.dj) * v.dj;
  const double c = std::clamp(dot / std::sqrt(nu2 * nv2), -1.0, 1.0);
  return std::acos(c) * 180.0 / std::numbers::pi;
}

double turn_angle(const Section& e1, const Section& e2) {
  if (e1.tail == e1.head || e2.tail == e2.head)
    throw std::invalid_argument("turn angle undefined for a zero-length section");
  if (e1.head != e2.tail) throw std::invalid_argument("turn angle requires adjacent sections");
  return turn_angle(e1.vector(), e2.vector());
}

Path Path::through(const std::vector<Cell>& cells) {
  if (cells.size() < 2) throw std::invalid_argument("a path needs at least two cells");
  Path p;
  p.sections.reserve(cells.size() - 1);
  for (std::size_t k = 1; k < cells.size(); ++k) p.sections.push_back({cells[k - 1], cells[k]});
  return p;
}

std::vector<Cell> Path::cells() const {
  std::vector<Cell> out;
  if (sections.empty()) return out;
  out.reserve(sections.size() + 1);
  out.push_back(sections.front().tail);
  for (const Section& s : sections) out.push_back(s.head);
  return out;
}

double path_length(const Path& path) {
  if (path.empty()) throw std::invalid_argument("path has no sections");
  double total = 0.0;
  for (const Section& s : path.sections) total += s.length();
  return total;
}

double max_turn_angle(const Path& path) {
  if (path.empty()) throw std::invalid_argument("path has no sections");
  double worst = 0.0;
  for (std::size_t k = 1; k < path.sections.size(); ++k)
    worst = std::max(worst, turn_angle(path.sections[k - 1], path.sections[k]));
  return worst;
}

}  // namespace lian
