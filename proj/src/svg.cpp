#include "lian/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace lian {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Grid& grid, const std::optional<Path>& path, const SvgOptions& options) {
  const int cs = options.cell_px;
  if (cs < 1) throw std::invalid_argument("cell size must be positive");
  std::vector<Cell> vertices;
  if (path) {
    vertices = path->cells();
    for (Cell c : vertices)
      if (!grid.in_bounds(c))
        throw std::out_of_range("path vertex (" + std::to_string(c.i) + "," + std::to_string(c.j) + ") outside grid");
  }

  const int w = grid.width() * cs;
  const int h = grid.height() * cs;
  auto cx = [&](Cell c) { return c.j * cs + cs / 2.0; };
  auto cy = [&](Cell c) { return c.i * cs + cs / 2.0; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
      << ' ' << h << "\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h
      << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";

  if (options.shade_weights && grid.has_weights()) {
    out << "  <g id=\"weights\" fill=\"orange\" stroke=\"none\">\n";
    double top = 0.0;
    for (double v : grid.weights()) top = std::max(top, v);
    for (int i = 0; i < grid.height(); ++i)
      for (int j = 0; j < grid.width(); ++j)
        if (const double v = grid.weight({i, j}); v > 0.0)
          out << "    <rect x=\"" << j * cs << "\" y=\"" << i * cs << "\" width=\"" << cs << "\" height=\"" << cs
              << "\" fill-opacity=\"" << num(0.6 * v / top) << "\"/>\n";
    out << "  </g>\n";
  }

  out << "  <g id=\"obstacles\" fill=\"#404040\" stroke=\"none\">\n";
  for (int i = 0; i < grid.height(); ++i)
    for (int j = 0; j < grid.width(); ++j)
      if (!grid.traversable({i, j}))
        out << "    <rect x=\"" << j * cs << "\" y=\"" << i * cs << "\" width=\"" << cs << "\" height=\"" << cs
            << "\"/>\n";
  out << "  </g>\n";

  if (path) {
    out << "  <polyline id=\"path\" fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"" << num(cs / 4.0)
        << "\" stroke-linejoin=\"round\" points=\"";
    for (std::size_t k = 0; k < vertices.size(); ++k)
      out << (k ? " " : "") << num(cx(vertices[k])) << ',' << num(cy(vertices[k]));
    out << "\"/>\n";
    const double r = cs * 0.4;
    out << "  <circle id=\"start\" cx=\"" << num(cx(vertices.front())) << "\" cy=\"" << num(cy(vertices.front()))
        << "\" r=\"" << num(r) << "\" fill=\"#2ca02c\"/>\n";
    out << "  <circle id=\"goal\" cx=\"" << num(cx(vertices.back())) << "\" cy=\"" << num(cy(vertices.back()))
        << "\" r=\"" << num(r) << "\" fill=\"#d62728\"/>\n";
    if (options.angle_labels) {
      out << "  <g id=\"angles\" font-family=\"monospace\" font-size=\"" << num(cs * 0.9) << "\" fill=\"black\">\n";
      for (std::size_t k = 1; k < path->sections.size(); ++k) {
        const Cell v = path->sections[k].tail;
        const double a = turn_angle(path->sections[k - 1], path->sections[k]);
        const double y = std::max(cy(v) - cs * 0.6, cs * 0.9);  // keep labels on the canvas
        out << "    <text x=\"" << num(cx(v) + cs * 0.6) << "\" y=\"" << num(y) << "\">" << num(a)
            << "&#176;</text>\n";
      }
      out << "  </g>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace lian
