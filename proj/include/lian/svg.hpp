#pragma once

#include <optional>
#include <string>

#include "lian/geometry.hpp"
#include "lian/grid.hpp"

namespace lian {

struct SvgOptions {
  int cell_px = 10;
  bool angle_labels = false;  ///< print the turn angle at each interior vertex
  bool shade_weights = false; ///< tint cells by obstacle weight
};

/// Renders blocked cells as squares and the path as a polyline through cell
/// centers with start/goal markers. Column j maps to x, row i to y. Output
/// is byte-stable for a fixed input. Throws std::out_of_range if a path
/// vertex lies outside the grid.
std::string render_svg(const Grid& grid, const std::optional<Path>& path, const SvgOptions& options = {});

}  // namespace lian
