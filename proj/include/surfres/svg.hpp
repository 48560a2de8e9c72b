#pragma once

#include "surfres/newton.hpp"

#include <string>
#include <vector>

namespace surfres {

struct SvgOptions {
  std::string title;
  /// Extra points drawn hollow, e.g. the projected cloud.
  std::vector<Point2> marks;
  double pixels_per_unit = 120.0;
};

/// Standalone SVG document showing the staircase region, its compact edges
/// and vertices.
std::string render_svg(const Staircase& st, const SvgOptions& opts = {});

}  // namespace surfres
