#pragma once

#include <optional>
#include <string>

#include "cech/types.hpp"

namespace cech {

struct SvgStyle {
  double width_px = 600.0;
  double margin = 0.05;  // fraction of the drawing extent
};

/// SVG drawing of a planar system rescaled by lambda: one circle per disk,
/// a dot per center and, when given, a cross at the witness point. The y
/// axis points up.
std::string render_svg(const DiskSystem& system, double lambda,
                       std::optional<Point2> witness = std::nullopt, const SvgStyle& style = {});

}  // namespace cech
