#include "cech/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace cech {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string render_svg(const DiskSystem& system, double lambda, std::optional<Point2> witness,
                       const SvgStyle& style) {
  if (system.dimension() != 2) throw std::invalid_argument("only planar systems can be drawn");
  if (!(lambda >= 0.0)) throw std::invalid_argument("scale must be non-negative");

  double xmin = std::numeric_limits<double>::infinity();
  double ymin = xmin;
  double xmax = -xmin;
  double ymax = -xmin;
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Point2 c = system.center2(i);
    const double R = lambda * system.radius(i);
    xmin = std::min(xmin, c.x - R);
    xmax = std::max(xmax, c.x + R);
    ymin = std::min(ymin, c.y - R);
    ymax = std::max(ymax, c.y + R);
  }
  double extent = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double pad = style.margin * extent;
  xmin -= pad;
  ymin -= pad;
  xmax += pad;
  ymax += pad;
  extent = std::max(xmax - xmin, ymax - ymin);

  const double px = style.width_px / extent;
  const double height_px = (ymax - ymin) * px;
  const double dot = 0.006 * extent;
  const double stroke = 0.003 * extent;

  // Flip y so that the drawing uses mathematical orientation.
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(style.width_px * (xmax - xmin) / extent) +
         "\" height=\"" + num(height_px) + "\" viewBox=\"" + num(xmin) + " " + num(-ymax) + " " +
         num(xmax - xmin) + " " + num(ymax - ymin) + "\">\n";
  out += "<g transform=\"scale(1,-1)\">\n";
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Point2 c = system.center2(i);
    out += "  <circle class=\"disk\" cx=\"" + num(c.x) + "\" cy=\"" + num(c.y) + "\" r=\"" +
           num(lambda * system.radius(i)) + "\" fill=\"#4a7ab5\" fill-opacity=\"0.15\" stroke=\"#1f3f66\" stroke-width=\"" +
           num(stroke) + "\"/>\n";
  }
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Point2 c = system.center2(i);
    out += "  <circle class=\"center\" cx=\"" + num(c.x) + "\" cy=\"" + num(c.y) + "\" r=\"" +
           num(dot) + "\" fill=\"#000\"/>\n";
  }
  if (witness) {
    const double a = 2.0 * dot;
    const Point2 w = *witness;
    out += "  <path class=\"witness\" d=\"M" + num(w.x - a) + " " + num(w.y - a) + " L" +
           num(w.x + a) + " " + num(w.y + a) + " M" + num(w.x - a) + " " + num(w.y + a) + " L" +
           num(w.x + a) + " " + num(w.y - a) + "\" stroke=\"#c0392b\" stroke-width=\"" +
           num(2.0 * stroke) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace cech
