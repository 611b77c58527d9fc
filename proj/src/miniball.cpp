#include "cech/miniball.hpp"

#include <stdexcept>

namespace cech {

Ball miniball(std::span<const Point2> points, const SolverOptions& options) {
  if (points.empty()) throw std::invalid_argument("miniball of an empty point set");
  DiskSystem unit(2);
  for (const Point2& p : points) unit.add(p, 1.0);
  const ScaleResult s = cech_scale(unit, options);
  return {s.witness, s.cech_scale};
}

}  // namespace cech
