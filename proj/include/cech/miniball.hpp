#pragma once

#include <span>

#include "cech/solver.hpp"
#include "cech/types.hpp"

namespace cech {

struct Ball {
  Point2 center;
  double radius = 0.0;
};

/// Smallest enclosing circle of a planar point cloud, obtained as the Čech
/// scale and witness of unit disks centered at the points. Throws
/// std::invalid_argument on empty input.
///
/// This does not generalize to mixed radii: the Čech scale of a disk system
/// is in general not a function of the enclosing ball of its centers.
Ball miniball(std::span<const Point2> points, const SolverOptions& options = {});

}  // namespace cech
