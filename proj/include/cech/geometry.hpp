#pragma once

#include <cmath>
#include <cstddef>
#include <optional>

#include "cech/types.hpp"

namespace cech {

/// sqrt(2d/(d+1)): a pairwise-intersecting system rescaled by this factor
/// has a common point. sqrt(4/3) in the plane.
double rips_bound_factor(std::size_t dimension);
inline const double kPlanarRipsFactor = std::sqrt(4.0 / 3.0);

/// Same centers and order, every radius multiplied by lambda (lambda >= 0).
DiskSystem rescale(const DiskSystem& system, double lambda);

/// |c_i - c_j| / (r_i + r_j): the smallest scale at which the two disks meet.
double pair_scale(const Disk& a, const Disk& b);
double pair_scale(const DiskSystem& system, std::size_t i, std::size_t j);

/// Largest pair scale over all unordered pairs; 0 for a single disk.
double rips_scale(const DiskSystem& system);

/// |c_i - c_j| / |r_i - r_j|, the scale from which one disk contains the
/// other. nullopt ("never") for equal radii and distinct centers; 0 for
/// concentric disks.
std::optional<double> containment_scale(const Disk& a, const Disk& b);

/// The boundary intersection point of the two disks rescaled by lambda that
/// lies on the left of the directed segment c_a -> c_b. Past the containment
/// scale the point stays at the internal tangency point; concentric disks
/// give the common center. Order matters: d_point(a, b) and d_point(b, a)
/// are the two crossings.
///
/// Throws std::invalid_argument unless both disks are planar, and
/// std::domain_error when lambda is below pair_scale(a, b).
Point2 d_point(const Disk& a, const Disk& b, double lambda);

namespace detail {

/// d_point without validation; lambda >= pair scale is the caller's job.
Point2 d_point(Point2 ci, double ri, Point2 cj, double rj, double lambda);

}  // namespace detail
}  // namespace cech
