#pragma once

#include <array>
#include <cstddef>

#include "cech/complex.hpp"
#include "cech/types.hpp"

namespace cech {

/// Three disks of R^d placed in the plane with the same pairwise center
/// distances and the same radii: c1 -> (0, 0), c2 on the positive x axis,
/// c3 in the closed upper half plane.
struct AffineTriple {
  DiskSystem planar_system{2};
  std::array<std::size_t, 3> source_indices{0, 1, 2};
};

/// Coincident centers map to coincident planar points.
AffineTriple affine_project(const Disk& a, const Disk& b, const Disk& c);
AffineTriple affine_project(const DiskSystem& system, std::size_t i, std::size_t j, std::size_t k);

/// Čech scale of three disks in R^d through their planar image.
double triplet_scale(const DiskSystem& system, std::size_t i, std::size_t j, std::size_t k,
                     double tolerance = kDefaultTolerance);

/// 2-skeleton of the Čech complex of a system in R^d, d >= 2, at scale
/// lambda. Edge weights are pair scales; triangle weights come from the
/// planar triplet solver on the projected triple. For d = 2 the result is
/// identical to build_complex(system, lambda, 2).
WeightedComplex two_skeleton(const DiskSystem& system, double lambda,
                             double tolerance = kDefaultTolerance);

}  // namespace cech
