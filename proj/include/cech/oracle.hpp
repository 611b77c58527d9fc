#pragma once

#include <cstddef>
#include <optional>

#include "cech/types.hpp"

namespace cech {

// Reference values for tests: the Čech scale as the min-max program
//   min over x of max_i |x - c_i| / r_i,
// solved without any of the solver's geometry. The objective is convex, so
// the minimum over y is a convex function of x and nested golden-section
// searches find the global minimum.

struct OracleResult {
  double scale = 0.0;
  Point2 minimizer;
  std::size_t iterations = 0;  // outer search steps
};

struct SearchBox {
  double xmin, xmax, ymin, ymax;
};

/// Searches `box` when given, otherwise the centers' bounding box padded by
/// the largest radius (the minimizer lies in the convex hull of the
/// centers). Throws std::invalid_argument for non-planar or empty systems.
OracleResult oracle_cech_scale(const DiskSystem& system,
                               const std::optional<SearchBox>& box = std::nullopt);

/// oracle_cech_scale(system).scale <= lambda + 1e-9.
bool oracle_feasible(const DiskSystem& system, double lambda);

/// Čech scale of three disks in R^d, d >= 2, minimizing over the affine
/// plane through their centers (an orthonormal basis built by Gram-Schmidt)
/// with the objective evaluated in R^d.
double oracle_cech_scale_triplet_dplane(const Disk& a, const Disk& b, const Disk& c);

}  // namespace cech
