#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "cech/types.hpp"

namespace cech {

/// Ranges of the random instances used by the tests and the benchmark.
struct RandomSystemParams {
  double coord_min = 0.0;
  double coord_max = 10.0;
  double radius_min = 0.2;
  double radius_max = 3.0;
};

/// m disks in R^dim, centers uniform in the coordinate box, radii uniform.
DiskSystem random_system(std::size_t m, std::size_t dim, std::mt19937_64& rng,
                         const RandomSystemParams& params = {});

/// m uniform points in the square [coord_min, coord_max]^2.
std::vector<Point2> random_points(std::size_t m, std::mt19937_64& rng,
                                  const RandomSystemParams& params = {});

/// Random isometry of R^d applied to a whole system: a Householder product
/// (orthogonal, possibly a reflection) followed by a translation.
DiskSystem random_isometry(const DiskSystem& system, std::mt19937_64& rng);

}  // namespace cech
