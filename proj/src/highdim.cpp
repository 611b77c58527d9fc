#include "cech/highdim.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>

#include "cech/geometry.hpp"
#include "cech/kernels.hpp"
#include "cech/rho.hpp"
#include "cech/solver.hpp"

namespace cech {

AffineTriple affine_project(const Disk& a, const Disk& b, const Disk& c) {
  const std::size_t d = a.dimension();
  if (b.dimension() != d || c.dimension() != d) {
    throw std::invalid_argument("disks differ in dimension");
  }
  if (d < 2) throw std::invalid_argument("affine_project needs dimension >= 2");

  const auto g = kernels::active().difference_gram(a.center().data(), b.center().data(),
                                                   c.center().data(), d);
  const double lab = std::sqrt(g.aa);
  const double lac = std::sqrt(g.bb);

  Point2 third{lac, 0.0};
  if (lab > 0.0 && lac > 0.0) {
    const double cos_t = std::clamp(g.ab / (lab * lac), -1.0, 1.0);
    const double sin_t = std::sqrt(1.0 - cos_t * cos_t);
    third = {lac * cos_t, lac * sin_t};
  }

  AffineTriple out;
  out.planar_system.add(Point2{0.0, 0.0}, a.radius());
  out.planar_system.add(Point2{lab, 0.0}, b.radius());
  out.planar_system.add(third, c.radius());
  return out;
}

AffineTriple affine_project(const DiskSystem& system, std::size_t i, std::size_t j,
                            std::size_t k) {
  AffineTriple out = affine_project(system.disk(i), system.disk(j), system.disk(k));
  out.source_indices = {i, j, k};
  return out;
}

double triplet_scale(const DiskSystem& system, std::size_t i, std::size_t j, std::size_t k,
                     double tolerance) {
  if (system.dimension() == 2) {
    return cech_scale_triplet(PlanarTriple::from(system, i, j, k), tolerance).cech_scale;
  }
  const AffineTriple t = affine_project(system, i, j, k);
  return cech_scale_triplet(PlanarTriple::from(t.planar_system, 0, 1, 2), tolerance).cech_scale;
}

WeightedComplex two_skeleton(const DiskSystem& system, double lambda, double tolerance) {
  if (system.dimension() < 2) throw std::invalid_argument("two_skeleton needs dimension >= 2");
  if (system.dimension() == 2) return build_complex(system, lambda, 2, tolerance);
  if (!(lambda >= 0.0)) throw std::invalid_argument("scale must be non-negative");
  if (!system.all_radii_positive()) throw std::invalid_argument("radii must be positive");

  const std::size_t m = system.size();
  WeightedComplex out(2);
  std::vector<std::vector<std::size_t>> lower(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.insert(Simplex{i}, 0.0);
    lower[i] = lower_nbrs(system, i, lambda);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j : lower[i]) out.insert(Simplex{j, i}, pair_scale(system, j, i));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j : lower[i]) {
      std::vector<std::size_t> common;
      std::set_intersection(lower[i].begin(), lower[i].end(), lower[j].begin(), lower[j].end(),
                            std::back_inserter(common));
      for (std::size_t k : common) {
        // The projected distances can differ from the R^d ones in the last
        // bit; keep the weight monotone over the stored edges.
        const double w = std::max({triplet_scale(system, k, j, i, tolerance),
                                   *out.weight(Simplex{k, j}), *out.weight(Simplex{k, i}),
                                   *out.weight(Simplex{j, i})});
        if (w <= lambda) out.insert(Simplex{k, j, i}, w);
      }
    }
  }
  return out;
}

}  // namespace cech
