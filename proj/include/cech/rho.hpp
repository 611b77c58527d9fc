#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>

#include "cech/types.hpp"

namespace cech {

/// Value of rho at one scale, with the ordered pair (i, j) whose d_point
/// achieves the maximum and the disk k that bounds it from below.
struct RhoValue {
  double value;
  std::size_t i;
  std::size_t j;
  std::size_t k;
};

/// lambda * r_k - |d_point(i, j, lambda) - c_k|: positive inside the
/// rescaled disk k, negative outside. Requires a planar system, distinct
/// indices and lambda >= pair_scale(i, j).
double signed_distance(const DiskSystem& system, std::size_t i, std::size_t j, std::size_t k,
                       double lambda);

/// Precomputed rho evaluator for one planar system of at least three disks.
///
/// rho(lambda) is the maximum over ordered pairs (i, j), i != j, of the
/// minimum over the remaining k of signed_distance(i, j, k, lambda). It is
/// non-negative exactly when the system rescaled by lambda has a common
/// point, and is defined on [rips_scale, inf). Ties go to the lowest (i, j)
/// in lexicographic order, then the lowest k.
class RhoEvaluator {
 public:
  explicit RhoEvaluator(const DiskSystem& system, unsigned threads = 1);

  double rips_scale() const { return rips_; }
  const PlanarDisks& disks() const { return disks_; }

  /// Throws std::domain_error for lambda < rips_scale().
  RhoValue operator()(double lambda) const;

  /// The d_point of the maximizing pair; a common point when value >= 0.
  Point2 witness(const RhoValue& value, double lambda) const;

 private:
  PlanarDisks disks_;
  double rips_;
  unsigned threads_;
};

/// One-shot rho. Errors: fewer than three disks or non-planar system
/// (std::invalid_argument), lambda below the Rips scale (std::domain_error).
RhoValue rho(const DiskSystem& system, double lambda, unsigned threads = 1);

/// Three planar disks held by value, for the per-triplet hot loop.
struct PlanarTriple {
  std::array<Point2, 3> c;
  std::array<double, 3> r;

  static PlanarTriple from(const DiskSystem& system, std::size_t a, std::size_t b,
                           std::size_t c);
  static PlanarTriple from(const PlanarDisks& disks, std::size_t a, std::size_t b,
                           std::size_t c);
  double pair_scale(std::size_t a, std::size_t b) const;
  double rips_scale() const;
};

/// rho of a triple; same arithmetic and tie rules as RhoEvaluator, so the
/// two agree exactly. No domain check.
RhoValue rho_triple(const PlanarTriple& triple, double lambda);

/// Bisection for a sign change of f on [lo, hi]. Requires f(lo) <= 0 <=
/// f(hi); returns lo when f(lo) == 0, otherwise the upper end of a bracket
/// of width <= tol (or of adjacent doubles) whose upper end has f >= 0.
template <class F>
double bisection_root(F&& f, double lo, double hi, double tol = kDefaultTolerance) {
  if (!(lo < hi)) throw std::invalid_argument("bisection needs lo < hi");
  const double flo = f(lo);
  if (flo == 0.0) return lo;
  if (!(flo < 0.0) || !(f(hi) >= 0.0)) throw std::domain_error("no root bracketed");
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) break;
    if (f(mid) >= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace cech
