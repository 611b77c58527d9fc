#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cech/rho.hpp"
#include "cech/types.hpp"

namespace cech {

enum class ScaleStatus {
  RipsEqualsCech,  // rho(rips scale) >= 0, no bisection needed
  RootFound,       // the scale is a root of rho
};

struct ScaleResult {
  double cech_scale = 0.0;
  Point2 witness;  // the single common point at cech_scale
  double rips_scale = 0.0;
  int bisection_calls = 0;
  ScaleStatus status = ScaleStatus::RipsEqualsCech;
};

struct SolverOptions {
  double tolerance = kDefaultTolerance;
  unsigned threads = 1;  // 0: one per hardware thread
  bool prune = true;     // skip triplets whose upper bound cannot raise the maximum
};

/// Exactly three planar disks. One bisection at most: rho has a single root
/// on [rips, sqrt(4/3) rips] whenever it is negative at the Rips scale.
ScaleResult cech_scale_triplet(const DiskSystem& triple, const SolverOptions& options = {});
ScaleResult cech_scale_triplet(const PlanarTriple& triple, double tolerance = kDefaultTolerance);

/// Bisects rho over the whole system and re-brackets whenever the root it
/// lands on still leaves more than one candidate common point.
ScaleResult cech_scale_naive(const DiskSystem& system, const SolverOptions& options = {});

/// Čech scale as the maximum of the triplet scales (Helly in the plane).
/// Parallel over the first triplet index when options.threads != 1; the
/// result does not depend on the thread count.
ScaleResult cech_scale(const DiskSystem& system, const SolverOptions& options = {});

/// Slack allowed when testing whether a point lies in a rescaled disk of
/// radius R: |p - c| <= R + kMembershipSlack * (1 + R).
inline constexpr double kMembershipSlack = 1e-9;

/// Points closer than this count as one witness candidate.
inline constexpr double kClusterRadius = 1e-7;

bool is_common_point(const DiskSystem& system, Point2 p, double lambda);

/// d_points of all ordered pairs at lambda that lie in every rescaled disk.
std::vector<Point2> intersection_points(const DiskSystem& system, double lambda);

/// Greedy clustering in input order: a point joins the first cluster whose
/// first member is within `radius`.
std::vector<std::vector<Point2>> cluster_points(std::span<const Point2> points,
                                                double radius = kClusterRadius);

namespace detail {

/// Bisection on a bracket already known to satisfy f(lo) < 0 <= f(hi).
template <class F>
double bisect_bracketed(F&& f, double lo, double hi, double tol) {
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

struct RefinedRoot {
  double scale;
  int bisection_calls;
  bool unique;  // false when the search gave up with several candidates left
};

/// Root search of the naive solver: bisect on [lo, hi]; while the root
/// leaves more than one witness cluster, find a scale in (lo, root) with
/// f > 0 on grids of 32, 64, ... interior points and bisect again below it.
/// Requires f(lo) < 0 <= f(hi).
template <class F, class ClusterCount>
RefinedRoot refine_root(F&& f, ClusterCount&& cluster_count, double lo, double hi, double tol) {
  constexpr int kMaxRounds = 64;
  constexpr std::size_t kFirstGrid = 32;
  constexpr std::size_t kLastGrid = std::size_t{1} << 16;

  RefinedRoot out{hi, 0, false};
  for (int round = 0; round < kMaxRounds; ++round) {
    out.scale = bisect_bracketed(f, lo, hi, tol);
    ++out.bisection_calls;
    if (cluster_count(out.scale) <= 1) {
      out.unique = true;
      return out;
    }
    if (out.scale - lo <= tol) return out;

    double positive = -1.0;
    for (std::size_t n = kFirstGrid; n <= kLastGrid && positive < 0.0; n *= 2) {
      for (std::size_t t = 1; t <= n; ++t) {
        const double lambda = lo + (out.scale - lo) * static_cast<double>(t) /
                                       static_cast<double>(n + 1);
        if (f(lambda) > 0.0) {
          positive = lambda;
          break;
        }
      }
    }
    if (positive < 0.0) return out;
    hi = positive;
  }
  return out;
}

}  // namespace detail
}  // namespace cech
