#include "cech/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cech/geometry.hpp"
#include "cech/kernels.hpp"
#include "cech/parallel.hpp"

namespace cech {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_planar(const DiskSystem& system) {
  if (system.dimension() != 2) {
    throw std::invalid_argument("the Čech solvers handle planar systems only");
  }
  if (system.empty()) throw std::invalid_argument("empty disk system");
  if (!system.all_radii_positive()) throw std::invalid_argument("radii must be positive");
}

double max_radius(std::span<const double> radii) {
  return *std::max_element(radii.begin(), radii.end());
}

// rho at sqrt(4/3) * rips should be >= 0. Values just below zero are
// rounding at a triple point; anything further off is a bug.
bool rounding_only(double value, double lambda, double rmax) {
  return value >= -kMembershipSlack * (1.0 + lambda * rmax);
}

// One or two disks: the Čech scale equals the Rips scale.
ScaleResult small_system(const DiskSystem& system) {
  ScaleResult out;
  if (system.size() == 1) {
    out.witness = system.center2(0);
    return out;
  }
  const double nu = pair_scale(system, 0, 1);
  out.cech_scale = nu;
  out.rips_scale = nu;
  out.witness = detail::d_point(system.center2(0), system.radius(0), system.center2(1),
                                system.radius(1), nu);
  return out;
}

Point2 centroid(std::span<const Point2> points) {
  Point2 c{0.0, 0.0};
  for (const Point2& p : points) {
    c.x += p.x;
    c.y += p.y;
  }
  const double n = static_cast<double>(points.size());
  return {c.x / n, c.y / n};
}

struct TripletBest {
  double scale = kNegInf;
  Point2 witness;
  int calls = 0;
};

bool common_point(const PlanarDisks& disks, Point2 p, double lambda) {
  for (std::size_t k = 0; k < disks.size(); ++k) {
    const double R = lambda * disks.r[k];
    if (distance(p, disks.center(k)) > R + kMembershipSlack * (1.0 + R)) return false;
  }
  return true;
}

}  // namespace

bool is_common_point(const DiskSystem& system, Point2 p, double lambda) {
  return common_point(PlanarDisks(system), p, lambda);
}

std::vector<Point2> intersection_points(const DiskSystem& system, double lambda) {
  require_planar(system);
  const PlanarDisks disks(system);
  const std::size_t m = disks.size();
  std::vector<Point2> out;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const Point2 ci = disks.center(i);
      const Point2 cj = disks.center(j);
      if (lambda * (disks.r[i] + disks.r[j]) < distance(ci, cj)) continue;
      const Point2 p = detail::d_point(ci, disks.r[i], cj, disks.r[j], lambda);
      if (common_point(disks, p, lambda)) out.push_back(p);
    }
  }
  return out;
}

std::vector<std::vector<Point2>> cluster_points(std::span<const Point2> points, double radius) {
  std::vector<std::vector<Point2>> clusters;
  for (const Point2& p : points) {
    auto it = std::find_if(clusters.begin(), clusters.end(),
                           [&](const auto& c) { return distance(c.front(), p) <= radius; });
    if (it == clusters.end()) {
      clusters.push_back({p});
    } else {
      it->push_back(p);
    }
  }
  return clusters;
}

// ------------------------------------------------------------ triplets

ScaleResult cech_scale_triplet(const PlanarTriple& t, double tolerance) {
  ScaleResult out;
  const double nu = t.rips_scale();
  out.rips_scale = nu;

  const RhoValue at_nu = rho_triple(t, nu);
  if (at_nu.value >= 0.0) {
    out.cech_scale = nu;
    out.witness = detail::d_point(t.c[at_nu.i], t.r[at_nu.i], t.c[at_nu.j], t.r[at_nu.j], nu);
    return out;
  }

  out.status = ScaleStatus::RootFound;
  const double hi = kPlanarRipsFactor * nu;
  const RhoValue at_hi = rho_triple(t, hi);
  double lambda = hi;
  if (at_hi.value < 0.0) {
    if (!rounding_only(at_hi.value, hi, std::max({t.r[0], t.r[1], t.r[2]}))) {
      throw std::logic_error("rho is negative at the sqrt(4/3) Rips bound");
    }
  } else {
    lambda = detail::bisect_bracketed([&](double l) { return rho_triple(t, l).value; }, nu, hi,
                                      tolerance);
    out.bisection_calls = 1;
  }
  const RhoValue best = lambda == hi ? at_hi : rho_triple(t, lambda);
  out.cech_scale = lambda;
  out.witness = detail::d_point(t.c[best.i], t.r[best.i], t.c[best.j], t.r[best.j], lambda);
  return out;
}

ScaleResult cech_scale_triplet(const DiskSystem& triple, const SolverOptions& options) {
  require_planar(triple);
  if (triple.size() != 3) throw std::invalid_argument("expected exactly three disks");
  return cech_scale_triplet(PlanarTriple::from(triple, 0, 1, 2), options.tolerance);
}

// --------------------------------------------------------------- naive

ScaleResult cech_scale_naive(const DiskSystem& system, const SolverOptions& options) {
  require_planar(system);
  if (system.size() < 3) return small_system(system);

  const RhoEvaluator rho_of(system, options.threads);
  const double nu = rho_of.rips_scale();
  ScaleResult out;
  out.rips_scale = nu;

  const RhoValue at_nu = rho_of(nu);
  if (at_nu.value >= 0.0) {
    out.cech_scale = nu;
    out.witness = rho_of.witness(at_nu, nu);
    return out;
  }

  out.status = ScaleStatus::RootFound;
  const double hi = kPlanarRipsFactor * nu;
  const RhoValue at_hi = rho_of(hi);
  if (at_hi.value < 0.0) {
    if (!rounding_only(at_hi.value, hi, max_radius(system.radii()))) {
      throw std::logic_error("rho is negative at the sqrt(4/3) Rips bound");
    }
    out.cech_scale = hi;
    out.witness = rho_of.witness(at_hi, hi);
    return out;
  }

  const auto f = [&](double l) { return rho_of(l).value; };
  const auto clusters_at = [&](double l) {
    return cluster_points(intersection_points(system, l)).size();
  };
  const detail::RefinedRoot root = detail::refine_root(f, clusters_at, nu, hi, options.tolerance);

  out.cech_scale = root.scale;
  out.bisection_calls = root.bisection_calls;
  const std::vector<Point2> points = intersection_points(system, root.scale);
  if (points.empty()) {
    out.witness = rho_of.witness(rho_of(root.scale), root.scale);
  } else {
    out.witness = centroid(cluster_points(points).front());
  }
  return out;
}

// ------------------------------------------------------- Helly maximum

ScaleResult cech_scale(const DiskSystem& system, const SolverOptions& options) {
  require_planar(system);
  const std::size_t m = system.size();
  if (m < 3) return small_system(system);

  const RhoEvaluator rho_of(system, options.threads);
  const double nu = rho_of.rips_scale();
  ScaleResult out;
  out.rips_scale = nu;

  const RhoValue at_nu = rho_of(nu);
  if (at_nu.value >= 0.0) {
    out.cech_scale = nu;
    out.witness = rho_of.witness(at_nu, nu);
    return out;
  }
  out.status = ScaleStatus::RootFound;

  const PlanarDisks& disks = rho_of.disks();
  std::vector<double> pair(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double dx = disks.x[j] - disks.x[i];
      const double dy = disks.y[j] - disks.y[i];
      const double d2 = dx * dx + dy * dy;
      const double s = d2 == 0.0 ? 0.0 : std::sqrt(d2) / (disks.r[i] + disks.r[j]);
      pair[i * m + j] = s;
      pair[j * m + i] = s;
    }
  }

  // Each chunk keeps its own running maximum so pruning never depends on
  // scheduling. Chunks are reduced in index order with strict >, so the
  // first maximal triplet in lexicographic order supplies the witness.
  const unsigned workers = resolve_threads(options.threads);
  const std::size_t chunks = workers > 1 ? std::min<std::size_t>(m - 2, 4 * workers) : 1;
  std::vector<TripletBest> partial(chunks);

  parallel_chunks(m - 2, chunks, workers, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    TripletBest best;
    double bound = nu;
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const double sij = pair[i * m + j];
        for (std::size_t k = j + 1; k < m; ++k) {
          const double local_nu = std::max({sij, pair[i * m + k], pair[j * m + k]});
          if (options.prune && kPlanarRipsFactor * local_nu < bound) continue;
          const ScaleResult r =
              cech_scale_triplet(PlanarTriple::from(disks, i, j, k), options.tolerance);
          best.calls += r.bisection_calls;
          if (r.cech_scale > best.scale) {
            best.scale = r.cech_scale;
            best.witness = r.witness;
          }
          bound = std::max(bound, r.cech_scale);
        }
      }
    }
    partial[chunk] = best;
  });

  TripletBest best;
  for (const TripletBest& p : partial) {
    out.bisection_calls += p.calls;
    if (p.scale > best.scale) best = p;
  }
  out.cech_scale = std::max(best.scale, nu);
  out.witness = best.witness;

  if (!is_common_point(system, out.witness, out.cech_scale)) {
    const RhoValue fallback = rho_of(out.cech_scale);
    out.witness = rho_of.witness(fallback, out.cech_scale);
    if (!is_common_point(system, out.witness, out.cech_scale)) {
      throw std::logic_error("no common point found at the computed Čech scale");
    }
  }
  return out;
}

}  // namespace cech
