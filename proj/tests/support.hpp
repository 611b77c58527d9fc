#pragma once

// Fixtures and brute-force references shared by the unit and acceptance
// tests.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include "cech/complex.hpp"
#include "cech/geometry.hpp"
#include "cech/miniball.hpp"
#include "cech/types.hpp"

namespace cech::testing {

inline const double kSqrt3 = std::sqrt(3.0);
inline const double kTwoOverSqrt3 = 2.0 / std::sqrt(3.0);

inline DiskSystem equilateral() {
  return DiskSystem{Disk(Point2{0, 0}, 1), Disk(Point2{2, 0}, 1), Disk(Point2{1, kSqrt3}, 1)};
}

// The worked three-disk example with radii 4, 3, 2.
inline DiskSystem example_three() {
  return DiskSystem{Disk(Point2{-3, 4}, 4), Disk(Point2{1, 3}, 3), Disk(Point2{2, -1}, 2)};
}

// The worked five-disk filtration example.
inline DiskSystem example_five() {
  return DiskSystem{Disk(Point2{2.99, 0.56}, 1.5), Disk(Point2{0.99, 0.11}, 1.0),
                    Disk(Point2{1.69, 1.30}, 0.6), Disk(Point2{1.07, 1.93}, 0.4),
                    Disk(Point2{1.96, 2.64}, 0.8)};
}

// Collinear centers whose circles all pass through (0, +-1) at scale 1.
// rho is positive at the Rips scale, falls to exactly 0 at 1 and rises
// again, so 1 is a second root that is not the Čech scale.
inline DiskSystem two_root_triple() {
  const double a[3] = {-0.9, 3.95, 3.9};
  DiskSystem out(2);
  for (double x : a) out.add(Point2{x, 0.0}, std::hypot(x, 1.0));
  return out;
}

// Exact Čech scale by support-set enumeration: the optimum is either the
// tangency point of a pair or a point on three rescaled circles. The latter
// solves a quadratic in t = lambda^2 per triple.
inline double support_set_scale(const DiskSystem& s) {
  const std::size_t m = s.size();
  if (m == 1) return 0.0;
  auto feasible = [&](Point2 x, double lambda) {
    for (std::size_t k = 0; k < m; ++k) {
      if (distance(x, s.center2(k)) > lambda * s.radius(k) * (1 + 1e-10) + 1e-12) return false;
    }
    return true;
  };
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Point2 ci = s.center2(i), cj = s.center2(j);
      const double lam = pair_scale(s, i, j);
      const double w = s.radius(i) / (s.radius(i) + s.radius(j));
      const Point2 x{ci.x + w * (cj.x - ci.x), ci.y + w * (cj.y - ci.y)};
      if (feasible(x, lam)) best = std::min(best, lam);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        const Point2 c[3] = {s.center2(i), s.center2(j), s.center2(k)};
        const double r[3] = {s.radius(i), s.radius(j), s.radius(k)};
        // |x|^2 - 2 c.x + |c|^2 = t r^2; subtract the first equation.
        double A[2][2], b0[2], b1[2];
        for (int e = 0; e < 2; ++e) {
          const Point2 cn = c[e + 1];
          A[e][0] = 2 * (cn.x - c[0].x);
          A[e][1] = 2 * (cn.y - c[0].y);
          b0[e] = (cn.x * cn.x + cn.y * cn.y) - (c[0].x * c[0].x + c[0].y * c[0].y);
          b1[e] = r[0] * r[0] - r[e + 1] * r[e + 1];
        }
        const double det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
        if (std::abs(det) < 1e-12) continue;
        auto solve = [&](const double* b) {
          return Point2{(b[0] * A[1][1] - A[0][1] * b[1]) / det,
                        (A[0][0] * b[1] - b[0] * A[1][0]) / det};
        };
        const Point2 p = solve(b0), q = solve(b1);
        // |p + t q - c0|^2 = t r0^2
        const double ux = p.x - c[0].x, uy = p.y - c[0].y;
        const double qa = q.x * q.x + q.y * q.y;
        const double qb = 2 * (ux * q.x + uy * q.y) - r[0] * r[0];
        const double qc = ux * ux + uy * uy;
        std::vector<double> roots;
        if (std::abs(qa) < 1e-15) {
          if (qb != 0) roots.push_back(-qc / qb);
        } else {
          const double disc = qb * qb - 4 * qa * qc;
          if (disc >= 0) {
            roots.push_back((-qb - std::sqrt(disc)) / (2 * qa));
            roots.push_back((-qb + std::sqrt(disc)) / (2 * qa));
          }
        }
        for (double t : roots) {
          if (!(t > 0)) continue;
          const double lam = std::sqrt(t);
          const Point2 x{p.x + t * q.x, p.y + t * q.y};
          if (feasible(x, lam)) best = std::min(best, lam);
        }
      }
    }
  }
  return best;
}

// Smallest enclosing circle by trying every 2- and 3-point support circle.
inline Ball brute_force_miniball(const std::vector<Point2>& pts) {
  if (pts.size() == 1) return {pts[0], 0.0};
  auto encloses = [&](Point2 c, double r) {
    for (const Point2& p : pts) {
      if (distance(c, p) > r * (1 + 1e-12) + 1e-12) return false;
    }
    return true;
  };
  Ball best{{0, 0}, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Point2 c{(pts[i].x + pts[j].x) / 2, (pts[i].y + pts[j].y) / 2};
      const double r = distance(c, pts[i]);
      if (r < best.radius && encloses(c, r)) best = {c, r};
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        const Point2 a = pts[i], b = pts[j], d = pts[k];
        const double D = 2 * (a.x * (b.y - d.y) + b.x * (d.y - a.y) + d.x * (a.y - b.y));
        if (std::abs(D) < 1e-14) continue;
        const double a2 = a.x * a.x + a.y * a.y, b2 = b.x * b.x + b.y * b.y,
                     d2 = d.x * d.x + d.y * d.y;
        const Point2 cc{(a2 * (b.y - d.y) + b2 * (d.y - a.y) + d2 * (a.y - b.y)) / D,
                        (a2 * (d.x - b.x) + b2 * (a.x - d.x) + d2 * (b.x - a.x)) / D};
        const double rr = distance(cc, a);
        if (rr < best.radius && encloses(cc, rr)) best = {cc, rr};
      }
    }
  }
  return best;
}

// Clique complex of the pair-scale graph at lambda, up to max_dim.
inline std::set<Simplex> brute_force_rips(const DiskSystem& s, double lambda,
                                          std::size_t max_dim) {
  const std::size_t m = s.size();
  std::set<Simplex> out;
  std::vector<std::vector<std::size_t>> current;
  for (std::size_t i = 0; i < m; ++i) current.push_back({i});
  for (std::size_t dim = 0; dim <= max_dim && !current.empty(); ++dim) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& v : current) {
      out.insert(Simplex(v));
      for (std::size_t k = v.back() + 1; k < m; ++k) {
        bool ok = true;
        for (std::size_t u : v) ok = ok && pair_scale(s, u, k) <= lambda;
        if (ok) {
          auto w = v;
          w.push_back(k);
          next.push_back(std::move(w));
        }
      }
    }
    current = std::move(next);
  }
  return out;
}

inline bool in_all_disks(const DiskSystem& s, Point2 p, double lambda, double slack = 1e-9) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    const double R = lambda * s.radius(k);
    if (distance(p, s.center2(k)) > R + slack * (1 + R)) return false;
  }
  return true;
}

}  // namespace cech::testing
