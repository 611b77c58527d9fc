#include "cech/rho.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "cech/geometry.hpp"
#include "cech/kernels.hpp"
#include "cech/parallel.hpp"

namespace cech {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Below this many disks the pair loop runs on the calling thread.
constexpr std::size_t kParallelMinDisks = 96;

void require_planar_triple_or_more(const DiskSystem& system) {
  if (system.dimension() != 2) throw std::invalid_argument("rho is defined for planar systems");
  if (system.size() < 3) throw std::invalid_argument("rho requires at least three disks");
  if (!system.all_radii_positive()) throw std::invalid_argument("rho needs positive radii");
}

}  // namespace

double signed_distance(const DiskSystem& system, std::size_t i, std::size_t j, std::size_t k,
                       double lambda) {
  if (system.dimension() != 2) throw std::invalid_argument("signed distance needs a planar system");
  if (i == j || i == k || j == k) throw std::invalid_argument("indices must be distinct");
  const Point2 p = d_point(system.disk(i), system.disk(j), lambda);
  return lambda * system.radius(k) - distance(p, system.center2(k));
}

RhoEvaluator::RhoEvaluator(const DiskSystem& system, unsigned threads)
    : disks_((require_planar_triple_or_more(system), system)),
      rips_(cech::rips_scale(system)),
      threads_(threads) {}

RhoValue RhoEvaluator::operator()(double lambda) const {
  if (lambda < rips_) throw std::domain_error("rho is defined from the Rips scale upwards");
  const std::size_t m = disks_.size();
  const double* x = disks_.x.data();
  const double* y = disks_.y.data();
  const double* r = disks_.r.data();
  const auto& kern = kernels::active();

  const unsigned workers = m >= kParallelMinDisks ? resolve_threads(threads_) : 1u;
  const std::size_t chunks = workers > 1 ? std::min<std::size_t>(m, 4 * workers) : 1;
  std::vector<RhoValue> partial(chunks, RhoValue{kNegInf, m, m, m});

  parallel_chunks(m, chunks, workers, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    RhoValue best{kNegInf, m, m, m};
    for (std::size_t i = begin; i < end; ++i) {
      const Point2 ci{x[i], y[i]};
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        const Point2 p = detail::d_point(ci, r[i], {x[j], y[j]}, r[j], lambda);
        const auto inner =
            kern.min_signed_distance(x, y, r, m, p.x, p.y, lambda, i, j, best.value);
        if (inner.value > best.value) best = {inner.value, i, j, inner.index};
      }
    }
    partial[chunk] = best;
  });

  RhoValue best = partial.front();
  for (std::size_t c = 1; c < chunks; ++c) {
    if (partial[c].value > best.value) best = partial[c];
  }
  return best;
}

Point2 RhoEvaluator::witness(const RhoValue& value, double lambda) const {
  return detail::d_point(disks_.center(value.i), disks_.r[value.i], disks_.center(value.j),
                         disks_.r[value.j], lambda);
}

RhoValue rho(const DiskSystem& system, double lambda, unsigned threads) {
  return RhoEvaluator(system, threads)(lambda);
}

PlanarTriple PlanarTriple::from(const DiskSystem& system, std::size_t a, std::size_t b,
                                std::size_t c) {
  return {{system.center2(a), system.center2(b), system.center2(c)},
          {system.radius(a), system.radius(b), system.radius(c)}};
}

PlanarTriple PlanarTriple::from(const PlanarDisks& disks, std::size_t a, std::size_t b,
                                std::size_t c) {
  return {{disks.center(a), disks.center(b), disks.center(c)},
          {disks.r[a], disks.r[b], disks.r[c]}};
}

double PlanarTriple::pair_scale(std::size_t a, std::size_t b) const {
  // Same expression as the pair-scale kernels so the two agree bit for bit.
  const double dx = c[b].x - c[a].x;
  const double dy = c[b].y - c[a].y;
  const double d2 = dx * dx + dy * dy;
  if (d2 == 0.0) return 0.0;
  return std::sqrt(d2) / (r[a] + r[b]);
}

double PlanarTriple::rips_scale() const {
  return std::max({pair_scale(0, 1), pair_scale(0, 2), pair_scale(1, 2)});
}

RhoValue rho_triple(const PlanarTriple& t, double lambda) {
  RhoValue best{kNegInf, 3, 3, 3};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (j == i) continue;
      const std::size_t k = 3 - i - j;
      const Point2 p = detail::d_point(t.c[i], t.r[i], t.c[j], t.r[j], lambda);
      const double v = lambda * t.r[k] - distance(p, t.c[k]);
      if (v > best.value) best = {v, i, j, k};
    }
  }
  return best;
}

}  // namespace cech
