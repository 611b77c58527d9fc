#include "cech/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cech/kernels.hpp"

namespace cech {
namespace {

constexpr int kMaxSteps = 400;
const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;

struct Min1 {
  double at;
  double value;
  std::size_t steps;
};

// Golden-section search for the minimum of a convex function on [lo, hi].
template <class F>
Min1 golden(F&& f, double lo, double hi) {
  const double stop = 1e-13 * (1.0 + std::max(std::abs(lo), std::abs(hi)));
  double a = lo;
  double b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  std::size_t steps = 0;
  while (b - a > stop && steps < kMaxSteps) {
    ++steps;
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  // Report the best point seen at the end, including the bracket ends.
  Min1 best = f1 <= f2 ? Min1{x1, f1, steps} : Min1{x2, f2, steps};
  for (double x : {a, b}) {
    const double v = f(x);
    if (v < best.value) best = {x, v, steps};
  }
  return best;
}

template <class F>
OracleResult minimize_2d(F&& f, const SearchBox& box) {
  auto inner = [&](double s) {
    return golden([&](double t) { return f(s, t); }, box.ymin, box.ymax);
  };
  const Min1 outer = golden([&](double s) { return inner(s).value; }, box.xmin, box.xmax);
  const Min1 y = inner(outer.at);
  return {f(outer.at, y.at), {outer.at, y.at}, outer.steps};
}

}  // namespace

OracleResult oracle_cech_scale(const DiskSystem& system, const std::optional<SearchBox>& box) {
  if (system.dimension() != 2) throw std::invalid_argument("the oracle handles planar systems");
  if (system.empty()) throw std::invalid_argument("empty disk system");
  if (!system.all_radii_positive()) throw std::invalid_argument("radii must be positive");
  const PlanarDisks p(system);
  if (p.size() == 1) return {0.0, p.center(0), 0};

  SearchBox b{};
  if (box) {
    b = *box;
  } else {
    const double pad = *std::max_element(p.r.begin(), p.r.end());
    const auto [xlo, xhi] = std::minmax_element(p.x.begin(), p.x.end());
    const auto [ylo, yhi] = std::minmax_element(p.y.begin(), p.y.end());
    b = {*xlo - pad, *xhi + pad, *ylo - pad, *yhi + pad};
  }
  // Scalar reference kernel: the oracle stays independent of dispatch.
  auto f = [&](double x, double y) {
    return kernels::scalar::max_ratio(p.x.data(), p.y.data(), p.r.data(), p.size(), x, y);
  };
  return minimize_2d(f, b);
}

bool oracle_feasible(const DiskSystem& system, double lambda) {
  return oracle_cech_scale(system).scale <= lambda + 1e-9;
}

double oracle_cech_scale_triplet_dplane(const Disk& a, const Disk& b, const Disk& c) {
  const std::size_t d = a.dimension();
  if (b.dimension() != d || c.dimension() != d) {
    throw std::invalid_argument("disks differ in dimension");
  }
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");

  const auto ca = a.center();
  const auto cb = b.center();
  const auto cc = c.center();
  auto dot = [d](const std::vector<double>& u, const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t t = 0; t < d; ++t) s += u[t] * v[t];
    return s;
  };
  auto diff = [d, &ca](std::span<const double> q) {
    std::vector<double> v(d);
    for (std::size_t t = 0; t < d; ++t) v[t] = q[t] - ca[t];
    return v;
  };
  // Orthonormalize u against the basis; false if u is (numerically) in its span.
  auto orthonormalize = [&](std::vector<double> u, const std::vector<std::vector<double>>& basis,
                            std::vector<double>& out) {
    const double len0 = std::sqrt(dot(u, u));
    for (const auto& e : basis) {
      const double s = dot(u, e);
      for (std::size_t t = 0; t < d; ++t) u[t] -= s * e[t];
    }
    const double len = std::sqrt(dot(u, u));
    if (!(len > 1e-9 * len0) || len == 0.0) return false;
    for (double& v : u) v /= len;
    out = std::move(u);
    return true;
  };

  std::vector<std::vector<double>> basis;
  std::vector<double> e;
  for (const auto& u : {diff(cb), diff(cc)}) {
    if (basis.size() < 2 && orthonormalize(u, basis, e)) basis.push_back(e);
  }
  for (std::size_t t = 0; basis.size() < 2 && t < d; ++t) {
    std::vector<double> unit(d, 0.0);
    unit[t] = 1.0;
    if (orthonormalize(unit, basis, e)) basis.push_back(e);
  }

  const std::vector<std::vector<double>> rel = {diff(ca), diff(cb), diff(cc)};
  const std::vector<std::span<const double>> centers = {ca, cb, cc};
  const double radii[3] = {a.radius(), b.radius(), c.radius()};
  if (!(radii[0] > 0.0 && radii[1] > 0.0 && radii[2] > 0.0)) {
    throw std::invalid_argument("radii must be positive");
  }

  const double pad = std::max({radii[0], radii[1], radii[2]});
  SearchBox box{0.0, 0.0, 0.0, 0.0};
  for (const auto& v : rel) {
    const double s = dot(v, basis[0]);
    const double t = dot(v, basis[1]);
    box.xmin = std::min(box.xmin, s);
    box.xmax = std::max(box.xmax, s);
    box.ymin = std::min(box.ymin, t);
    box.ymax = std::max(box.ymax, t);
  }
  box = {box.xmin - pad, box.xmax + pad, box.ymin - pad, box.ymax + pad};

  std::vector<double> x(d);
  auto f = [&](double s, double t) {
    double worst = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
      double q = 0.0;
      for (std::size_t u = 0; u < d; ++u) {
        x[u] = ca[u] + s * basis[0][u] + t * basis[1][u];
        const double diffu = x[u] - centers[k][u];
        q += diffu * diffu;
      }
      worst = std::max(worst, std::sqrt(q) / radii[k]);
    }
    return worst;
  };
  return minimize_2d(f, box).scale;
}

}  // namespace cech
