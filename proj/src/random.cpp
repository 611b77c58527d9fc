#include "cech/random.hpp"

#include <cmath>

namespace cech {

DiskSystem random_system(std::size_t m, std::size_t dim, std::mt19937_64& rng,
                         const RandomSystemParams& params) {
  std::uniform_real_distribution<double> coord(params.coord_min, params.coord_max);
  std::uniform_real_distribution<double> radius(params.radius_min, params.radius_max);
  DiskSystem out(dim);
  std::vector<double> c(dim);
  for (std::size_t i = 0; i < m; ++i) {
    for (double& v : c) v = coord(rng);
    out.add(c, radius(rng));
  }
  return out;
}

std::vector<Point2> random_points(std::size_t m, std::mt19937_64& rng,
                                  const RandomSystemParams& params) {
  std::uniform_real_distribution<double> coord(params.coord_min, params.coord_max);
  std::vector<Point2> out(m);
  for (Point2& p : out) {
    p.x = coord(rng);
    p.y = coord(rng);
  }
  return out;
}

DiskSystem random_isometry(const DiskSystem& system, std::mt19937_64& rng) {
  const std::size_t d = system.dimension();
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> shift(-5.0, 5.0);

  // Three Householder reflections I - 2 v v^T / |v|^2.
  std::vector<std::vector<double>> normals(3, std::vector<double>(d));
  for (auto& v : normals) {
    double n2 = 0.0;
    for (double& x : v) {
      x = gauss(rng);
      n2 += x * x;
    }
    const double n = std::sqrt(n2);
    for (double& x : v) x /= n;
  }
  std::vector<double> t(d);
  for (double& x : t) x = shift(rng);

  DiskSystem out(d);
  std::vector<double> c(d);
  for (std::size_t i = 0; i < system.size(); ++i) {
    auto src = system.center(i);
    c.assign(src.begin(), src.end());
    for (const auto& v : normals) {
      double s = 0.0;
      for (std::size_t u = 0; u < d; ++u) s += v[u] * c[u];
      for (std::size_t u = 0; u < d; ++u) c[u] -= 2.0 * s * v[u];
    }
    for (std::size_t u = 0; u < d; ++u) c[u] += t[u];
    out.add(c, system.radius(i));
  }
  return out;
}

}  // namespace cech
