#include <cmath>
#include <limits>

#include "cech/kernels.hpp"

namespace cech::kernels::scalar {

IndexedValue min_signed_distance(const double* x, const double* y, const double* r,
                                 std::size_t n, double px, double py, double lambda,
                                 std::size_t skip_a, std::size_t skip_b, double cutoff) {
  IndexedValue best{std::numeric_limits<double>::infinity(), n};
  for (std::size_t block = 0; block < n; block += kExitBlock) {
    const std::size_t end = block + kExitBlock < n ? block + kExitBlock : n;
    for (std::size_t k = block; k < end; ++k) {
      if (k == skip_a || k == skip_b) continue;
      const double dx = x[k] - px;
      const double dy = y[k] - py;
      const double v = lambda * r[k] - std::sqrt(dx * dx + dy * dy);
      if (v < best.value) best = {v, k};
    }
    if (best.value <= cutoff) return best;
  }
  return best;
}

double max_ratio(const double* x, const double* y, const double* r, std::size_t n, double px,
                 double py) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const double dx = x[k] - px;
    const double dy = y[k] - py;
    const double v = std::sqrt(dx * dx + dy * dy) / r[k];
    if (v > best) best = v;
  }
  return best;
}

IndexedValue max_pair_scale_row(const double* x, const double* y, const double* r,
                                std::size_t n, std::size_t i) {
  IndexedValue best{-std::numeric_limits<double>::infinity(), n};
  for (std::size_t j = i + 1; j < n; ++j) {
    const double dx = x[j] - x[i];
    const double dy = y[j] - y[i];
    const double v = std::sqrt(dx * dx + dy * dy) / (r[i] + r[j]);
    if (v > best.value) best = {v, j};
  }
  return best;
}

double squared_distance(const double* a, const double* b, std::size_t d) {
  double acc = 0.0;
  for (std::size_t t = 0; t < d; ++t) {
    const double diff = a[t] - b[t];
    acc += diff * diff;
  }
  return acc;
}

Gram3 difference_gram(const double* origin, const double* a, const double* b, std::size_t d) {
  Gram3 g{0.0, 0.0, 0.0};
  for (std::size_t t = 0; t < d; ++t) {
    const double u = a[t] - origin[t];
    const double v = b[t] - origin[t];
    g.aa += u * u;
    g.bb += v * v;
    g.ab += u * v;
  }
  return g;
}

}  // namespace cech::kernels::scalar
