#include <arm_neon.h>

#include <cmath>
#include <limits>

#include "cech/kernels.hpp"
#include "kernels_impl.hpp"

namespace cech::kernels::neon {
namespace {

inline float64x2_t signed_distance2(const double* x, const double* y, const double* r,
                                    float64x2_t px, float64x2_t py, float64x2_t lambda) {
  const float64x2_t dx = vsubq_f64(vld1q_f64(x), px);
  const float64x2_t dy = vsubq_f64(vld1q_f64(y), py);
  const float64x2_t d2 = vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy));
  return vsubq_f64(vmulq_f64(lambda, vld1q_f64(r)), vsqrtq_f64(d2));
}

}  // namespace

IndexedValue min_signed_distance(const double* x, const double* y, const double* r,
                                 std::size_t n, double px, double py, double lambda,
                                 std::size_t skip_a, std::size_t skip_b, double cutoff) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const float64x2_t vpx = vdupq_n_f64(px);
  const float64x2_t vpy = vdupq_n_f64(py);
  const float64x2_t vlambda = vdupq_n_f64(lambda);

  IndexedValue best{inf, n};
  std::size_t block = 0;
  for (; block + kExitBlock <= n; block += kExitBlock) {
    double v[kExitBlock];
    for (std::size_t t = 0; t < kExitBlock; t += 2) {
      vst1q_f64(v + t, signed_distance2(x + block + t, y + block + t, r + block + t, vpx, vpy,
                                        vlambda));
    }
    if (skip_a - block < kExitBlock) v[skip_a - block] = inf;
    if (skip_b - block < kExitBlock) v[skip_b - block] = inf;
    for (std::size_t t = 0; t < kExitBlock; ++t) {
      if (v[t] < best.value) best = {v[t], block + t};
    }
    if (best.value <= cutoff) return best;
  }
  for (std::size_t k = block; k < n; ++k) {
    if (k == skip_a || k == skip_b) continue;
    const double dx = x[k] - px;
    const double dy = y[k] - py;
    const double v = lambda * r[k] - std::sqrt(dx * dx + dy * dy);
    if (v < best.value) best = {v, k};
  }
  return best;
}

double max_ratio(const double* x, const double* y, const double* r, std::size_t n, double px,
                 double py) {
  const float64x2_t vpx = vdupq_n_f64(px);
  const float64x2_t vpy = vdupq_n_f64(py);
  float64x2_t acc = vdupq_n_f64(-std::numeric_limits<double>::infinity());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t dx = vsubq_f64(vld1q_f64(x + k), vpx);
    const float64x2_t dy = vsubq_f64(vld1q_f64(y + k), vpy);
    const float64x2_t d = vsqrtq_f64(vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy)));
    acc = vmaxq_f64(acc, vdivq_f64(d, vld1q_f64(r + k)));
  }
  double best = vmaxvq_f64(acc);
  for (; k < n; ++k) {
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
  const float64x2_t xi = vdupq_n_f64(x[i]);
  const float64x2_t yi = vdupq_n_f64(y[i]);
  const float64x2_t ri = vdupq_n_f64(r[i]);
  std::size_t j = i + 1;
  for (; j + 2 <= n; j += 2) {
    const float64x2_t dx = vsubq_f64(vld1q_f64(x + j), xi);
    const float64x2_t dy = vsubq_f64(vld1q_f64(y + j), yi);
    const float64x2_t d = vsqrtq_f64(vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy)));
    double v[2];
    vst1q_f64(v, vdivq_f64(d, vaddq_f64(ri, vld1q_f64(r + j))));
    if (v[0] > best.value) best = {v[0], j};
    if (v[1] > best.value) best = {v[1], j + 1};
  }
  for (; j < n; ++j) {
    const double dx = x[j] - x[i];
    const double dy = y[j] - y[i];
    const double v = std::sqrt(dx * dx + dy * dy) / (r[i] + r[j]);
    if (v > best.value) best = {v, j};
  }
  return best;
}

double squared_distance(const double* a, const double* b, std::size_t d) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t t = 0;
  for (; t + 4 <= d; t += 4) {
    const float64x2_t d0 = vsubq_f64(vld1q_f64(a + t), vld1q_f64(b + t));
    const float64x2_t d1 = vsubq_f64(vld1q_f64(a + t + 2), vld1q_f64(b + t + 2));
    acc0 = vaddq_f64(acc0, vmulq_f64(d0, d0));
    acc1 = vaddq_f64(acc1, vmulq_f64(d1, d1));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; t < d; ++t) {
    const double diff = a[t] - b[t];
    acc += diff * diff;
  }
  return acc;
}

Gram3 difference_gram(const double* origin, const double* a, const double* b, std::size_t d) {
  float64x2_t aa = vdupq_n_f64(0.0);
  float64x2_t bb = vdupq_n_f64(0.0);
  float64x2_t ab = vdupq_n_f64(0.0);
  std::size_t t = 0;
  for (; t + 2 <= d; t += 2) {
    const float64x2_t o = vld1q_f64(origin + t);
    const float64x2_t u = vsubq_f64(vld1q_f64(a + t), o);
    const float64x2_t v = vsubq_f64(vld1q_f64(b + t), o);
    aa = vaddq_f64(aa, vmulq_f64(u, u));
    bb = vaddq_f64(bb, vmulq_f64(v, v));
    ab = vaddq_f64(ab, vmulq_f64(u, v));
  }
  Gram3 g{vaddvq_f64(aa), vaddvq_f64(bb), vaddvq_f64(ab)};
  for (; t < d; ++t) {
    const double u = a[t] - origin[t];
    const double v = b[t] - origin[t];
    g.aa += u * u;
    g.bb += v * v;
    g.ab += u * v;
  }
  return g;
}

const KernelTable kTable{
    Isa::Neon,         &min_signed_distance, &max_ratio, &max_pair_scale_row,
    &squared_distance, &difference_gram,
};

}  // namespace cech::kernels::neon
