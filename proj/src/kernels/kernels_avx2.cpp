#include <immintrin.h>

#include <cmath>
#include <limits>

#include "cech/kernels.hpp"
#include "kernels_impl.hpp"

namespace cech::kernels::avx2 {
namespace {

inline __m256d signed_distance4(const double* x, const double* y, const double* r,
                                __m256d px, __m256d py, __m256d lambda) {
  const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(x), px);
  const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(y), py);
  const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
  return _mm256_sub_pd(_mm256_mul_pd(lambda, _mm256_loadu_pd(r)), _mm256_sqrt_pd(d2));
}

inline double hsum(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

inline double hmin(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_min_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_min_sd(m, _mm_unpackhi_pd(m, m)));
}

inline double hmax(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(m, _mm_unpackhi_pd(m, m)));
}

}  // namespace

IndexedValue min_signed_distance(const double* x, const double* y, const double* r,
                                 std::size_t n, double px, double py, double lambda,
                                 std::size_t skip_a, std::size_t skip_b, double cutoff) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  static_assert(kExitBlock == 8);
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  const __m256d vlambda = _mm256_set1_pd(lambda);

  IndexedValue best{inf, n};
  std::size_t block = 0;
  for (; block + kExitBlock <= n; block += kExitBlock) {
    alignas(32) double v[kExitBlock];
    _mm256_store_pd(v, signed_distance4(x + block, y + block, r + block, vpx, vpy, vlambda));
    _mm256_store_pd(v + 4,
                    signed_distance4(x + block + 4, y + block + 4, r + block + 4, vpx, vpy, vlambda));
    if (skip_a - block < kExitBlock) v[skip_a - block] = inf;
    if (skip_b - block < kExitBlock) v[skip_b - block] = inf;
    const double block_min =
        hmin(_mm256_min_pd(_mm256_load_pd(v), _mm256_load_pd(v + 4)));
    if (block_min < best.value) {
      for (std::size_t t = 0; t < kExitBlock; ++t) {
        if (v[t] < best.value) best = {v[t], block + t};
      }
    }
    if (best.value <= cutoff) return best;
  }
  if (block < n) {
    for (std::size_t k = block; k < n; ++k) {
      if (k == skip_a || k == skip_b) continue;
      const double dx = x[k] - px;
      const double dy = y[k] - py;
      const double v = lambda * r[k] - std::sqrt(dx * dx + dy * dy);
      if (v < best.value) best = {v, k};
    }
  }
  return best;
}

double max_ratio(const double* x, const double* y, const double* r, std::size_t n, double px,
                 double py) {
  double best = -std::numeric_limits<double>::infinity();
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  __m256d acc = _mm256_set1_pd(best);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(x + k), vpx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(y + k), vpy);
    const __m256d d = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
    acc = _mm256_max_pd(acc, _mm256_div_pd(d, _mm256_loadu_pd(r + k)));
  }
  best = hmax(acc);
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
  const __m256d xi = _mm256_set1_pd(x[i]);
  const __m256d yi = _mm256_set1_pd(y[i]);
  const __m256d ri = _mm256_set1_pd(r[i]);
  std::size_t j = i + 1;
  for (; j + 4 <= n; j += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(x + j), xi);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(y + j), yi);
    const __m256d d = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
    const __m256d s = _mm256_div_pd(d, _mm256_add_pd(ri, _mm256_loadu_pd(r + j)));
    if (hmax(s) > best.value) {
      alignas(32) double v[4];
      _mm256_store_pd(v, s);
      for (std::size_t t = 0; t < 4; ++t) {
        if (v[t] > best.value) best = {v[t], j + t};
      }
    }
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
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t t = 0;
  for (; t + 8 <= d; t += 8) {
    const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(a + t), _mm256_loadu_pd(b + t));
    const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(a + t + 4), _mm256_loadu_pd(b + t + 4));
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(d0, d0));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(d1, d1));
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; t < d; ++t) {
    const double diff = a[t] - b[t];
    acc += diff * diff;
  }
  return acc;
}

Gram3 difference_gram(const double* origin, const double* a, const double* b, std::size_t d) {
  __m256d aa = _mm256_setzero_pd();
  __m256d bb = _mm256_setzero_pd();
  __m256d ab = _mm256_setzero_pd();
  std::size_t t = 0;
  for (; t + 4 <= d; t += 4) {
    const __m256d o = _mm256_loadu_pd(origin + t);
    const __m256d u = _mm256_sub_pd(_mm256_loadu_pd(a + t), o);
    const __m256d v = _mm256_sub_pd(_mm256_loadu_pd(b + t), o);
    aa = _mm256_add_pd(aa, _mm256_mul_pd(u, u));
    bb = _mm256_add_pd(bb, _mm256_mul_pd(v, v));
    ab = _mm256_add_pd(ab, _mm256_mul_pd(u, v));
  }
  Gram3 g{hsum(aa), hsum(bb), hsum(ab)};
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
    Isa::Avx2,         &min_signed_distance, &max_ratio, &max_pair_scale_row,
    &squared_distance, &difference_gram,
};

}  // namespace cech::kernels::avx2
