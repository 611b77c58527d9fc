#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference
// implementation and vector variants (AVX2 on x86-64, NEON on aarch64); the
// variant is picked once at runtime from the CPU features, and CECH_SIMD
// (scalar|avx2|neon) in the environment can force one.
//
// The planar kernels are element-wise followed by an order-fixed reduction,
// so every variant returns bit-identical results. The R^d reductions
// (squared_distance, difference_gram) sum in lane order and agree with the
// scalar reference only up to rounding.

#include <cstddef>
#include <limits>
#include <span>
#include <string_view>

namespace cech::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

/// Block length of the early-exit check in min_signed_distance. Part of the
/// kernel's contract so that every ISA exits at the same point.
inline constexpr std::size_t kExitBlock = 8;

struct IndexedValue {
  double value;
  std::size_t index;
};

struct Gram3 {
  double aa;  // |a - origin|^2
  double bb;  // |b - origin|^2
  double ab;  // <a - origin, b - origin>
};

struct KernelTable {
  Isa isa;

  // min over k not in {skip_a, skip_b} of lambda*r[k] - |p - c_k|, with the
  // lowest index winning ties. Indices are scanned in blocks of kExitBlock;
  // after a block, if the running minimum is <= cutoff the partial result is
  // returned. A result above cutoff is therefore always the exact minimum.
  IndexedValue (*min_signed_distance)(const double* x, const double* y, const double* r,
                                      std::size_t n, double px, double py, double lambda,
                                      std::size_t skip_a, std::size_t skip_b, double cutoff);

  // max over k of |p - c_k| / r[k].
  double (*max_ratio)(const double* x, const double* y, const double* r, std::size_t n,
                      double px, double py);

  // max over j in (i, n) of |c_i - c_j| / (r[i] + r[j]), lowest j on ties.
  // Returns {-inf, n} when the range is empty.
  IndexedValue (*max_pair_scale_row)(const double* x, const double* y, const double* r,
                                     std::size_t n, std::size_t i);

  double (*squared_distance)(const double* a, const double* b, std::size_t d);

  Gram3 (*difference_gram)(const double* origin, const double* a, const double* b,
                           std::size_t d);
};

/// Table in use for this process.
const KernelTable& active();

/// Table for a specific ISA, or nullptr when it is not compiled in or the CPU
/// lacks it. Used by the equivalence tests.
const KernelTable* table_for(Isa isa);

/// Replaces the active table; returns false (and changes nothing) when the
/// ISA is unavailable.
bool force(Isa isa);

namespace scalar {
IndexedValue min_signed_distance(const double* x, const double* y, const double* r,
                                 std::size_t n, double px, double py, double lambda,
                                 std::size_t skip_a, std::size_t skip_b, double cutoff);
double max_ratio(const double* x, const double* y, const double* r, std::size_t n, double px,
                 double py);
IndexedValue max_pair_scale_row(const double* x, const double* y, const double* r,
                                std::size_t n, std::size_t i);
double squared_distance(const double* a, const double* b, std::size_t d);
Gram3 difference_gram(const double* origin, const double* a, const double* b, std::size_t d);
}  // namespace scalar

}  // namespace cech::kernels
