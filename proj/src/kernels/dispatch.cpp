#include <atomic>
#include <cstdlib>
#include <string>

#include "cech/kernels.hpp"
#include "kernels_impl.hpp"

namespace cech::kernels {
namespace {

const KernelTable kScalarTable{
    Isa::Scalar,
    &scalar::min_signed_distance,
    &scalar::max_ratio,
    &scalar::max_pair_scale_row,
    &scalar::squared_distance,
    &scalar::difference_gram,
};

bool cpu_has(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(CECH_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(CECH_HAVE_NEON_KERNELS)
      return true;  // baseline on aarch64
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* compiled_table(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return &kScalarTable;
    case Isa::Avx2:
#if defined(CECH_HAVE_AVX2_KERNELS)
      return &avx2::kTable;
#else
      return nullptr;
#endif
    case Isa::Neon:
#if defined(CECH_HAVE_NEON_KERNELS)
      return &neon::kTable;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable* select_initial() {
  if (const char* env = std::getenv("CECH_SIMD")) {
    const std::string want(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (want == isa_name(isa)) {
        if (const KernelTable* t = table_for(isa)) return t;
      }
    }
  }
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (const KernelTable* t = table_for(isa)) return t;
  }
  return &kScalarTable;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{select_initial()};
  return table;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

const KernelTable* table_for(Isa isa) {
  return cpu_has(isa) ? compiled_table(isa) : nullptr;
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

bool force(Isa isa) {
  const KernelTable* t = table_for(isa);
  if (t == nullptr) return false;
  current().store(t, std::memory_order_release);
  return true;
}

}  // namespace cech::kernels
