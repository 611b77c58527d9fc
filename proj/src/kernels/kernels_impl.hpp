#pragma once

#include "cech/kernels.hpp"

namespace cech::kernels {

#if defined(CECH_HAVE_AVX2_KERNELS)
namespace avx2 {
extern const KernelTable kTable;
}
#endif

#if defined(CECH_HAVE_NEON_KERNELS)
namespace neon {
extern const KernelTable kTable;
}
#endif

}  // namespace cech::kernels
