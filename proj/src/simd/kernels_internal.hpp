#pragma once

#include "lrtag/simd/kernels.hpp"

namespace lrtag::simd::detail {

extern const KernelTable kScalarTable;
#if defined(LRTAG_HAVE_AVX2_KERNELS)
extern const KernelTable kAvx2Table;
#endif

}  // namespace lrtag::simd::detail
