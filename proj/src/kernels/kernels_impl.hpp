#pragma once

#include "monogerm/kernels.hpp"

namespace monogerm::kernels::detail {

#if defined(MONOGERM_HAVE_AVX2)
const ByteKernels& avx2_kernels() noexcept;
#endif

#if defined(MONOGERM_HAVE_NEON)
const ByteKernels& neon_kernels() noexcept;
#endif

}  // namespace monogerm::kernels::detail
