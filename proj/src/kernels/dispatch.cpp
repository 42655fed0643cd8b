#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace monogerm::kernels {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

std::vector<const ByteKernels*> available_kernels() {
  std::vector<const ByteKernels*> out{&scalar_kernels()};
#if defined(MONOGERM_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) out.push_back(&detail::avx2_kernels());
#endif
#if defined(MONOGERM_HAVE_NEON)
  out.push_back(&detail::neon_kernels());
#endif
  return out;
}

namespace {

const ByteKernels& select() {
  const auto all = available_kernels();
  if (const char* pinned = std::getenv("MONOGERM_ISA")) {
    for (const ByteKernels* k : all)
      if (to_string(k->isa) == std::string_view(pinned)) return *k;
  }
  return *all.back();
}

}  // namespace

const ByteKernels& active_kernels() {
  static const ByteKernels& chosen = select();
  return chosen;
}

}  // namespace monogerm::kernels
