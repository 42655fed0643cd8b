#include "monogerm/kernels.hpp"

namespace monogerm::kernels {
namespace {

void or_into(std::uint8_t* dst, const std::uint8_t* src, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) dst[i] |= src[i];
}

void close_under_shift(std::uint8_t* dst, std::size_t len, std::size_t period) {
  for (std::size_t k = period; k < len; ++k) dst[k] |= dst[k - period];
}

std::size_t count_zero(const std::uint8_t* p, std::size_t len) {
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < len; ++i) zeros += (p[i] == 0);
  return zeros;
}

bool all_nonzero(const std::uint8_t* p, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    if (p[i] == 0) return false;
  return true;
}

constexpr ByteKernels kScalar{Isa::scalar, or_into, close_under_shift, count_zero, all_nonzero};

}  // namespace

const ByteKernels& scalar_kernels() noexcept { return kScalar; }

}  // namespace monogerm::kernels
