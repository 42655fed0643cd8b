#include <arm_neon.h>

#include "kernels_impl.hpp"

namespace monogerm::kernels::detail {
namespace {

constexpr std::size_t kLane = 16;

void or_into(std::uint8_t* dst, const std::uint8_t* src, std::size_t len) {
  std::size_t i = 0;
  for (; i + kLane <= len; i += kLane) vst1q_u8(dst + i, vorrq_u8(vld1q_u8(dst + i), vld1q_u8(src + i)));
  for (; i < len; ++i) dst[i] |= src[i];
}

void close_under_shift(std::uint8_t* dst, std::size_t len, std::size_t period) {
  std::size_t k = period;
  if (period >= kLane) {
    for (; k + kLane <= len; k += kLane)
      vst1q_u8(dst + k, vorrq_u8(vld1q_u8(dst + k), vld1q_u8(dst + k - period)));
  }
  for (; k < len; ++k) dst[k] |= dst[k - period];
}

std::size_t count_zero(const std::uint8_t* p, std::size_t len) {
  std::size_t zeros = 0;
  std::size_t i = 0;
  for (; i + kLane <= len; i += kLane) {
    // ceq yields 0xFF per zero byte; shifting right by 7 leaves 1.
    const uint8x16_t z = vshrq_n_u8(vceqzq_u8(vld1q_u8(p + i)), 7);
    zeros += vaddvq_u8(z);
  }
  for (; i < len; ++i) zeros += (p[i] == 0);
  return zeros;
}

bool all_nonzero(const std::uint8_t* p, std::size_t len) {
  std::size_t i = 0;
  for (; i + kLane <= len; i += kLane)
    if (vmaxvq_u8(vceqzq_u8(vld1q_u8(p + i))) != 0) return false;
  for (; i < len; ++i)
    if (p[i] == 0) return false;
  return true;
}

constexpr ByteKernels kNeon{Isa::neon, or_into, close_under_shift, count_zero, all_nonzero};

}  // namespace

const ByteKernels& neon_kernels() noexcept { return kNeon; }

}  // namespace monogerm::kernels::detail
