// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "kernels_impl.hpp"

namespace monogerm::kernels::detail {
namespace {

constexpr std::size_t kLane = 32;

void or_into(std::uint8_t* dst, const std::uint8_t* src, std::size_t len) {
  std::size_t i = 0;
  for (; i + kLane <= len; i += kLane) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(a, b));
  }
  for (; i < len; ++i) dst[i] |= src[i];
}

void close_under_shift(std::uint8_t* dst, std::size_t len, std::size_t period) {
  std::size_t k = period;
  // A 32-byte block starting at k reads only [k - period, k - period + 32),
  // which lies strictly below k once period >= 32, so those bytes are final.
  if (period >= kLane) {
    for (; k + kLane <= len; k += kLane) {
      const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
      const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k - period));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), _mm256_or_si256(a, b));
    }
  }
  for (; k < len; ++k) dst[k] |= dst[k - period];
}

std::size_t count_zero(const std::uint8_t* p, std::size_t len) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t zeros = 0;
  std::size_t i = 0;
  for (; i + kLane <= len; i += kLane) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    const auto mask = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, zero)));
    zeros += static_cast<std::size_t>(__builtin_popcount(mask));
  }
  for (; i < len; ++i) zeros += (p[i] == 0);
  return zeros;
}

bool all_nonzero(const std::uint8_t* p, std::size_t len) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLane <= len; i += kLane) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, zero)) != 0) return false;
  }
  for (; i < len; ++i)
    if (p[i] == 0) return false;
  return true;
}

constexpr ByteKernels kAvx2{Isa::avx2, or_into, close_under_shift, count_zero, all_nonzero};

}  // namespace

const ByteKernels& avx2_kernels() noexcept { return kAvx2; }

}  // namespace monogerm::kernels::detail
