#pragma once

// Byte-flag kernels behind the exponent-monoid membership table.
//
// Flags are 0/1 bytes. Every kernel has a scalar reference implementation;
// vector variants (AVX2 on x86-64, NEON on AArch64) are compiled when the
// target supports them and picked at runtime. All variants must produce
// bit-identical results to the scalar reference.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace monogerm::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa) noexcept;

struct ByteKernels {
  Isa isa;

  // dst[i] |= src[i] for i < len. The ranges must not overlap.
  void (*or_into)(std::uint8_t* dst, const std::uint8_t* src, std::size_t len);

  // dst[k] |= dst[k - period] for k = period .. len-1, in increasing k, so
  // that the result is closed under adding `period`. period >= 1.
  void (*close_under_shift)(std::uint8_t* dst, std::size_t len, std::size_t period);

  // Number of zero bytes in [p, p + len).
  std::size_t (*count_zero)(const std::uint8_t* p, std::size_t len);

  // True iff no byte in [p, p + len) is zero.
  bool (*all_nonzero)(const std::uint8_t* p, std::size_t len);
};

const ByteKernels& scalar_kernels() noexcept;

/// Variants compiled into this build and supported by the running CPU.
/// The scalar reference is always first.
std::vector<const ByteKernels*> available_kernels();

/// The fastest available variant. The environment variable MONOGERM_ISA
/// (scalar|avx2|neon) pins the choice when that variant is available.
const ByteKernels& active_kernels();

}  // namespace monogerm::kernels
