#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "monogerm/errors.hpp"

// Overflow-checked integer arithmetic. Every counting formula in the library
// goes through these; wraparound is never an acceptable answer.
namespace monogerm::checked {

__extension__ typedef __int128 int128;

template <std::integral T>
T add(T a, T b) {
  T r{};
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::overflow, "integer overflow in addition");
  return r;
}

template <std::integral T>
T sub(T a, T b) {
  T r{};
  if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::overflow, "integer overflow in subtraction");
  return r;
}

template <std::integral T>
T mul(T a, T b) {
  T r{};
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::overflow, "integer overflow in multiplication");
  return r;
}

template <std::integral To, std::integral From>
To narrow(From v) {
  To r{};
  if (__builtin_add_overflow(v, From{0}, &r)) throw Error(Errc::overflow, "integer does not fit target type");
  return r;
}

/// Exact binomial coefficient C(n, k) for 0 <= k; C(n, k) = 0 when k > n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0) throw Error(Errc::invalid_argument, "binomial of negative argument");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step.
    int128 t = static_cast<int128>(r) * (n - k + i) / i;
    if (t > INT64_MAX) throw Error(Errc::overflow, "binomial coefficient overflows 64 bits");
    r = static_cast<std::int64_t>(t);
  }
  return r;
}

}  // namespace monogerm::checked
