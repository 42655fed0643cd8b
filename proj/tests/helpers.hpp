#pragma once

#include <optional>

#include "monogerm/errors.hpp"

/// The error code thrown by `fn`, or nothing if it returns normally.
template <class Fn>
std::optional<monogerm::Errc> error_of(Fn&& fn) {
  try {
    fn();
  } catch (const monogerm::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
