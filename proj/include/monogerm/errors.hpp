#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace monogerm {

enum class Errc {
  // semigroup
  empty_generators,
  non_primitive,
  modulus_not_in_semigroup,
  // germ
  syntax_error,
  zero_component,
  unknown_variable,
  zero_coefficient,
  schema_error,
  // monoid
  box_too_large,
  not_finite,
  internal_inconsistency,
  // join
  dimension_mismatch,
  invalid_spec,
  residual_on_axis,
  // invariants
  non_integer_result,
  not_coprime,
  not_a_fold,
  // shared
  invalid_argument,
  overflow,
  resource_limit,
};

std::string_view to_string(Errc code) noexcept;

/// Process exit status for an error escaping to the command line:
/// 2 for bad input, 3 for an internal inconsistency, 4 for a resource cap.
int exit_code(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::int64_t detail = 0)
      : std::runtime_error(what), code_(code), detail_(detail) {}

  Errc code() const noexcept { return code_; }

  // Error-specific payload: the gcd for non_primitive, the byte offset for
  // syntax_error, zero otherwise.
  std::int64_t detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::int64_t detail_;
};

}  // namespace monogerm
