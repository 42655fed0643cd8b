#include "monogerm/errors.hpp"

namespace monogerm {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::empty_generators: return "EmptyGenerators";
    case Errc::non_primitive: return "NonPrimitive";
    case Errc::modulus_not_in_semigroup: return "ModulusNotInSemigroup";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::zero_component: return "ZeroComponent";
    case Errc::unknown_variable: return "UnknownVariable";
    case Errc::zero_coefficient: return "ZeroCoefficient";
    case Errc::schema_error: return "SchemaError";
    case Errc::box_too_large: return "BoxTooLarge";
    case Errc::not_finite: return "NotFinite";
    case Errc::internal_inconsistency: return "InternalInconsistency";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::residual_on_axis: return "ResidualOnAxis";
    case Errc::non_integer_result: return "NonIntegerResult";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::not_a_fold: return "NotAFold";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::overflow: return "Overflow";
    case Errc::resource_limit: return "ResourceLimit";
  }
  return "Unknown";
}

int exit_code(Errc code) noexcept {
  switch (code) {
    case Errc::internal_inconsistency:
      return 3;
    case Errc::box_too_large:
    case Errc::resource_limit:
      return 4;
    default:
      return 2;
  }
}

}  // namespace monogerm
