#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace monogerm {

using Exponent = std::uint32_t;

/// Exponents of one monomial x_1^{e_1} ... x_n^{e_n}.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  explicit ExponentVector(std::vector<Exponent> e) : e_(std::move(e)) {}
  ExponentVector(std::initializer_list<Exponent> e) : e_(e) {}

  static ExponentVector unit(std::size_t n, std::size_t i, Exponent power = 1) {
    ExponentVector v(n);
    v.e_[i] = power;
    return v;
  }

  std::size_t size() const noexcept { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  Exponent& operator[](std::size_t i) { return e_[i]; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }
  std::span<const Exponent> view() const noexcept { return e_; }
  const std::vector<Exponent>& entries() const noexcept { return e_; }

  std::uint64_t degree() const noexcept;
  std::size_t support_size() const noexcept;
  bool is_zero() const noexcept { return support_size() == 0; }
  Exponent max_entry() const noexcept;

  /// Componentwise <=.
  bool divides(const ExponentVector& other) const noexcept;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<Exponent> e_;
};

/// Canonical basis order: ascending total degree, ties broken so that a
/// larger exponent in an earlier variable comes first (y before z, y^2 z
/// before y z^2).
bool deglex_less(const ExponentVector& a, const ExponentVector& b) noexcept;

/// A monomial map-germ (C^n,0) -> (C^p,0), one exponent vector per target
/// coordinate. Coefficients are not represented: for componentwise-monomial
/// maps they are removed by scaling the target.
class MonomialMap {
 public:
  /// Validates: n >= 1, one distinct identifier per variable, p >= 1, every
  /// component of length n and nonzero (ZeroComponent otherwise).
  MonomialMap(std::vector<std::string> vars, std::vector<ExponentVector> components);

  /// Convenience: variables named x,y,z (n <= 3) or x1..xn.
  static MonomialMap with_default_names(std::size_t n, std::vector<ExponentVector> components);

  std::size_t n() const noexcept { return vars_.size(); }
  std::size_t p() const noexcept { return components_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::vector<ExponentVector>& components() const noexcept { return components_; }
  const ExponentVector& component(std::size_t i) const { return components_[i]; }

  /// Indices of components that repeat an earlier one. They count toward p.
  std::vector<std::size_t> duplicate_components() const;

  Exponent max_exponent() const noexcept;

  friend bool operator==(const MonomialMap&, const MonomialMap&) = default;

 private:
  std::vector<std::string> vars_;
  std::vector<ExponentVector> components_;
};

std::vector<std::string> default_variable_names(std::size_t n);

/// Parses `vars <id>(,<id>)*; <component>(,<component>)*` where a component
/// is an optional integer coefficient followed by `<term>(*<term>)*` and a
/// term is `<id>` or `<id>^<posint>`. Whitespace is insignificant.
MonomialMap parse_map(std::string_view text);

/// Inverse of parse_map: "vars x,y; x, y^4, y^5, x*y".
std::string format_map(const MonomialMap& f);

/// "x*y^3" for a single exponent vector over the map's variables ("1" for 0).
std::string format_monomial(const ExponentVector& v, std::span<const std::string> vars);

/// JSON interchange: {"n": int, "vars": [string], "components": [[int,...],...]}.
nlohmann::json to_json(const MonomialMap& f);
MonomialMap map_from_json(const nlohmann::json& j);

/// Accepts either the surface syntax or the JSON interchange document.
MonomialMap parse_map_any(std::string_view text);

/// n minus the number of variables x_i whose unit vector e_i is a component.
std::size_t corank(const MonomialMap& f);

/// For each variable i, the sorted exponents r with r*e_i a component.
std::vector<std::vector<Exponent>> pure_power_profile(const MonomialMap& f);

}  // namespace monogerm
