#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "monogerm/germ.hpp"

namespace monogerm {

/// Why the exponent monoid of a map has infinite complement, together with a
/// family of exponents base + N*direction (N >= 0) that all stay outside it.
struct Obstruction {
  enum class Kind {
    missing_pure_power,   // variable `a` has no pure-power component
    non_primitive_curve,  // pure powers of `a` share the factor `gcd`
    missing_link,         // no component x_a^l * y_b with y_b-exponent 1
    missing_pair,         // no component y_a^m * y_b with y_b-exponent 1
  };

  Kind kind;
  std::size_t a = 0;
  std::size_t b = 0;
  std::uint64_t gcd = 0;
  ExponentVector base;
  ExponentVector direction;

  /// Member N of the witness family.
  ExponentVector member(Exponent n) const;
  std::string describe(const MonomialMap& f) const;

  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

std::string_view to_string(Obstruction::Kind k) noexcept;

struct CurveBlock {
  std::size_t var = 0;
  std::vector<Exponent> exponents;     // m_1 < m_2 < ..., gcd 1
  std::vector<std::size_t> components;  // parallel to exponents
};

/// Component x_i^lambda * y_j.
struct LinkEntry {
  std::size_t identity_var = 0;
  std::size_t curve_var = 0;
  Exponent lambda = 0;
  std::size_t component = 0;
};

/// Component y_j^mu * y_t (y_t-exponent exactly 1). A component y_j*y_t
/// serves both ordered pairs (j,t) and (t,j).
struct PairEntry {
  std::size_t var_j = 0;
  std::size_t var_t = 0;
  Exponent mu = 0;
  std::size_t component = 0;
};

/// Elementary-join normal form (I * phi_{k_1} * ... * phi_{k_q})_H of a map
/// whose exponent monoid has finite complement. Components are referenced by
/// index into `map`; every index lands in exactly one block.
struct JoinDecomposition {
  MonomialMap map;
  std::vector<std::size_t> identity_vars;
  std::vector<std::size_t> identity_components;  // the e_i, parallel to identity_vars
  std::vector<CurveBlock> curves;
  std::vector<LinkEntry> links;   // one per (identity var, curve var)
  std::vector<PairEntry> pairs;   // one per ordered pair of curve vars
  std::vector<std::size_t> residual;   // support >= 2, unused by links/pairs
  std::vector<std::size_t> redundant;  // repeated components and pure powers of identity vars

  std::size_t corank() const noexcept { return curves.size(); }
  Exponent lambda(std::size_t identity_var, std::size_t curve_var) const;
  Exponent mu(std::size_t var_j, std::size_t var_t) const;

  /// Upper bound on any coordinate of an exponent outside the monoid,
  /// derived from the link/pair/conductor data.
  std::uint64_t gap_coordinate_bound() const;
};

/// Decides whether N^n minus the exponent monoid of f is finite, for any p.
/// Finite iff every variable either has a linear component or a primitive
/// set of pure powers, each identity/curve pair is linked with
/// curve-exponent 1, and each ordered pair of curve variables is joined
/// with exponent 1 on the second one.
using FinitenessDecision = std::variant<JoinDecomposition, Obstruction>;
FinitenessDecision decide_finiteness(const MonomialMap& f);

struct Immersion {
  JoinDecomposition decomposition;
};
struct FiniteJoin {
  JoinDecomposition decomposition;
};
struct NotFinite {
  Obstruction reason;
};
struct OutOfTheoremScope {
  std::size_t p = 0;
  std::size_t two_n = 0;
};

using Verdict = std::variant<Immersion, FiniteJoin, NotFinite, OutOfTheoremScope>;

/// A-finiteness of a monomial germ with p >= 2n; no verdict for p < 2n.
Verdict classify(const MonomialMap& f);

std::string_view verdict_name(const Verdict& v) noexcept;
const JoinDecomposition* decomposition_of(const Verdict& v) noexcept;

/// Least target dimension n(q+1) - q(q-1)/2 of an A-finite monomial germ of
/// corank q on n variables. Requires 0 <= q <= n.
std::uint64_t min_target_dimension(std::uint64_t n, std::uint64_t q);

/// Printable normal form, e.g.
/// "(I * phi_2 * phi_2)_H  I=(x)  phi[y]=(y^2, y^3)  phi[z]=(z^2, z^3)  H=(x*y, x*z, y*z)  h=()".
std::string normal_form(const JoinDecomposition& d);

/// The normal-form map itself: identity, curves, links, pairs, residual and
/// finally the redundant components, so p and the exponent monoid are kept.
MonomialMap normal_form_map(const JoinDecomposition& d);

}  // namespace monogerm
