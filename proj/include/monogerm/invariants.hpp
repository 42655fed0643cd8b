#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "monogerm/classify.hpp"
#include "monogerm/join.hpp"
#include "monogerm/monoid.hpp"
#include "monogerm/semigroup.hpp"

namespace monogerm {

struct Kappas {
  std::int64_t kappa1 = 0;
  std::int64_t kappa2 = 0;
  std::int64_t kappa3 = 0;
  std::int64_t lambda = 0;
  std::int64_t lambda_min = 0;
};

/// Constants of the corank-1 join (x, phi(y), x_i^{l_i} y) with curve
/// multiplicity m1:
///   lambda = (m1-1) sum l_i - n + 1,
///   kappa1 = sum l_i + sum_{j=1}^{l_min} C(n+j-2, j) - (n-1) l_min - n + 2,
///   kappa2 = sum_{j=1}^{lambda} C(n+j-2, j) + 1,
///   kappa3 = sum l_i - n.
Kappas kappas(std::int64_t n, std::int64_t m1, std::span<const Exponent> lambdas);

/// An interval estimate for one quantity. `lower` keeps its raw value even
/// when negative; use display_lower() for printing.
struct BoundReport {
  std::string quantity;
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;
  std::optional<std::int64_t> exact;
  std::map<std::string, std::int64_t> values;  // auxiliary named numbers
  std::vector<std::string> notes;              // how each bound was obtained

  std::optional<std::int64_t> display_lower() const;
  /// lower <= upper and lower <= exact <= upper for the fields present.
  bool consistent() const;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

nlohmann::json to_json(const BoundReport& r);
BoundReport bound_report_from_json(const nlohmann::json& j);

/// kappa1 * delta(curve) <= delta(f) <= kappa2 * delta(curve). With
/// `with_exact`, the gap count of the constructed map is filled in.
BoundReport delta_bounds_corank_one(const CorankOneSpec& spec, bool with_exact = false,
                                    const DeltaOptions& options = {});

/// (n-1) k3 d + k (m1-2)(k3+2) <= A_e-cod <= (2n+k-2) k2 d, d = delta(curve).
BoundReport aecod_bounds_corank_one(const CorankOneSpec& spec);

/// sum delta(curve_j) <= delta <= sum_{j=1}^{c} C(n+j-1, j), c the sum of
/// the conductors.
BoundReport delta_bounds_full_corank(std::span<const NumericalSemigroup> curves);
BoundReport delta_bounds_full_corank(const FullCorankSpec& spec, bool with_exact = false,
                                     const DeltaOptions& options = {});

/// prod_{i=n}^{2n} (d_i - w_n) / (2 w_1 ... w_{n-1} w_n^2), where w_n is the
/// weight of the non-identity variable and d_n..d_{2n} the weighted degrees
/// of the n+1 non-identity components. NonIntegerResult if it does not divide.
std::int64_t double_points_quasihomogeneous(std::span<const std::int64_t> weights,
                                            std::span<const std::int64_t> degrees);

/// The same count for a corank-1 monomial map into dimension 2n, with the
/// variable weights given in the map's own variable order (all ones when
/// empty). Any positive weights make a monomial map quasihomogeneous.
std::int64_t double_points(const MonomialMap& f, std::span<const std::int64_t> weights = {});

/// (m1-1)(m2-1)/2 times the product of `lambdas` (1 for an empty list).
/// Requires 2 <= m1 < m2; NotCoprime when gcd(m1, m2) > 1.
std::int64_t double_points_join_curve(std::span<const Exponent> lambdas, std::int64_t m1, std::int64_t m2);

/// Colength (m1-1)(m2-1) of the ideal generated by the divided differences
/// (z^m - y^m)/(z - y) for m = m1, m2; empty (infinite) when gcd(m1,m2) > 1.
std::optional<std::int64_t> divided_difference_codim(std::int64_t m1, std::int64_t m2);

/// For a finite map of corank 1 with y^2 among its components (a fold
/// projection (x, y^2)): delta, d(f) = delta when p = 2n, the A_e-codimension
/// interval [(p-2n+1) delta, (p-n) delta - 1], and the conditional bound
/// (p-n) delta - n + 1 under "values" (valid only when the module generators
/// v_1..v_{n-1} are independent; not checked). NotAFold / NotFinite.
BoundReport fold_report(const MonomialMap& f, const DeltaOptions& options = {});

/// A_e-cod(f) <= aecod_gk + (p-k) delta for a splitting f ~ (g_k, h). When
/// g_k is stable and n is known: [(p-k) delta - (n-1) delta, (p-k) delta - 1],
/// from 1 <= dim Ker <= (n-1) delta.
BoundReport projection_bound(std::int64_t aecod_gk, std::int64_t p, std::int64_t k, std::int64_t delta,
                             bool gk_stable, std::optional<std::int64_t> n = std::nullopt);

/// delta_F + delta_G: a lower bound for the join when H vanishes on the axes.
std::int64_t join_delta_lower(std::int64_t delta_f, std::int64_t delta_g);

/// The corank-1 spec a decomposition realizes exactly (no residual or
/// redundant components), if any.
std::optional<CorankOneSpec> corank_one_spec_of(const JoinDecomposition& d);
std::optional<FullCorankSpec> full_corank_spec_of(const JoinDecomposition& d);

/// Every report above that applies to f.
std::vector<BoundReport> applicable_bounds(const MonomialMap& f, const DeltaOptions& options = {});

}  // namespace monogerm
