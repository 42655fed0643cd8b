#include "monogerm/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "monogerm/checked.hpp"
#include "monogerm/errors.hpp"

namespace monogerm {
namespace {

using checked::add;
using checked::mul;
using checked::sub;

std::int64_t sum_of(std::span<const Exponent> v) {
  std::int64_t s = 0;
  for (const Exponent e : v) s = add<std::int64_t>(s, e);
  return s;
}

// sum_{j=1}^{upto} C(top + j, j)
std::int64_t binomial_run(std::int64_t top, std::int64_t upto) {
  std::int64_t s = 0;
  for (std::int64_t j = 1; j <= upto; ++j) s = add(s, checked::binomial(top + j, j));
  return s;
}

std::int64_t curve_delta(std::span<const Exponent> curve) {
  const std::vector<std::uint64_t> gens(curve.begin(), curve.end());
  return checked::narrow<std::int64_t>(NumericalSemigroup::from_generators(gens).delta());
}

std::int64_t as_signed(std::uint64_t v) { return checked::narrow<std::int64_t>(v); }

}  // namespace

Kappas kappas(std::int64_t n, std::int64_t m1, std::span<const Exponent> lambdas) {
  if (n < 2 || m1 < 2) throw Error(Errc::invalid_argument, "kappas need n >= 2 and m1 >= 2");
  if (lambdas.size() != static_cast<std::size_t>(n - 1))
    throw Error(Errc::invalid_argument, "expected n-1 link exponents");
  Kappas k;
  const std::int64_t s = sum_of(lambdas);
  k.lambda_min = *std::min_element(lambdas.begin(), lambdas.end());
  k.lambda = sub(add<std::int64_t>(mul(m1 - 1, s), 1), n);
  k.kappa1 = sub(sub(add(s, binomial_run(n - 2, k.lambda_min)), mul(n - 1, k.lambda_min)), n - 2);
  k.kappa2 = add<std::int64_t>(binomial_run(n - 2, k.lambda), 1);
  k.kappa3 = s - n;
  return k;
}

// ---------------------------------------------------------------------------

std::optional<std::int64_t> BoundReport::display_lower() const {
  if (!lower) return std::nullopt;
  return std::max<std::int64_t>(*lower, 0);
}

bool BoundReport::consistent() const {
  if (lower && upper && *lower > *upper) return false;
  if (exact && lower && *exact < *lower) return false;
  if (exact && upper && *exact > *upper) return false;
  return true;
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j;
  j["quantity"] = r.quantity;
  j["lower"] = r.lower ? nlohmann::json(*r.lower) : nlohmann::json(nullptr);
  j["upper"] = r.upper ? nlohmann::json(*r.upper) : nlohmann::json(nullptr);
  j["exact"] = r.exact ? nlohmann::json(*r.exact) : nlohmann::json(nullptr);
  j["values"] = r.values;
  j["notes"] = r.notes;
  return j;
}

BoundReport bound_report_from_json(const nlohmann::json& j) {
  auto opt = [&](const char* key) -> std::optional<std::int64_t> {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    if (!j[key].is_number_integer()) throw Error(Errc::schema_error, std::string("bound report: bad '") + key + "'");
    return j[key].get<std::int64_t>();
  };
  if (!j.is_object() || !j.contains("quantity") || !j["quantity"].is_string())
    throw Error(Errc::schema_error, "bound report: missing 'quantity'");
  BoundReport r;
  r.quantity = j["quantity"].get<std::string>();
  r.lower = opt("lower");
  r.upper = opt("upper");
  r.exact = opt("exact");
  try {
    if (j.contains("values")) r.values = j["values"].get<std::map<std::string, std::int64_t>>();
    if (j.contains("notes")) r.notes = j["notes"].get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::schema_error, std::string("bound report: ") + e.what());
  }
  return r;
}

// ---------------------------------------------------------------------------

BoundReport delta_bounds_corank_one(const CorankOneSpec& spec, bool with_exact, const DeltaOptions& options) {
  const MonomialMap f = elementary_corank_one(spec);  // validates the spec
  const Kappas k = kappas(static_cast<std::int64_t>(spec.n), spec.curve.front(), spec.lambdas);
  const std::int64_t dphi = curve_delta(spec.curve);
  BoundReport r;
  r.quantity = "delta";
  r.lower = mul(k.kappa1, dphi);
  r.upper = mul(k.kappa2, dphi);
  r.values = {{"delta_curve", dphi}, {"kappa1", k.kappa1}, {"kappa2", k.kappa2}, {"lambda", k.lambda},
              {"lambda_min", k.lambda_min}};
  r.notes = {"lower = kappa1 * delta_curve", "upper = kappa2 * delta_curve"};
  if (with_exact) r.exact = as_signed(finite_delta(f, options));
  return r;
}

BoundReport aecod_bounds_corank_one(const CorankOneSpec& spec) {
  elementary_corank_one(spec);
  const auto n = static_cast<std::int64_t>(spec.n);
  const auto kk = static_cast<std::int64_t>(spec.curve.size());
  const std::int64_t m1 = spec.curve.front();
  const Kappas k = kappas(n, m1, spec.lambdas);
  const std::int64_t dphi = curve_delta(spec.curve);
  BoundReport r;
  r.quantity = "aecod";
  r.lower = add(mul(mul(n - 1, k.kappa3), dphi), mul(mul(kk, m1 - 2), k.kappa3 + 2));
  r.upper = mul(mul(2 * n + kk - 2, k.kappa2), dphi);
  r.values = {{"delta_curve", dphi}, {"kappa2", k.kappa2}, {"kappa3", k.kappa3}};
  r.notes = {"lower = (n-1) kappa3 delta_curve + k (m1-2)(kappa3+2); may be negative",
             "upper = (2n+k-2) kappa2 delta_curve"};
  return r;
}

BoundReport delta_bounds_full_corank(std::span<const NumericalSemigroup> curves) {
  if (curves.empty()) throw Error(Errc::invalid_argument, "at least one curve is needed");
  std::int64_t lower = 0;
  std::int64_t c = 0;
  for (const auto& s : curves) {
    lower = add(lower, as_signed(s.delta()));
    c = add(c, as_signed(s.conductor()));
  }
  const auto n = static_cast<std::int64_t>(curves.size());
  BoundReport r;
  r.quantity = "delta";
  r.lower = lower;
  r.upper = binomial_run(n - 1, c);
  r.values = {{"conductor_sum", c}};
  r.notes = {"lower = sum of curve deltas", "upper = sum_{j=1}^{c} C(n+j-1, j), c = sum of conductors"};
  return r;
}

BoundReport delta_bounds_full_corank(const FullCorankSpec& spec, bool with_exact, const DeltaOptions& options) {
  const MonomialMap f = elementary_full_corank(spec);
  std::vector<NumericalSemigroup> curves;
  for (const auto& c : spec.curves) {
    const std::vector<std::uint64_t> gens(c.begin(), c.end());
    curves.push_back(NumericalSemigroup::from_generators(gens));
  }
  BoundReport r = delta_bounds_full_corank(curves);
  if (with_exact) r.exact = as_signed(finite_delta(f, options));
  return r;
}

// ---------------------------------------------------------------------------

std::int64_t double_points_quasihomogeneous(std::span<const std::int64_t> weights,
                                            std::span<const std::int64_t> degrees) {
  const std::size_t n = weights.size();
  if (n == 0) throw Error(Errc::invalid_argument, "at least one weight is needed");
  if (degrees.size() != n + 1) throw Error(Errc::invalid_argument, "expected n+1 weighted degrees");
  for (const auto w : weights)
    if (w <= 0) throw Error(Errc::invalid_argument, "weights must be positive");
  const std::int64_t wn = weights[n - 1];
  checked::int128 num = 1;
  for (const auto d : degrees) {
    num *= static_cast<checked::int128>(d - wn);
    if (num > INT64_MAX || num < INT64_MIN) throw Error(Errc::overflow, "double-point numerator overflows");
  }
  std::int64_t den = mul<std::int64_t>(2, mul(wn, wn));
  for (std::size_t i = 0; i + 1 < n; ++i) den = mul(den, weights[i]);
  if (num % den != 0)
    throw Error(Errc::non_integer_result, "weighted double-point count " + std::to_string(static_cast<std::int64_t>(num)) +
                                              "/" + std::to_string(den) + " is not an integer");
  return static_cast<std::int64_t>(num / den);
}

std::int64_t double_points(const MonomialMap& f, std::span<const std::int64_t> weights) {
  if (f.p() != 2 * f.n()) throw Error(Errc::invalid_argument, "double points are counted for maps into dimension 2n");
  if (!weights.empty() && weights.size() != f.n()) throw Error(Errc::dimension_mismatch, "one weight per variable");
  auto decision = decide_finiteness(f);
  const auto* d = std::get_if<JoinDecomposition>(&decision);
  if (!d) throw Error(Errc::not_finite, "the map is not A-finite");
  if (d->corank() != 1) throw Error(Errc::invalid_argument, "double-point formula needs corank 1");
  if (!d->redundant.empty()) throw Error(Errc::invalid_argument, "map has repeated or redundant components");

  std::vector<std::int64_t> w(f.n(), 1);
  if (!weights.empty()) w.assign(weights.begin(), weights.end());
  // Weights ordered as (identity variables..., y).
  std::vector<std::int64_t> ordered;
  for (const std::size_t i : d->identity_vars) ordered.push_back(w[i]);
  ordered.push_back(w[d->curves.front().var]);

  std::vector<bool> identity(f.p(), false);
  for (const std::size_t k : d->identity_components) identity[k] = true;
  std::vector<std::int64_t> degrees;
  for (std::size_t k = 0; k < f.p(); ++k) {
    if (identity[k]) continue;
    std::int64_t deg = 0;
    for (std::size_t i = 0; i < f.n(); ++i) deg = add(deg, mul<std::int64_t>(w[i], f.component(k)[i]));
    degrees.push_back(deg);
  }
  return double_points_quasihomogeneous(ordered, degrees);
}

std::int64_t double_points_join_curve(std::span<const Exponent> lambdas, std::int64_t m1, std::int64_t m2) {
  if (m1 < 2 || m2 <= m1) throw Error(Errc::invalid_argument, "need 2 <= m1 < m2");
  if (std::gcd(m1, m2) != 1)
    throw Error(Errc::not_coprime, "m1 and m2 share the factor " + std::to_string(std::gcd(m1, m2)), std::gcd(m1, m2));
  std::int64_t d = mul(m1 - 1, m2 - 1) / 2;
  for (const Exponent l : lambdas) d = mul<std::int64_t>(d, l);
  return d;
}

std::optional<std::int64_t> divided_difference_codim(std::int64_t m1, std::int64_t m2) {
  if (m1 < 2 || m2 < 2) throw Error(Errc::invalid_argument, "need m1, m2 >= 2");
  if (std::gcd(m1, m2) > 1) return std::nullopt;  // a common root of unity: non-isolated zero
  return mul(m1 - 1, m2 - 1);
}

BoundReport fold_report(const MonomialMap& f, const DeltaOptions& options) {
  const auto n = static_cast<std::int64_t>(f.n());
  const auto p = static_cast<std::int64_t>(f.p());
  if (corank(f) != 1) throw Error(Errc::not_a_fold, "a fold projection needs corank 1");
  const auto profile = pure_power_profile(f);
  std::size_t y = 0;
  for (std::size_t i = 0; i < f.n(); ++i)
    if (profile[i].empty() || profile[i].front() != 1) y = i;
  if (profile[y].empty() || profile[y].front() != 2)
    throw Error(Errc::not_a_fold, "no component " + f.vars()[y] + "^2, so no fold projection");
  if (p < 2 * n) throw Error(Errc::invalid_argument, "fold bounds need p >= 2n");

  const auto res = delta(f, options);
  if (std::holds_alternative<DeltaInfinite>(res)) throw Error(Errc::not_finite, "delta invariant is infinite");
  if (std::holds_alternative<DeltaInconclusive>(res))
    throw Error(Errc::box_too_large, "delta not certified within the cell cap");
  const auto dl = as_signed(std::get<DeltaFinite>(res).delta);

  BoundReport r;
  r.quantity = "aecod";
  r.lower = mul(p - 2 * n + 1, dl);
  r.upper = sub(mul(p - n, dl), std::int64_t{1});
  r.values["delta"] = dl;
  r.values["conditional_upper"] = sub(mul(p - n, dl), n - 1);
  r.notes = {"lower = (p-2n+1) delta", "upper = (p-n) delta - 1",
             "conditional_upper = (p-n) delta - n + 1 requires independence of v_1..v_{n-1} (not verified)"};
  if (p == 2 * n) {
    r.values["double_points"] = double_points(f);
    r.notes.push_back("double_points = delta for a fold projection");
  }
  return r;
}

BoundReport projection_bound(std::int64_t aecod_gk, std::int64_t p, std::int64_t k, std::int64_t delta,
                             bool gk_stable, std::optional<std::int64_t> n) {
  if (aecod_gk < 0 || p < 0 || k < 0 || delta < 0 || k > p || (n && *n < 1))
    throw Error(Errc::invalid_argument, "projection bound inputs must be non-negative with k <= p");
  BoundReport r;
  r.quantity = "aecod";
  const std::int64_t full = mul(p - k, delta);
  r.upper = add(aecod_gk, full);
  r.notes = {"upper = aecod(g_k) + (p-k) delta"};
  if (gk_stable && n) {
    r.lower = sub(full, mul(*n - 1, delta));
    r.upper = std::min(*r.upper, full - 1);
    r.notes = {"g_k stable: aecod = (p-k) delta - dim Ker, with 1 <= dim Ker <= (n-1) delta"};
  }
  return r;
}

std::int64_t join_delta_lower(std::int64_t delta_f, std::int64_t delta_g) {
  if (delta_f < 0 || delta_g < 0) throw Error(Errc::invalid_argument, "deltas must be finite and non-negative");
  return add(delta_f, delta_g);
}

// ---------------------------------------------------------------------------

std::optional<CorankOneSpec> corank_one_spec_of(const JoinDecomposition& d) {
  if (d.corank() != 1 || d.map.n() < 2 || !d.residual.empty() || !d.redundant.empty()) return std::nullopt;
  CorankOneSpec s;
  s.n = d.map.n();
  s.curve = d.curves.front().exponents;
  for (const std::size_t i : d.identity_vars) s.lambdas.push_back(d.lambda(i, d.curves.front().var));
  return s;
}

std::optional<FullCorankSpec> full_corank_spec_of(const JoinDecomposition& d) {
  const std::size_t n = d.map.n();
  if (n < 2 || d.corank() != n || !d.residual.empty() || !d.redundant.empty()) return std::nullopt;
  FullCorankSpec s;
  s.mu.assign(n, std::vector<Exponent>(n, 0));
  for (const auto& c : d.curves) s.curves.push_back(c.exponents);
  for (const auto& pr : d.pairs) s.mu[pr.var_j][pr.var_t] = pr.mu;
  return s;
}

std::vector<BoundReport> applicable_bounds(const MonomialMap& f, const DeltaOptions& options) {
  std::vector<BoundReport> out;
  const auto decision = decide_finiteness(f);
  const auto* d = std::get_if<JoinDecomposition>(&decision);
  if (!d) return out;
  const auto exact = as_signed(finite_delta(f, options));

  if (const auto spec = corank_one_spec_of(*d)) {
    BoundReport r = delta_bounds_corank_one(*spec);
    r.exact = exact;
    out.push_back(std::move(r));
    out.push_back(aecod_bounds_corank_one(*spec));
  }
  if (const auto spec = full_corank_spec_of(*d)) {
    BoundReport r = delta_bounds_full_corank(*spec);
    r.exact = exact;
    out.push_back(std::move(r));
  }
  if (f.p() >= 2 * f.n()) {
    BoundReport le;
    le.quantity = "aecod";
    le.upper = mul(static_cast<std::int64_t>(f.p()), exact);
    le.values["le_codimension"] = *le.upper;
    le.notes = {"upper = L_e-codimension = p * delta"};
    out.push_back(std::move(le));
  }
  if (d->corank() == 1 && f.p() >= 2 * f.n() && d->curves.front().exponents.front() == 2)
    out.push_back(fold_report(f, options));
  return out;
}

}  // namespace monogerm
