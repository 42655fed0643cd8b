#include "monogerm/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "monogerm/checked.hpp"
#include "monogerm/errors.hpp"
#include "monogerm/semigroup.hpp"

namespace monogerm {

ExponentVector Obstruction::member(Exponent n) const {
  ExponentVector v = base;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked::add(v[i], checked::mul(n, direction[i]));
  return v;
}

std::string_view to_string(Obstruction::Kind k) noexcept {
  switch (k) {
    case Obstruction::Kind::missing_pure_power: return "MissingPurePower";
    case Obstruction::Kind::non_primitive_curve: return "NonPrimitiveCurve";
    case Obstruction::Kind::missing_link: return "MissingLink";
    case Obstruction::Kind::missing_pair: return "MissingPair";
  }
  return "Unknown";
}

std::string Obstruction::describe(const MonomialMap& f) const {
  const auto& v = f.vars();
  std::ostringstream os;
  switch (kind) {
    case Kind::missing_pure_power:
      os << "no pure power of " << v[a] << "; " << v[a] << "^N is never reached";
      break;
    case Kind::non_primitive_curve:
      os << "pure powers of " << v[a] << " have gcd " << gcd << "; " << v[a] << "^(1+" << gcd
         << "N) is never reached";
      break;
    case Kind::missing_link:
      os << "no component " << v[a] << "^l*" << v[b] << "; " << v[a] << "^N*" << v[b] << " is never reached";
      break;
    case Kind::missing_pair:
      os << "no component " << v[a] << "^m*" << v[b] << "; " << v[a] << "^N*" << v[b] << " is never reached";
      break;
  }
  return os.str();
}

Exponent JoinDecomposition::lambda(std::size_t identity_var, std::size_t curve_var) const {
  for (const auto& l : links)
    if (l.identity_var == identity_var && l.curve_var == curve_var) return l.lambda;
  throw Error(Errc::invalid_argument, "no link between these variables");
}

Exponent JoinDecomposition::mu(std::size_t var_j, std::size_t var_t) const {
  for (const auto& pr : pairs)
    if (pr.var_j == var_j && pr.var_t == var_t) return pr.mu;
  throw Error(Errc::invalid_argument, "no pair component for these variables");
}

std::uint64_t JoinDecomposition::gap_coordinate_bound() const {
  // Outside this bound an exponent is reached by spending links (for an
  // identity coordinate) or pair components (for a curve coordinate) on
  // every curve coordinate still below its conductor.
  std::vector<std::uint64_t> conductor(map.n(), 0);
  for (const auto& c : curves) {
    std::vector<std::uint64_t> gens(c.exponents.begin(), c.exponents.end());
    conductor[c.var] = NumericalSemigroup::from_generators(gens).conductor();
  }
  std::uint64_t bound = 0;
  for (const std::size_t i : identity_vars) {
    std::uint64_t need = 0;
    for (const auto& c : curves)
      need = checked::add(need, checked::mul<std::uint64_t>(lambda(i, c.var), conductor[c.var] - 1));
    if (need > 0) bound = std::max(bound, need - 1);
  }
  for (const auto& ct : curves) {
    std::uint64_t need = conductor[ct.var] - 1;
    for (const auto& cj : curves) {
      if (cj.var == ct.var) continue;
      need = checked::add(need, checked::mul<std::uint64_t>(mu(ct.var, cj.var), conductor[cj.var] - 1));
    }
    bound = std::max(bound, need);
  }
  return bound;
}

// ---------------------------------------------------------------------------

namespace {

// Component with support exactly {a, b}, b-exponent exactly 1 and minimal
// a-exponent; first such index on ties.
std::optional<std::size_t> find_joining(const MonomialMap& f, std::size_t a, std::size_t b) {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < f.p(); ++k) {
    const auto& c = f.component(k);
    if (c.support_size() != 2 || c[a] == 0 || c[b] != 1) continue;
    if (!best || c[a] < f.component(*best)[a]) best = k;
  }
  return best;
}

}  // namespace

FinitenessDecision decide_finiteness(const MonomialMap& f) {
  const std::size_t n = f.n();
  const auto profile = pure_power_profile(f);

  JoinDecomposition d{f, {}, {}, {}, {}, {}, {}, {}};
  std::vector<bool> used(f.p(), false);
  auto first_equal = [&](const ExponentVector& v) -> std::size_t {
    for (std::size_t k = 0; k < f.p(); ++k)
      if (!used[k] && f.component(k) == v) return k;
    throw Error(Errc::internal_inconsistency, "pure power missing from its own profile");
  };

  for (std::size_t i = 0; i < n; ++i) {
    const auto& powers = profile[i];
    if (!powers.empty() && powers.front() == 1) {
      const std::size_t k = first_equal(ExponentVector::unit(n, i));
      used[k] = true;
      d.identity_vars.push_back(i);
      d.identity_components.push_back(k);
      continue;
    }
    if (powers.empty()) {
      return Obstruction{Obstruction::Kind::missing_pure_power, i, i, 0, ExponentVector::unit(n, i),
                         ExponentVector::unit(n, i)};
    }
    std::uint64_t g = 0;
    for (const Exponent r : powers) g = std::gcd(g, std::uint64_t{r});
    if (g != 1) {
      return Obstruction{Obstruction::Kind::non_primitive_curve, i, i, g, ExponentVector::unit(n, i),
                         ExponentVector::unit(n, i, static_cast<Exponent>(g))};
    }
    CurveBlock block{i, powers, {}};
    for (const Exponent r : powers) {
      const std::size_t k = first_equal(ExponentVector::unit(n, i, r));
      used[k] = true;
      block.components.push_back(k);
    }
    d.curves.push_back(std::move(block));
  }

  for (const std::size_t i : d.identity_vars) {
    for (const auto& c : d.curves) {
      const auto k = find_joining(f, i, c.var);
      if (!k) {
        return Obstruction{Obstruction::Kind::missing_link, i, c.var, 0, ExponentVector::unit(n, c.var),
                           ExponentVector::unit(n, i)};
      }
      d.links.push_back({i, c.var, f.component(*k)[i], *k});
    }
  }

  for (const auto& cj : d.curves) {
    for (const auto& ct : d.curves) {
      if (cj.var == ct.var) continue;
      const auto k = find_joining(f, cj.var, ct.var);
      if (!k) {
        return Obstruction{Obstruction::Kind::missing_pair, cj.var, ct.var, 0, ExponentVector::unit(n, ct.var),
                           ExponentVector::unit(n, cj.var)};
      }
      d.pairs.push_back({cj.var, ct.var, f.component(*k)[cj.var], *k});
    }
  }

  for (const auto& l : d.links) used[l.component] = true;
  for (const auto& pr : d.pairs) used[pr.component] = true;

  std::set<ExponentVector> seen;
  for (std::size_t k = 0; k < f.p(); ++k) {
    const bool repeat = !seen.insert(f.component(k)).second;
    if (used[k]) continue;
    if (repeat || f.component(k).support_size() < 2)
      d.redundant.push_back(k);
    else
      d.residual.push_back(k);
  }
  return d;
}

Verdict classify(const MonomialMap& f) {
  if (f.p() < 2 * f.n()) return OutOfTheoremScope{f.p(), 2 * f.n()};
  auto decision = decide_finiteness(f);
  if (auto* obstruction = std::get_if<Obstruction>(&decision)) return NotFinite{std::move(*obstruction)};
  auto& d = std::get<JoinDecomposition>(decision);
  if (d.corank() == 0) return Immersion{std::move(d)};
  return FiniteJoin{std::move(d)};
}

std::string_view verdict_name(const Verdict& v) noexcept {
  switch (v.index()) {
    case 0: return "immersion";
    case 1: return "finite";
    case 2: return "not_finite";
    default: return "out_of_theorem_scope";
  }
}

const JoinDecomposition* decomposition_of(const Verdict& v) noexcept {
  if (const auto* i = std::get_if<Immersion>(&v)) return &i->decomposition;
  if (const auto* j = std::get_if<FiniteJoin>(&v)) return &j->decomposition;
  return nullptr;
}

std::uint64_t min_target_dimension(std::uint64_t n, std::uint64_t q) {
  if (q > n) throw Error(Errc::invalid_argument, "corank cannot exceed the source dimension");
  const std::uint64_t base = checked::mul(n, checked::add<std::uint64_t>(q, 1));
  const std::uint64_t pairs = q == 0 ? 0 : checked::mul(q, q - 1) / 2;
  return base - pairs;
}

// ---------------------------------------------------------------------------

namespace {

// Link and pair components in emission order, each once.
std::vector<std::size_t> h_components(const JoinDecomposition& d) {
  std::vector<std::size_t> out;
  for (const auto& l : d.links) out.push_back(l.component);
  for (const auto& pr : d.pairs)
    if (std::find(out.begin(), out.end(), pr.component) == out.end()) out.push_back(pr.component);
  return out;
}

std::string list(const JoinDecomposition& d, const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ", ";
    s += format_monomial(d.map.component(idx[i]), d.map.vars());
  }
  return s + ")";
}

}  // namespace

std::string normal_form(const JoinDecomposition& d) {
  std::ostringstream os;
  if (d.corank() == 0) {
    os << "(I)";
    if (!d.residual.empty()) os << "  h=" << list(d, d.residual);
  } else {
    os << '(';
    if (!d.identity_vars.empty()) os << "I * ";
    for (std::size_t j = 0; j < d.curves.size(); ++j) os << (j ? " * " : "") << "phi_" << d.curves[j].exponents.size();
    os << ")_H";
    if (!d.identity_vars.empty()) os << "  I=" << list(d, d.identity_components);
    for (const auto& c : d.curves) os << "  phi[" << d.map.vars()[c.var] << "]=" << list(d, c.components);
    os << "  H=" << list(d, h_components(d));
    os << "  h=" << list(d, d.residual);
  }
  if (!d.redundant.empty()) os << "  redundant=" << list(d, d.redundant);
  return os.str();
}

MonomialMap normal_form_map(const JoinDecomposition& d) {
  std::vector<std::size_t> order = d.identity_components;
  for (const auto& c : d.curves) order.insert(order.end(), c.components.begin(), c.components.end());
  for (const std::size_t k : h_components(d)) order.push_back(k);
  order.insert(order.end(), d.residual.begin(), d.residual.end());
  order.insert(order.end(), d.redundant.begin(), d.redundant.end());
  std::vector<ExponentVector> comps;
  for (const std::size_t k : order) comps.push_back(d.map.component(k));
  return MonomialMap(d.map.vars(), std::move(comps));
}

}  // namespace monogerm
