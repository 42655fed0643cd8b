#include "monogerm/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "monogerm/checked.hpp"
#include "monogerm/errors.hpp"

namespace monogerm {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

nlohmann::json opt_json(const auto& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

template <class T>
std::optional<T> opt_get(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<T>();
}

nlohmann::json monomials(const MonomialMap& f, const std::vector<std::size_t>& idx) {
  nlohmann::json a = nlohmann::json::array();
  for (const std::size_t k : idx) a.push_back(format_monomial(f.component(k), f.vars()));
  return a;
}

ExponentVector exponent_vector(const nlohmann::json& j) { return ExponentVector(j.get<std::vector<Exponent>>()); }

}  // namespace

WitnessInfo witness_info(const Obstruction& o, const MonomialMap& f) {
  return {std::string(to_string(o.kind)), o.describe(f), o.base, o.direction};
}

nlohmann::json decomposition_json(const JoinDecomposition& d) {
  const auto& f = d.map;
  const auto& v = f.vars();
  nlohmann::json j;
  j["corank"] = d.corank();
  j["normal_form"] = normal_form(d);
  nlohmann::json identity = nlohmann::json::array();
  for (const std::size_t i : d.identity_vars) identity.push_back(v[i]);
  j["identity"] = std::move(identity);
  nlohmann::json curves = nlohmann::json::array();
  for (const auto& c : d.curves) curves.push_back({{"var", v[c.var]}, {"exponents", c.exponents}});
  j["curves"] = std::move(curves);
  nlohmann::json links = nlohmann::json::array();
  for (const auto& l : d.links)
    links.push_back({{"identity", v[l.identity_var]},
                     {"curve", v[l.curve_var]},
                     {"lambda", l.lambda},
                     {"component", format_monomial(f.component(l.component), v)}});
  j["links"] = std::move(links);
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& pr : d.pairs)
    pairs.push_back({{"j", v[pr.var_j]},
                     {"t", v[pr.var_t]},
                     {"mu", pr.mu},
                     {"component", format_monomial(f.component(pr.component), v)}});
  j["pairs"] = std::move(pairs);
  j["residual"] = monomials(f, d.residual);
  j["redundant"] = monomials(f, d.redundant);
  return j;
}

nlohmann::json semigroup_json(const NumericalSemigroup& s) {
  return {{"generators", s.generators()},   {"multiplicity", s.multiplicity()}, {"apery", s.apery_sequence()},
          {"gaps", s.gaps()},               {"conductor", s.conductor()},       {"delta", s.delta()},
          {"semigroup", s.to_string()}};
}

Report analyze(const MonomialMap& f, const AnalyzeOptions& options) {
  Report r;
  r.input = f;

  auto t0 = Clock::now();
  const Verdict verdict = classify(f);
  if (options.timings) r.timings_ms["classify"] = ms_since(t0);
  r.verdict = std::string(verdict_name(verdict));
  if (const auto* d = decomposition_of(verdict)) r.decomposition = decomposition_json(*d);
  if (const auto* nf = std::get_if<NotFinite>(&verdict)) r.witness = witness_info(nf->reason, f);

  t0 = Clock::now();
  DeltaResult dr = delta(f, options.delta);
  if (options.timings) r.timings_ms["delta"] = ms_since(t0);

  const bool verdict_finite = std::holds_alternative<Immersion>(verdict) || std::holds_alternative<FiniteJoin>(verdict);
  const bool verdict_infinite = std::holds_alternative<NotFinite>(verdict);

  if (auto* fin = std::get_if<DeltaFinite>(&dr)) {
    if (verdict_infinite)
      throw Error(Errc::internal_inconsistency, "classifier reports not_finite but the gap count is certified finite");
    r.delta_status = "finite";
    r.delta = fin->delta;
    r.box_bound = fin->certified_bound;
    r.le_codimension = checked::mul<std::uint64_t>(f.p(), fin->delta);
    if (f.p() >= 2 * f.n()) r.stable = fin->delta == 0;
    const std::size_t keep = options.full_basis ? fin->basis.size() : std::min(fin->basis.size(), options.basis_cap);
    r.basis_truncated = keep < fin->basis.size();
    fin->basis.resize(keep);
    r.basis = std::move(fin->basis);
  } else if (const auto* inf = std::get_if<DeltaInfinite>(&dr)) {
    if (verdict_finite)
      throw Error(Errc::internal_inconsistency, "classifier reports a finite join but the gap set is infinite");
    r.delta_status = "infinite";
    if (f.p() >= 2 * f.n()) r.stable = false;
    if (!r.witness) r.witness = witness_info(inf->witness, f);
  } else {
    r.delta_status = "inconclusive";
    r.box_bound = std::get<DeltaInconclusive>(dr).bound_reached;
  }

  if (options.bounds && r.delta) {
    t0 = Clock::now();
    r.bounds = applicable_bounds(f, options.delta);
    if (options.timings) r.timings_ms["bounds"] = ms_since(t0);
  }
  return r;
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json j;
  j["schema_version"] = r.schema_version;
  j["input"] = to_json(r.input);
  j["map"] = format_map(r.input);
  j["verdict"] = r.verdict;
  j["delta_status"] = r.delta_status;
  j["delta"] = opt_json(r.delta);
  j["le_codimension"] = opt_json(r.le_codimension);
  j["stable"] = opt_json(r.stable);
  j["box_bound"] = opt_json(r.box_bound);
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& b : r.basis) basis.push_back(b.entries());
  j["basis"] = std::move(basis);
  j["basis_truncated"] = r.basis_truncated;
  if (r.witness) {
    j["witness"] = {{"kind", r.witness->kind},
                    {"description", r.witness->description},
                    {"base", r.witness->base.entries()},
                    {"direction", r.witness->direction.entries()}};
  } else {
    j["witness"] = nullptr;
  }
  j["decomposition"] = r.decomposition ? *r.decomposition : nlohmann::json(nullptr);
  nlohmann::json bounds = nlohmann::json::array();
  for (const auto& b : r.bounds) bounds.push_back(to_json(b));
  j["bounds"] = std::move(bounds);
  if (!r.timings_ms.empty()) j["timings_ms"] = r.timings_ms;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw Error(Errc::schema_error, "report: expected an object");
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kReportSchemaVersion)
      throw Error(Errc::schema_error, "report: unsupported schema version " + std::to_string(r.schema_version));
    r.input = map_from_json(j.at("input"));
    r.verdict = j.at("verdict").get<std::string>();
    r.delta_status = j.at("delta_status").get<std::string>();
    r.delta = opt_get<std::uint64_t>(j, "delta");
    r.le_codimension = opt_get<std::uint64_t>(j, "le_codimension");
    r.stable = opt_get<bool>(j, "stable");
    r.box_bound = opt_get<Exponent>(j, "box_bound");
    for (const auto& b : j.at("basis")) r.basis.push_back(exponent_vector(b));
    r.basis_truncated = j.at("basis_truncated").get<bool>();
    if (j.contains("witness") && !j["witness"].is_null()) {
      const auto& w = j["witness"];
      r.witness = WitnessInfo{w.at("kind").get<std::string>(), w.at("description").get<std::string>(),
                              exponent_vector(w.at("base")), exponent_vector(w.at("direction"))};
    }
    if (j.contains("decomposition") && !j["decomposition"].is_null()) r.decomposition = j["decomposition"];
    for (const auto& b : j.at("bounds")) r.bounds.push_back(bound_report_from_json(b));
    if (j.contains("timings_ms")) r.timings_ms = j["timings_ms"].get<std::map<std::string, double>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::schema_error, std::string("report: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

std::string format_table(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return os.str();
}

std::string format_bound(const BoundReport& b) {
  std::ostringstream os;
  os << b.quantity << " in [";
  if (const auto lo = b.display_lower())
    os << *lo;
  else
    os << '-';
  os << ", ";
  if (b.upper)
    os << *b.upper;
  else
    os << '-';
  os << ']';
  if (b.lower && *b.lower < 0) os << " (raw lower " << *b.lower << ')';
  if (b.exact) os << "  exact " << *b.exact;
  for (const auto& [k, v] : b.values) os << "  " << k << '=' << v;
  return os.str();
}

std::string format_table(const Report& r) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("map", format_map(r.input));
  rows.emplace_back("verdict", r.verdict);
  if (r.decomposition) rows.emplace_back("normal form", (*r.decomposition)["normal_form"].get<std::string>());
  if (r.witness) rows.emplace_back("witness", r.witness->kind + ": " + r.witness->description);
  rows.emplace_back("delta", r.delta ? std::to_string(*r.delta) : r.delta_status);
  if (r.le_codimension) rows.emplace_back("L_e-codimension", std::to_string(*r.le_codimension));
  if (r.stable) rows.emplace_back("stable", *r.stable ? "yes" : "no");
  if (r.box_bound)
    rows.emplace_back(r.delta_status == "finite" ? "certified box" : "box reached", std::to_string(*r.box_bound));
  if (r.delta) {
    std::string basis;
    for (std::size_t i = 0; i < r.basis.size(); ++i) {
      if (i) basis += ", ";
      basis += format_monomial(r.basis[i], r.input.vars());
    }
    if (r.basis_truncated) basis += ", ... (" + std::to_string(*r.delta - r.basis.size()) + " more)";
    rows.emplace_back("basis", "{" + basis + "}");
  }
  for (const auto& b : r.bounds) rows.emplace_back("bound", format_bound(b));
  for (const auto& [k, v] : r.timings_ms) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << v << " ms";
    rows.emplace_back("time " + k, os.str());
  }
  return format_table(rows);
}

}  // namespace monogerm
