#include "monogerm/join.hpp"

#include <algorithm>
#include <numeric>

#include "monogerm/errors.hpp"

namespace monogerm {
namespace {

void check_curve(const std::vector<Exponent>& curve) {
  if (curve.empty()) throw Error(Errc::invalid_spec, "a curve needs at least one exponent");
  if (curve.front() < 2) throw Error(Errc::invalid_spec, "curve multiplicity must be at least 2");
  for (std::size_t i = 1; i < curve.size(); ++i)
    if (curve[i] <= curve[i - 1]) throw Error(Errc::invalid_spec, "curve exponents must be strictly increasing");
  Exponent g = 0;
  for (const Exponent m : curve) g = std::gcd(g, m);
  if (g != 1) throw Error(Errc::invalid_spec, "curve exponents have gcd " + std::to_string(g), g);
}

std::vector<std::string> renamed_union(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& name : b) {
    std::string candidate = name;
    for (int k = 2; std::find(out.begin(), out.end(), candidate) != out.end(); ++k)
      candidate = name + std::to_string(k);
    out.push_back(candidate);
  }
  return out;
}

}  // namespace

MonomialMap join_maps(const MonomialMap& f, const MonomialMap& g, const std::vector<ExponentVector>& h) {
  const std::size_t nf = f.n();
  const std::size_t n = nf + g.n();
  std::vector<ExponentVector> comps;
  for (const auto& c : f.components()) {
    ExponentVector v(n);
    for (std::size_t i = 0; i < nf; ++i) v[i] = c[i];
    comps.push_back(std::move(v));
  }
  for (const auto& c : g.components()) {
    ExponentVector v(n);
    for (std::size_t i = 0; i < g.n(); ++i) v[nf + i] = c[i];
    comps.push_back(std::move(v));
  }
  for (const auto& c : h) {
    if (c.size() != n)
      throw Error(Errc::dimension_mismatch, "linking component has " + std::to_string(c.size()) +
                                                " exponents, expected " + std::to_string(n));
    comps.push_back(c);
  }
  return MonomialMap(renamed_union(f.vars(), g.vars()), std::move(comps));
}

MonomialMap elementary_corank_one(const CorankOneSpec& spec) {
  if (spec.n < 2) throw Error(Errc::invalid_spec, "corank-1 join needs n >= 2");
  check_curve(spec.curve);
  if (spec.lambdas.size() != spec.n - 1)
    throw Error(Errc::invalid_spec, "expected " + std::to_string(spec.n - 1) + " link exponents");
  for (const Exponent l : spec.lambdas)
    if (l < 1) throw Error(Errc::invalid_spec, "link exponents must be at least 1");

  const std::size_t n = spec.n;
  const std::size_t y = n - 1;
  std::vector<std::string> vars;
  if (n == 2) {
    vars = {"x", "y"};
  } else {
    for (std::size_t i = 1; i < n; ++i) vars.push_back("x" + std::to_string(i));
    vars.push_back("y");
  }
  std::vector<ExponentVector> comps;
  for (std::size_t i = 0; i < y; ++i) comps.push_back(ExponentVector::unit(n, i));
  for (const Exponent m : spec.curve) comps.push_back(ExponentVector::unit(n, y, m));
  for (std::size_t i = 0; i < y; ++i) {
    ExponentVector v = ExponentVector::unit(n, i, spec.lambdas[i]);
    v[y] = 1;
    comps.push_back(std::move(v));
  }
  return MonomialMap(std::move(vars), std::move(comps));
}

MonomialMap elementary_full_corank(const FullCorankSpec& spec) {
  const std::size_t n = spec.n();
  if (n < 2) throw Error(Errc::invalid_spec, "full-corank join needs at least two curves");
  for (const auto& c : spec.curves) check_curve(c);
  if (spec.mu.size() != n) throw Error(Errc::invalid_spec, "mu must be an n x n matrix");
  for (std::size_t j = 0; j < n; ++j) {
    if (spec.mu[j].size() != n) throw Error(Errc::invalid_spec, "mu must be an n x n matrix");
    for (std::size_t t = 0; t < n; ++t)
      if (t != j && spec.mu[j][t] < 1) throw Error(Errc::invalid_spec, "off-diagonal mu entries must be at least 1");
  }

  std::vector<ExponentVector> comps;
  for (std::size_t j = 0; j < n; ++j)
    for (const Exponent m : spec.curves[j]) comps.push_back(ExponentVector::unit(n, j, m));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t t = 0; t < n; ++t) {
      if (t == j) continue;
      ExponentVector v = ExponentVector::unit(n, j, spec.mu[j][t]);
      v[t] = 1;
      if (std::find(comps.begin(), comps.end(), v) == comps.end()) comps.push_back(std::move(v));
    }
  }
  return MonomialMap::with_default_names(n, std::move(comps));
}

MonomialMap add_residual(const MonomialMap& f, const std::vector<ExponentVector>& h) {
  std::vector<ExponentVector> comps = f.components();
  for (const auto& v : h) {
    if (v.size() != f.n()) throw Error(Errc::dimension_mismatch, "residual component has the wrong length");
    if (v.support_size() <= 1)
      throw Error(Errc::residual_on_axis, "residual " + format_monomial(v, f.vars()) + " does not vanish on the axes");
    comps.push_back(v);
  }
  return MonomialMap(f.vars(), std::move(comps));
}

MonomialMap build_join(const JoinSpec& spec) {
  MonomialMap base = std::visit(
      [](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, CorankOneSpec>)
          return elementary_corank_one(s);
        else
          return elementary_full_corank(s);
      },
      spec.shape);
  MonomialMap out = add_residual(base, spec.residual);
  if (spec.vars.empty()) return out;
  if (spec.vars.size() != out.n())
    throw Error(Errc::dimension_mismatch, "expected " + std::to_string(out.n()) + " variable names");
  return MonomialMap(spec.vars, out.components());
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const JoinSpec& spec) {
  nlohmann::json j;
  if (const auto* c = std::get_if<CorankOneSpec>(&spec.shape)) {
    j["kind"] = "corank1";
    j["n"] = c->n;
    j["curves"] = nlohmann::json::array({c->curve});
    j["lambdas"] = c->lambdas;
  } else {
    const auto& f = std::get<FullCorankSpec>(spec.shape);
    j["kind"] = "full";
    j["n"] = f.n();
    j["curves"] = f.curves;
    j["mu"] = f.mu;
  }
  nlohmann::json res = nlohmann::json::array();
  for (const auto& v : spec.residual) res.push_back(v.entries());
  j["residual"] = std::move(res);
  if (!spec.vars.empty()) j["vars"] = spec.vars;
  return j;
}

namespace {

Error schema(const std::string& msg) { return Error(Errc::schema_error, "join spec JSON: " + msg); }

std::vector<Exponent> exponents(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw schema(std::string(what) + " must be an array of integers");
  std::vector<Exponent> out;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<std::int64_t>() < 0 || e.get<std::int64_t>() > UINT32_MAX)
      throw schema(std::string(what) + " must hold non-negative integers");
    out.push_back(e.get<Exponent>());
  }
  return out;
}

}  // namespace

JoinSpec join_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw schema("expected an object");
  if (!j.contains("kind") || !j["kind"].is_string()) throw schema("missing 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (!j.contains("curves") || !j["curves"].is_array()) throw schema("missing 'curves'");
  const auto& curves = j["curves"];

  JoinSpec spec;
  std::size_t n = 0;
  if (kind == "corank1") {
    if (!j.contains("n") || !j["n"].is_number_unsigned()) throw schema("missing 'n'");
    CorankOneSpec c;
    c.n = j["n"].get<std::size_t>();
    // A single curve, written either as [[m1,...]] or as [m1,...].
    if (!curves.empty() && curves.front().is_array()) {
      if (curves.size() != 1) throw schema("corank1 takes exactly one curve");
      c.curve = exponents(curves.front(), "curve");
    } else {
      c.curve = exponents(curves, "curve");
    }
    if (!j.contains("lambdas")) throw schema("missing 'lambdas'");
    c.lambdas = exponents(j["lambdas"], "lambdas");
    n = c.n;
    spec.shape = std::move(c);
  } else if (kind == "full") {
    FullCorankSpec f;
    for (const auto& c : curves) f.curves.push_back(exponents(c, "curve"));
    n = f.curves.size();
    if (j.contains("n") && (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() != n))
      throw schema("'n' disagrees with the number of curves");
    const nlohmann::json mu = j.contains("mu") ? j["mu"] : nlohmann::json(1);
    if (mu.is_number_integer()) {
      if (mu.get<std::int64_t>() < 0) throw schema("mu must be non-negative");
      f.mu.assign(n, std::vector<Exponent>(n, mu.get<Exponent>()));
      for (std::size_t k = 0; k < n; ++k) f.mu[k][k] = 0;
    } else if (mu.is_array()) {
      for (const auto& row : mu) f.mu.push_back(exponents(row, "mu"));
    } else {
      throw schema("mu must be an integer or a matrix");
    }
    spec.shape = std::move(f);
  } else {
    throw schema("unknown kind '" + kind + "'");
  }

  if (j.contains("residual")) {
    if (!j["residual"].is_array()) throw schema("'residual' must be an array");
    for (const auto& r : j["residual"]) {
      auto e = exponents(r, "residual");
      if (e.size() != n) throw Error(Errc::dimension_mismatch, "residual component has the wrong length");
      spec.residual.emplace_back(std::move(e));
    }
  }
  if (j.contains("vars")) {
    if (!j["vars"].is_array()) throw schema("'vars' must be an array of strings");
    for (const auto& v : j["vars"]) {
      if (!v.is_string()) throw schema("'vars' must be an array of strings");
      spec.vars.push_back(v.get<std::string>());
    }
  }
  return spec;
}

}  // namespace monogerm
