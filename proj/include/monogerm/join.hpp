#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "monogerm/germ.hpp"

namespace monogerm {

/// (x_1..x_{n-1}, phi(y), x_1^{l_1} y, ..., x_{n-1}^{l_{n-1}} y).
struct CorankOneSpec {
  std::size_t n = 2;
  std::vector<Exponent> curve;    // m_1 < ... < m_k, gcd 1, m_1 >= 2
  std::vector<Exponent> lambdas;  // n-1 entries, each >= 1

  friend bool operator==(const CorankOneSpec&, const CorankOneSpec&) = default;
};

/// n plane-curve factors phi_j(y_j) joined by y_j^{mu[j][t]} y_t for j != t.
struct FullCorankSpec {
  std::vector<std::vector<Exponent>> curves;
  std::vector<std::vector<Exponent>> mu;  // n x n, diagonal ignored

  std::size_t n() const noexcept { return curves.size(); }
  friend bool operator==(const FullCorankSpec&, const FullCorankSpec&) = default;
};

struct JoinSpec {
  std::variant<CorankOneSpec, FullCorankSpec> shape;
  std::vector<ExponentVector> residual;
  std::vector<std::string> vars;  // empty: default names

  friend bool operator==(const JoinSpec&, const JoinSpec&) = default;
};

/// (F(x), G(y), H(x,y)) on the concatenated variables. A variable of G whose
/// name is already used by F gets a numeric suffix.
MonomialMap join_maps(const MonomialMap& f, const MonomialMap& g, const std::vector<ExponentVector>& h);

/// Throws InvalidSpec on a bad curve (gcd != 1, m_1 < 2, not increasing),
/// a wrong number of lambdas or a lambda < 1.
MonomialMap elementary_corank_one(const CorankOneSpec& spec);

/// Components: curves in order, then y_j^{mu_jt} y_t for j = 1..n, t != j,
/// with exact repeats (mu_jt = mu_tj = 1) emitted once.
MonomialMap elementary_full_corank(const FullCorankSpec& spec);

/// f with h appended; every h must vanish on each coordinate axis.
MonomialMap add_residual(const MonomialMap& f, const std::vector<ExponentVector>& h);

MonomialMap build_join(const JoinSpec& spec);

/// {"kind": "corank1"|"full", "n", "curves", "lambdas", "mu", "residual", "vars"}.
/// "mu" may be a single integer meaning every off-diagonal entry.
nlohmann::json to_json(const JoinSpec& spec);
JoinSpec join_spec_from_json(const nlohmann::json& j);

}  // namespace monogerm
