#include "monogerm/selftest.hpp"

#include <sstream>

#include "monogerm/classify.hpp"
#include "monogerm/errors.hpp"
#include "monogerm/invariants.hpp"
#include "monogerm/monoid.hpp"
#include "monogerm/random_maps.hpp"
#include "monogerm/semigroup.hpp"

namespace monogerm {
namespace {

constexpr Exponent kWitnessMembers = 12;

std::string join_numbers(const auto& v) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& x : v) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << '}';
  return os.str();
}

struct Checker {
  SelftestResult& out;

  void check(std::string name, bool ok, std::string detail) {
    out.checks.push_back({std::move(name), ok, std::move(detail)});
  }

  void delta_is(const std::string& name, const std::string& text, std::uint64_t expected) {
    try {
      const auto got = finite_delta(parse_map(text));
      check(name, got == expected, "delta " + std::to_string(got) + ", expected " + std::to_string(expected));
    } catch (const Error& e) {
      check(name, false, std::string(to_string(e.code())) + ": " + e.what());
    }
  }
};

void reference_suite(Checker& c, bool inject) {
  c.delta_is("delta g", "vars x,y; x^3, x^4, y^5, y^6, x^2*y, x*y^3", inject ? 49 : 48);
  c.delta_is("delta f0", "vars x1,x2,y; x1, x2, y^4, y^5, x1*y, x2*y", 15);
  c.delta_is("delta f1", "vars x1,x2,y; x1, x2, y^4, y^5, x1*y, x2*y, x1*x2*y^3", 14);

  const MonomialMap h = parse_map("vars x,y,z; x, y^2, y^3, z^2, z^3, x*y, x*z, y*z");
  const auto basis = monomial_basis(h);
  std::string listed;
  for (const auto& b : basis) listed += (listed.empty() ? "" : ",") + format_monomial(b, h.vars());
  c.check("basis h", listed == "y,z,y^2*z,y*z^2", "{" + listed + "}");

  for (Exponent k = 1; k <= 6; ++k) {
    const std::string ks = std::to_string(k);
    c.delta_is("delta fold f k=" + ks, "vars x,y; x, x*y, y^2, y^" + std::to_string(2 * k + 1), k);
    c.delta_is("delta fold g k=" + ks, "vars x,y; x, y^2, y^3, x^" + ks + "*y", k);
    for (const auto* text : {"vars x,y; x, x*y, y^2, y^", "vars x,y; x, y^2, y^3, x^"}) {
      const bool first = std::string(text).find("x*y") != std::string::npos;
      const MonomialMap f = parse_map(std::string(text) + (first ? std::to_string(2 * k + 1) : ks + "*y"));
      const BoundReport r = fold_report(f);
      const bool ok = r.lower == std::int64_t{k} && r.upper == std::int64_t{2 * k - 1} &&
                      r.values.at("double_points") == std::int64_t{k};
      c.check(std::string("fold interval ") + (first ? "f" : "g") + " k=" + ks, ok,
              "[" + std::to_string(*r.lower) + "," + std::to_string(*r.upper) +
                  "] d=" + std::to_string(r.values.at("double_points")));
    }
  }

  const std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> gap_lists[] = {
      {{3, 4}, {1, 2, 5}},
      {{5, 6}, {1, 2, 3, 4, 7, 8, 9, 13, 14, 19}},
      {{4, 5}, {1, 2, 3, 6, 7, 11}},
  };
  for (const auto& [gens, gaps] : gap_lists) {
    const auto s = NumericalSemigroup::from_generators(gens);
    c.check("gaps " + s.to_string(), s.gaps() == gaps, join_numbers(s.gaps()));
  }
}

}  // namespace

CrossCheck cross_check(const MonomialMap& f, std::uint64_t max_cells) {
  CrossCheck cc;
  const auto decision = decide_finiteness(f);
  DeltaOptions opts;
  opts.max_cells = max_cells;
  opts.structural_shortcut = false;
  DeltaResult r;
  try {
    r = delta(f, opts);
  } catch (const Error& e) {
    if (e.code() != Errc::internal_inconsistency) throw;
    cc.outcome = CrossCheck::Outcome::disagreement;
    cc.detail = e.what();
    return cc;
  }

  if (const auto* fin = std::get_if<DeltaFinite>(&r)) {
    const auto* d = std::get_if<JoinDecomposition>(&decision);
    if (!d) {
      cc.outcome = CrossCheck::Outcome::disagreement;
      cc.detail = "certified finite but decided not finite";
      return cc;
    }
    if (f.p() < min_target_dimension(f.n(), d->corank())) {
      cc.outcome = CrossCheck::Outcome::disagreement;
      cc.detail = "finite with p below the corank threshold";
      return cc;
    }
    cc.outcome = CrossCheck::Outcome::finite;
    cc.detail = "delta " + std::to_string(fin->delta);
    return cc;
  }
  if (const auto* inf = std::get_if<DeltaInfinite>(&r)) {
    for (Exponent k = 0; k <= kWitnessMembers; ++k) {
      if (contains_exponent(f, inf->witness.member(k))) {
        cc.outcome = CrossCheck::Outcome::disagreement;
        cc.detail = "witness member " + format_monomial(inf->witness.member(k), f.vars()) + " lies in the monoid";
        return cc;
      }
    }
    cc.outcome = CrossCheck::Outcome::infinite;
    cc.detail = std::string(to_string(inf->witness.kind));
    return cc;
  }
  cc.outcome = CrossCheck::Outcome::inconclusive;
  cc.detail = "uncertified at B=" + std::to_string(std::get<DeltaInconclusive>(r).bound_reached);
  return cc;
}

bool SelftestResult::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string SelftestResult::summary() const {
  std::ostringstream os;
  std::size_t ok = 0;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    ok += c.passed;
  }
  os << "cross-oracle: " << finite << " finite, " << infinite << " infinite, " << inconclusive << " inconclusive, "
     << disagreements << " disagreements\n";
  os << (passed() ? "selftest passed" : "selftest FAILED") << " (" << ok << "/" << checks.size() << " checks)\n";
  return os.str();
}

nlohmann::json SelftestResult::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"passed", passed()},
          {"checks", std::move(cs)},
          {"cross_oracle",
           {{"finite", finite}, {"infinite", infinite}, {"inconclusive", inconclusive}, {"disagreements", disagreements}}}};
}

SelftestResult run_selftest(const SelftestOptions& options) {
  SelftestResult out;
  Checker c{out};
  reference_suite(c, options.inject_wrong_delta);

  const auto corpus = random_corpus(options.seed, options.random_maps);
  std::size_t index = 0;
  for (const auto& f : corpus) {
    const CrossCheck cc = cross_check(f, options.max_cells);
    switch (cc.outcome) {
      case CrossCheck::Outcome::finite: ++out.finite; break;
      case CrossCheck::Outcome::infinite: ++out.infinite; break;
      case CrossCheck::Outcome::inconclusive:
        ++out.inconclusive;
        c.check("cross-oracle map " + std::to_string(index), false, format_map(f) + ": " + cc.detail);
        break;
      case CrossCheck::Outcome::disagreement:
        ++out.disagreements;
        c.check("cross-oracle map " + std::to_string(index), false, format_map(f) + ": " + cc.detail);
        break;
    }
    ++index;
  }
  c.check("cross-oracle", out.disagreements == 0 && out.inconclusive == 0,
          std::to_string(corpus.size()) + " random maps, seed " + std::to_string(options.seed));
  return out;
}

}  // namespace monogerm
