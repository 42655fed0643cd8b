#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "monogerm/classify.hpp"
#include "monogerm/errors.hpp"
#include "monogerm/monoid.hpp"
#include "monogerm/random_maps.hpp"

using namespace monogerm;

namespace {

MonomialMap map(std::string_view text) { return parse_map(text); }

const JoinDecomposition& finite_join(const Verdict& v) {
  const auto* d = decomposition_of(v);
  REQUIRE(d != nullptr);
  return *d;
}

MonomialMap permuted(const MonomialMap& f, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(f.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<ExponentVector> comps;
  for (const auto& c : f.components()) {
    ExponentVector v(f.n());
    for (std::size_t i = 0; i < f.n(); ++i) v[perm[i]] = c[i];
    comps.push_back(v);
  }
  std::shuffle(comps.begin(), comps.end(), rng);
  std::vector<std::string> vars(f.n());
  for (std::size_t i = 0; i < f.n(); ++i) vars[perm[i]] = "v" + std::to_string(i);
  return MonomialMap(vars, comps);
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("corank-1 example with a residual") {
    const auto f1 = map("vars x1,x2,y; x1, x2, y^4, y^5, x1*y, x2*y, x1*x2*y^3");
    const auto v = classify(f1);
    CHECK(verdict_name(v) == "finite");
    const auto& d = finite_join(v);
    CHECK(d.identity_vars == std::vector<std::size_t>{0, 1});
    REQUIRE(d.curves.size() == 1);
    CHECK(d.curves[0].var == 2);
    CHECK(d.curves[0].exponents == std::vector<Exponent>{4, 5});
    CHECK(d.lambda(0, 2) == 1);
    CHECK(d.lambda(1, 2) == 1);
    CHECK(d.residual == std::vector<std::size_t>{6});
    CHECK(normal_form(d) ==
          "(I * phi_2)_H  I=(x1, x2)  phi[y]=(y^4, y^5)  H=(x1*y, x2*y)  h=(x1*x2*y^3)");
  }

  TEST_CASE("corank-2 example") {
    const auto h = map("vars x,y,z; x, y^2, y^3, z^2, z^3, x*y, x*z, y*z");
    const auto v = classify(h);
    const auto& d = finite_join(v);
    CHECK(d.corank() == 2);
    CHECK(d.identity_vars == std::vector<std::size_t>{0});
    CHECK(d.lambda(0, 1) == 1);
    CHECK(d.lambda(0, 2) == 1);
    CHECK(d.mu(1, 2) == 1);
    CHECK(d.mu(2, 1) == 1);
    CHECK(d.residual.empty());
    CHECK(normal_form(d) ==
          "(I * phi_2 * phi_2)_H  I=(x)  phi[y]=(y^2, y^3)  phi[z]=(z^2, z^3)  H=(x*y, x*z, y*z)  h=()");
  }

  TEST_CASE("full-corank example") {
    const auto g = map("vars x,y; x^3, x^4, y^5, y^6, x^2*y, x*y^3");
    const auto v = classify(g);
    const auto& d = finite_join(v);
    CHECK(d.corank() == 2);
    CHECK(d.mu(0, 1) == 2);
    CHECK(d.mu(1, 0) == 3);
    CHECK(d.residual.empty());
  }

  TEST_CASE("obstructions") {
    const auto v1 = classify(map("vars x,y; x, y^4, y^5, x*y^2"));
    REQUIRE(std::holds_alternative<NotFinite>(v1));
    const auto& o1 = std::get<NotFinite>(v1).reason;
    CHECK(o1.kind == Obstruction::Kind::missing_link);
    CHECK(o1.a == 0);
    CHECK(o1.b == 1);

    const auto v2 = classify(map("vars x,y; x, y^4, y^6, x*y"));
    REQUIRE(std::holds_alternative<NotFinite>(v2));
    CHECK(std::get<NotFinite>(v2).reason.kind == Obstruction::Kind::non_primitive_curve);
    CHECK(std::get<NotFinite>(v2).reason.gcd == 2);

    const auto v3 = classify(map("vars x,y; x*y, y^2, y^3, x^2*y"));
    REQUIRE(std::holds_alternative<NotFinite>(v3));
    CHECK(std::get<NotFinite>(v3).reason.kind == Obstruction::Kind::missing_pure_power);

    const auto v4 = classify(map("vars x,y; x^2, x^3, y^2, y^3, x*y^2"));
    REQUIRE(std::holds_alternative<NotFinite>(v4));
    CHECK(std::get<NotFinite>(v4).reason.kind == Obstruction::Kind::missing_pair);
  }

  TEST_CASE("immersions and scope") {
    const auto v = classify(map("vars x,y; x, y, x*y, x^2"));
    REQUIRE(std::holds_alternative<Immersion>(v));
    CHECK(normal_form(finite_join(v)) == "(I)  h=(x*y)  redundant=(x^2)");
    const auto small = classify(map("vars x,y; x, y^2, y^3"));
    REQUIRE(std::holds_alternative<OutOfTheoremScope>(small));
    CHECK(std::get<OutOfTheoremScope>(small).two_n == 4);
  }

  TEST_CASE("target-dimension thresholds") {
    CHECK(min_target_dimension(3, 3) == 9);
    CHECK(min_target_dimension(2, 1) == 4);
    CHECK(min_target_dimension(5, 0) == 5);
    for (std::uint64_t n = 1; n <= 12; ++n) {
      CHECK(min_target_dimension(n, 1) == 2 * n);
      CHECK(min_target_dimension(n, n) == n * (n + 3) / 2);
    }
    CHECK_THROWS_AS(min_target_dimension(2, 3), Error);
  }

  TEST_CASE("every obstruction family stays outside the monoid") {
    std::mt19937_64 rng(21);
    int seen = 0;
    for (int k = 0; k < 300; ++k) {
      const auto f = random_map(rng, static_cast<CorpusKind>(1 + k % 2));
      const auto dec = decide_finiteness(f);
      const auto* o = std::get_if<Obstruction>(&dec);
      if (!o) continue;
      ++seen;
      for (Exponent j = 1; j <= 50; ++j) CHECK_FALSE(contains_exponent(f, o->member(j)));
    }
    CHECK(seen > 50);
  }

  TEST_CASE("decompositions partition the components and respect the threshold") {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 400; ++k) {
      const auto f = random_map(rng, static_cast<CorpusKind>(k % 3));
      const auto v = classify(f);
      const auto* d = decomposition_of(v);
      if (!d) continue;
      std::vector<int> uses(f.p(), 0);
      for (const auto c : d->identity_components) ++uses[c];
      for (const auto& c : d->curves)
        for (const auto i : c.components) ++uses[i];
      std::set<std::size_t> h;
      for (const auto& l : d->links) h.insert(l.component);
      for (const auto& pr : d->pairs) h.insert(pr.component);
      for (const auto i : h) ++uses[i];
      for (const auto i : d->residual) {
        ++uses[i];
        CHECK(f.component(i).support_size() >= 2);
      }
      for (const auto i : d->redundant) ++uses[i];
      for (const int u : uses) CHECK(u == 1);
      CHECK(f.p() >= min_target_dimension(f.n(), d->corank()));

      // the normal-form map keeps the verdict and the gap count
      const auto nf = normal_form_map(*d);
      CHECK(verdict_name(classify(nf)) == verdict_name(v));
      CHECK(finite_delta(nf) == finite_delta(f));
    }
  }

  TEST_CASE("verdicts are invariant under relabeling") {
    std::mt19937_64 rng(29);
    for (int k = 0; k < 300; ++k) {
      const auto f = random_map(rng, static_cast<CorpusKind>(k % 3));
      const auto g = permuted(f, rng);
      const auto vf = classify(f);
      const auto vg = classify(g);
      CHECK(verdict_name(vf) == verdict_name(vg));
      if (const auto* d = decomposition_of(vf)) CHECK(decomposition_of(vg)->corank() == d->corank());
    }
  }
}
