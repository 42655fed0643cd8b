#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "monogerm/classify.hpp"
#include "monogerm/join.hpp"
#include "monogerm/monoid.hpp"
#include "monogerm/random_maps.hpp"

using namespace monogerm;
using V = std::vector<ExponentVector>;

namespace {

MonomialMap map(std::string_view text) { return parse_map(text); }

bool is_finite(const MonomialMap& f) { return decomposition_of(classify(f)) != nullptr; }

}  // namespace

TEST_SUITE("join") {
  TEST_CASE("join_maps concatenates") {
    const auto k = join_maps(map("vars y; y^2, y^3"), map("vars z; z^2, z^3"), V{{1, 1}});
    CHECK(k.vars() == std::vector<std::string>{"y", "z"});
    CHECK(k.components() == V{{2, 0}, {3, 0}, {0, 2}, {0, 3}, {1, 1}});

    const auto f = join_maps(map("vars x; x"), map("vars y; y^4, y^5"), V{{1, 1}});
    CHECK(f == map("vars x,y; x, y^4, y^5, x*y"));

    const auto plain = join_maps(map("vars x; x^2, x^3"), map("vars x; x^2, x^5"), {});
    CHECK(plain.p() == 4);
    CHECK(plain.vars().size() == 2);
    CHECK(plain.vars()[0] != plain.vars()[1]);

    CHECK(error_of([] { join_maps(map("vars x; x"), map("vars y; y^2, y^3"), V{{1, 1, 1}}); }) ==
          Errc::dimension_mismatch);
  }

  TEST_CASE("elementary corank-1 joins") {
    const auto f0 = elementary_corank_one({3, {4, 5}, {1, 1}});
    CHECK(f0 == map("vars x1,x2,y; x1, x2, y^4, y^5, x1*y, x2*y"));
    const auto small = elementary_corank_one({2, {2, 3}, {1}});
    CHECK(small == map("vars x,y; x, y^2, y^3, x*y"));
    CHECK(finite_delta(small) == 1);

    CHECK(error_of([] { elementary_corank_one({2, {4, 6}, {1}}); }) == Errc::invalid_spec);
    CHECK(error_of([] { elementary_corank_one({2, {1, 2}, {1}}); }) == Errc::invalid_spec);
    CHECK(error_of([] { elementary_corank_one({2, {2, 3}, {0}}); }) == Errc::invalid_spec);
    CHECK(error_of([] { elementary_corank_one({3, {2, 3}, {1}}); }) == Errc::invalid_spec);
  }

  TEST_CASE("elementary full-corank joins") {
    const auto k = elementary_full_corank({{{2, 3}, {2, 3}}, {{0, 1}, {1, 0}}});
    CHECK(k.components() == V{{2, 0}, {3, 0}, {0, 2}, {0, 3}, {1, 1}});
    CHECK(finite_delta(k) == 4);

    // mu_12 = 2, mu_21 = 3 gives x^2*y and x*y^3.
    const auto g = elementary_full_corank({{{3, 4}, {5, 6}}, {{0, 2}, {3, 0}}});
    CHECK(g.components() == map("vars x,y; x^3, x^4, y^5, y^6, x^2*y, x*y^3").components());
    CHECK(finite_delta(g) == 48);

    CHECK(error_of([] { elementary_full_corank({{{2, 4}, {2, 3}}, {{0, 1}, {1, 0}}}); }) == Errc::invalid_spec);
    CHECK(error_of([] { elementary_full_corank({{{2, 3}, {2, 3}}, {{0, 0}, {1, 0}}}); }) == Errc::invalid_spec);
  }

  TEST_CASE("the mu = 1 core of g with x^2*y and x*y^3 added as residuals") {
    const auto core = elementary_full_corank({{{3, 4}, {5, 6}}, {{0, 1}, {1, 0}}});
    CHECK(core.p() == 5);
    const auto with_h = add_residual(core, V{{2, 1}, {1, 3}});
    CHECK(is_finite(with_h));
    // x*y is already present, so this is not g; its gap count is smaller.
    CHECK(finite_delta(with_h) < 48);
  }

  TEST_CASE("residuals") {
    const auto f0 = elementary_corank_one({3, {4, 5}, {1, 1}});
    const auto f1 = add_residual(f0, V{{1, 1, 3}});
    CHECK(f1 == map("vars x1,x2,y; x1, x2, y^4, y^5, x1*y, x2*y, x1*x2*y^3"));
    CHECK(finite_delta(f1) == 14);
    CHECK(add_residual(f0, {}) == f0);
    CHECK(error_of([&] { add_residual(f0, V{{0, 0, 3}}); }) == Errc::residual_on_axis);
    CHECK(error_of([&] { add_residual(f0, V{{1, 1}}); }) == Errc::dimension_mismatch);
  }

  TEST_CASE("random elementary joins classify finite with the stated p") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 250; ++k) {
      const auto s1 = random_corank_one_spec(rng, 3, 5, 4);
      const auto f = elementary_corank_one(s1);
      CHECK(f.p() == 2 * s1.n + s1.curve.size() - 2);
      CHECK(is_finite(f));

      const auto s2 = random_full_corank_spec(rng, 3, 7, 3);
      const auto g = elementary_full_corank(s2);
      std::size_t expected = 0;
      for (const auto& c : s2.curves) expected += c.size();
      const std::size_t n = s2.n();
      expected += n * (n - 1);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t t = j + 1; t < n; ++t)
          if (s2.mu[j][t] == 1 && s2.mu[t][j] == 1) --expected;
      CHECK(g.p() == expected);
      CHECK(is_finite(g));
    }
  }

  TEST_CASE("residuals keep the verdict and never add gaps") {
    std::mt19937_64 rng(37);
    for (int k = 0; k < 150; ++k) {
      const auto f = k % 2 ? elementary_corank_one(random_corank_one_spec(rng, 3, 5, 4))
                           : elementary_full_corank(random_full_corank_spec(rng, 3, 7, 3));
      V h;
      for (int i = 0; i <= k % 3; ++i) h.push_back(random_residual(rng, f.n(), 4));
      const auto g = add_residual(f, h);
      CHECK(is_finite(g));
      CHECK(finite_delta(g) <= finite_delta(f));
    }
  }

  TEST_CASE("joins with axis-vanishing linking satisfy the additive lower bound") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 60; ++k) {
      // Two single-variable curves linked by y*z, optionally with extra mixed terms.
      const auto a = random_curve(rng, 6, 2);
      const auto b = random_curve(rng, 6, 2);
      std::string ta = "vars y;", tb = "vars z;";
      for (std::size_t i = 0; i < a.size(); ++i) ta += (i ? ", y^" : " y^") + std::to_string(a[i]);
      for (std::size_t i = 0; i < b.size(); ++i) tb += (i ? ", z^" : " z^") + std::to_string(b[i]);
      const auto F = map(ta);
      const auto G = map(tb);
      V h{{1, 1}};
      for (int i = 0; i < k % 3; ++i) h.push_back(random_residual(rng, 2, 4));
      const auto K = join_maps(F, G, h);
      REQUIRE(is_finite(K));
      CHECK(finite_delta(K) >= finite_delta(F) + finite_delta(G));
    }
  }

  TEST_CASE("JSON round trip") {
    const JoinSpec c1{CorankOneSpec{3, {4, 5}, {1, 1}}, {{1, 1, 3}}, {}};
    CHECK(join_spec_from_json(to_json(c1)) == c1);
    CHECK(build_join(c1) == map("vars x1,x2,y; x1, x2, y^4, y^5, x1*y, x2*y, x1*x2*y^3"));

    const JoinSpec full{FullCorankSpec{{{3, 4}, {5, 6}}, {{0, 2}, {3, 0}}}, {}, {"x", "y"}};
    CHECK(join_spec_from_json(to_json(full)) == full);
    CHECK(finite_delta(build_join(full)) == 48);

    const auto scalar_mu = join_spec_from_json(
        nlohmann::json::parse(R"({"kind":"full","curves":[[2,3],[2,3]],"mu":1})"));
    CHECK(build_join(scalar_mu).components() == V{{2, 0}, {3, 0}, {0, 2}, {0, 3}, {1, 1}});

    CHECK(error_of([] { join_spec_from_json(nlohmann::json::parse(R"({"kind":"triple"})")); }) ==
          Errc::schema_error);

    std::mt19937_64 rng(43);
    for (int k = 0; k < 50; ++k) {
      const JoinSpec s{random_corank_one_spec(rng, 3, 5, 4), {}, {}};
      CHECK(join_spec_from_json(to_json(s)) == s);
      const JoinSpec t{random_full_corank_spec(rng, 3, 7, 3), {}, {}};
      CHECK(join_spec_from_json(nlohmann::json::parse(to_json(t).dump())) == t);
    }
  }
}
