#include <cmath>
#include <random>

#include "doctest.h"
#include "monogerm/classify.hpp"
#include "monogerm/errors.hpp"
#include "monogerm/monoid.hpp"
#include "monogerm/random_maps.hpp"
#include "monogerm/semigroup.hpp"
#include "oracles.hpp"

using namespace monogerm;
using V = std::vector<ExponentVector>;

namespace {

MonomialMap map(std::string_view text) { return parse_map(text); }

DeltaFinite finite(const MonomialMap& f) {
  auto r = delta(f);
  REQUIRE(std::holds_alternative<DeltaFinite>(r));
  return std::get<DeltaFinite>(std::move(r));
}

std::set<oracle::Vec> monomial_set(const MonomialMap& f, std::initializer_list<const char*> monomials) {
  std::set<oracle::Vec> out;
  for (const char* m : monomials) {
    std::string text = "vars ";
    for (std::size_t i = 0; i < f.n(); ++i) text += (i ? "," : "") + f.vars()[i];
    out.insert(parse_map(text + "; " + m).component(0).entries());
  }
  return out;
}

}  // namespace

TEST_SUITE("monoid") {
  TEST_CASE("membership tables on small boxes") {
    const auto t = MembershipTable::build(map("vars x,y; x, y^2"), 3);
    CHECK_FALSE(t.contains({0, 1}));
    CHECK(t.contains({2, 2}));
    for (Exponent a = 0; a <= 3; ++a)
      for (Exponent b = 0; b <= 3; ++b) CHECK(t.contains({a, b}) == (b % 2 == 0));

    const auto curve = MembershipTable::build(map("vars y; y^2, y^3"), 7);
    for (Exponent s = 0; s <= 7; ++s) CHECK(curve.contains({s}) == (s != 1));

    const auto f = MembershipTable::build(map("vars x,y; x, y^4, y^5, x*y"), 8);
    for (Exponent l = 0; l <= 8; ++l) {
      const bool gap = l == 1 || l == 2 || l == 3 || l == 6 || l == 7;
      CHECK(f.contains({0, l}) == !gap);
    }
  }

  TEST_CASE("membership table agrees with breadth-first closure") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 150; ++k) {
      const auto f = random_map(rng, static_cast<CorpusKind>(k % 3));
      const Exponent bound = f.n() == 3 ? 9 : 20;
      const auto table = MembershipTable::build(f, bound);
      const auto ref = oracle::Monoid::of(f, bound);
      CHECK(oracle::as_set(table.non_members()) == ref.complement());
      CHECK(table.count_non_members() == ref.complement().size());
    }
  }

  TEST_CASE("arbitrary boxes") {
    const auto f = map("vars x,y,z; x, y^2, y^3, z^2, z^3, x*y, x*z, y*z");
    const std::vector<Exponent> upper{2, 5, 3};
    const auto t = MembershipTable::build_box(f, upper);
    CHECK(t.extents() == std::vector<std::size_t>{3, 6, 4});
    const auto ref = oracle::Monoid({{1, 0, 0}, {0, 2, 0}, {0, 3, 0}, {0, 0, 2}, {0, 0, 3}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}},
                                    {2, 5, 3});
    CHECK(oracle::as_set(t.non_members()) == ref.complement());
    CHECK_THROWS_AS(MembershipTable::build(f, 100, 1000), Error);
  }

  TEST_CASE("contains_exponent") {
    const auto f = map("vars x,y; x, y^4, y^5, x*y");
    CHECK(contains_exponent(f, {1, 1}));
    CHECK_FALSE(contains_exponent(f, {0, 6}));
    CHECK(contains_exponent(f, {0, 0}));
    CHECK(contains_exponent(map("vars x,y,z; x*y*z"), {0, 0, 0}));
  }

  TEST_CASE("delta of g and its basis") {
    const auto g = map("vars x,y; x^3, x^4, y^5, y^6, x^2*y, x*y^3");
    const auto r = finite(g);
    CHECK(r.delta == 48);
    CHECK(r.basis.size() == 48);
    const auto gamma = monomial_set(
        g, {"x",       "x^2",     "x^5",     "y",       "y^2",     "y^3",     "y^4",     "y^7",     "y^8",
            "y^9",     "y^13",    "y^14",    "y^19",    "x*y",     "x*y^2",   "x*y^4",   "x*y^5",   "x*y^6",
            "x*y^7",   "x*y^10",  "x*y^11",  "x*y^12",  "x*y^16",  "x*y^17",  "x*y^22",  "x^2*y^2", "x^2*y^3",
            "x^2*y^4", "x^2*y^5", "x^2*y^8", "x^2*y^9", "x^2*y^10", "x^2*y^14", "x^2*y^15", "x^2*y^20", "x^3*y",
            "x^3*y^2", "x^3*y^3", "x^3*y^7", "x^3*y^8", "x^3*y^13", "x^4*y",   "x^4*y^4", "x^5*y^2", "x^5*y^4",
            "x^6*y^2", "x^7*y",   "x^9*y^2"});
    CHECK(gamma.size() == 48);
    CHECK(oracle::as_set(r.basis) == gamma);
    CHECK(std::is_sorted(r.basis.begin(), r.basis.end(), deglex_less));
  }

  TEST_CASE("delta of the f_a pair") {
    const auto f0 = map("vars x1,x2,y; x1, x2, y^4, y^5, x1*y, x2*y");
    const auto f1 = map("vars x1,x2,y; x1, x2, y^4, y^5, x1*y, x2*y, x1*x2*y^3");
    const auto r0 = finite(f0);
    CHECK(r0.delta == 15);
    const auto beta = monomial_set(f0, {"y", "y^2", "y^3", "y^6", "y^7", "y^11", "x1*y^2", "x2*y^2", "x1*y^3",
                                        "x2*y^3", "x1*y^7", "x2*y^7", "x1*x2*y^3", "x1^2*y^3", "x2^2*y^3"});
    CHECK(oracle::as_set(r0.basis) == beta);
    const auto r1 = finite(f1);
    CHECK(r1.delta == 14);
    auto beta1 = beta;
    beta1.erase({1, 1, 3});
    CHECK(oracle::as_set(r1.basis) == beta1);
  }

  TEST_CASE("delta of the corank-2 three-variable example") {
    const auto h = map("vars x,y,z; x, y^2, y^3, z^2, z^3, x*y, x*z, y*z");
    const auto r = finite(h);
    CHECK(r.delta == 4);
    CHECK(r.basis == V{{0, 1, 0}, {0, 0, 1}, {0, 2, 1}, {0, 1, 2}});
    CHECK(le_codimension(h) == 32);
  }

  TEST_CASE("infinite delta with a witness") {
    const auto f = map("vars x,y; x, y^4, y^5, x*y^2");
    const auto r = delta(f);
    REQUIRE(std::holds_alternative<DeltaInfinite>(r));
    const auto& w = std::get<DeltaInfinite>(r).witness;
    CHECK(w.kind == Obstruction::Kind::missing_link);
    for (Exponent k = 0; k <= 50; ++k) {
      CHECK(w.member(k) == ExponentVector{k, 1});
      CHECK_FALSE(contains_exponent(f, w.member(k)));
    }
    // A variable without pure powers.
    const auto g = map("vars x,y; x*y, y^2, y^3, x*y^2");
    const auto rg = delta(g);
    REQUIRE(std::holds_alternative<DeltaInfinite>(rg));
    CHECK(std::get<DeltaInfinite>(rg).witness.kind == Obstruction::Kind::missing_pure_power);
    try {
      monomial_basis(f);
      FAIL("expected NotFinite");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_finite);
    }
  }

  TEST_CASE("monomial bases") {
    CHECK(monomial_basis(map("vars x,y; x, y^2, y^3, x*y")) == V{{0, 1}});
    CHECK(monomial_basis(map("vars y; y^4, y^5")) == V{{1}, {2}, {3}, {6}, {7}, {11}});
  }

  TEST_CASE("L_e-codimension and stability") {
    CHECK(le_codimension(map("vars x,y; x, y")) == 0);
    const auto f1 = map("vars x1,x2,y; x1, x2, y^4, y^5, x1*y, x2*y, x1*x2*y^3");
    CHECK(le_codimension(f1) == 98);

    const auto imm = is_stable(map("vars x,y; x, y, x*y, x^2"));
    CHECK(imm.stable);
    CHECK_FALSE(imm.caveat);
    CHECK_FALSE(is_stable(f1).stable);

    // p = 3 < 2n: caveat; odd powers of y are never reached, so not stable.
    const auto small = map("vars x,y; x, y^2, x*y");
    CHECK(std::holds_alternative<DeltaInfinite>(delta(small)));
    const auto s = is_stable(small);
    CHECK_FALSE(s.stable);
    CHECK(s.caveat);
  }

  TEST_CASE("cell cap") {
    DeltaOptions tiny;
    tiny.max_cells = 50;
    try {
      delta(map("vars x,y; x^3, x^4, y^5, y^6, x^2*y, x*y^3"), tiny);
      FAIL("expected BoxTooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::box_too_large);
      CHECK(exit_code(e.code()) == 4);
    }
  }

  TEST_CASE("delta agrees with the brute-force count") {
    std::mt19937_64 rng(5);
    RandomMapOptions small;
    small.max_exponent = 5;
    int finite_maps = 0;
    for (int k = 0; k < 200; ++k) {
      const auto f = random_map(rng, static_cast<CorpusKind>(k % 3), small);
      const auto r = delta(f);
      if (const auto* fin = std::get_if<DeltaFinite>(&r)) {
        ++finite_maps;
        const Exponent far = fin->certified_bound + 6;
        if (std::pow(far + 1.0, f.n()) > 2e5) continue;
        const auto ref = oracle::Monoid::of(f, far).complement();
        CHECK(oracle::as_set(fin->basis) == ref);
        CHECK(fin->delta == ref.size());
      } else {
        REQUIRE(std::holds_alternative<DeltaInfinite>(r));
        const auto& w = std::get<DeltaInfinite>(r).witness;
        for (Exponent j = 0; j <= 10; ++j) CHECK_FALSE(contains_exponent(f, w.member(j)));
      }
    }
    CHECK(finite_maps > 50);
  }

  TEST_CASE("one variable: delta is the gap count of the semigroup") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<Exponent> pick(1, 12);
    for (int k = 0; k < 200; ++k) {
      std::vector<ExponentVector> comps;
      std::vector<std::uint64_t> gens;
      const int len = 1 + k % 4;
      for (int j = 0; j < len; ++j) {
        const Exponent e = pick(rng);
        comps.push_back({e});
        gens.push_back(e);
      }
      const auto f = MonomialMap({"t"}, comps);
      std::uint64_t g = 0;
      for (const auto e : gens) g = std::gcd(g, e);
      const auto r = delta(f);
      if (g != 1) {
        CHECK(std::holds_alternative<DeltaInfinite>(r));
        continue;
      }
      REQUIRE(std::holds_alternative<DeltaFinite>(r));
      CHECK(std::get<DeltaFinite>(r).delta == NumericalSemigroup::from_generators(gens).delta());
    }
  }

  TEST_CASE("shell certificate soundness and completeness") {
    std::mt19937_64 rng(13);
    RandomMapOptions small;
    small.max_n = 2;
    small.max_exponent = 5;
    int checked_maps = 0;
    for (int k = 0; checked_maps < 60 && k < 600; ++k) {
      const auto f = random_map(rng, CorpusKind::normal_form, small);
      const auto r = delta(f);
      REQUIRE(std::holds_alternative<DeltaFinite>(r));
      const auto& fin = std::get<DeltaFinite>(r);
      ++checked_maps;
      std::vector<Exponent> periods;
      for (const auto& p : pure_power_profile(f)) periods.push_back(p.front());
      const Exponent max_r = *std::max_element(periods.begin(), periods.end());

      // completeness: the certificate already holds at max basis coordinate + max r
      Exponent top = 0;
      for (const auto& b : fin.basis) top = std::max(top, b.max_entry());
      CHECK(MembershipTable::build(f, top + max_r).shell_covered(periods));

      // soundness: far points are members, and so are their reductions into the shell
      const Exponent bound = fin.certified_bound;
      const auto far = oracle::Monoid::of(f, 3 * bound);
      const auto table = MembershipTable::build(f, bound);
      std::uniform_int_distribution<Exponent> coord(0, 3 * bound);
      for (int s = 0; s < 40; ++s) {
        ExponentVector v(f.n());
        for (std::size_t i = 0; i < f.n(); ++i) v[i] = coord(rng);
        if (table.in_box(v)) continue;
        CHECK(far.contains(v.entries()));
        ExponentVector w = v;
        for (std::size_t i = 0; i < f.n(); ++i)
          while (w[i] > bound) w[i] -= periods[i];
        CHECK(table.contains(w));
      }
    }
    CHECK(checked_maps == 60);
  }

  TEST_CASE("membership is closed under adding generators") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 60; ++k) {
      const auto f = random_map(rng, static_cast<CorpusKind>(k % 3));
      const Exponent bound = f.n() == 3 ? 10 : 24;
      const auto t = MembershipTable::build(f, bound);
      ExponentVector v(f.n());
      std::uniform_int_distribution<Exponent> coord(0, bound);
      for (int s = 0; s < 100; ++s) {
        for (std::size_t i = 0; i < f.n(); ++i) v[i] = coord(rng);
        if (!t.contains(v)) continue;
        for (const auto& g : f.components()) {
          const auto w = v + g;
          if (t.in_box(w)) CHECK(t.contains(w));
        }
      }
    }
  }
}
