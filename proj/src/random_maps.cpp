#include "monogerm/random_maps.hpp"

#include <algorithm>
#include <numeric>

#include "monogerm/errors.hpp"

namespace monogerm {
namespace {

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng) { return uniform(rng, 0, 1) == 1; }

// Components of a random finite normal form on n variables, with the indices
// of the structural ones (those whose removal may break finiteness).
struct NormalForm {
  std::vector<ExponentVector> comps;
  std::vector<std::size_t> structural;
};

NormalForm random_normal_form(std::mt19937_64& rng, std::size_t n, Exponent max_e) {
  NormalForm nf;
  std::vector<bool> is_identity(n);
  for (std::size_t i = 0; i < n; ++i) is_identity[i] = coin(rng);
  if (n == 1) is_identity[0] = false;

  auto push = [&](ExponentVector v, bool structural) {
    if (std::find(nf.comps.begin(), nf.comps.end(), v) != nf.comps.end()) return;
    if (structural) nf.structural.push_back(nf.comps.size());
    nf.comps.push_back(std::move(v));
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (is_identity[i]) {
      push(ExponentVector::unit(n, i), true);
    } else {
      for (const Exponent m : random_curve(rng, max_e)) push(ExponentVector::unit(n, i, m), true);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || is_identity[b]) continue;
      // x_a^l y_b joins an identity variable a (or a curve variable a) to curve b.
      ExponentVector v = ExponentVector::unit(n, a, static_cast<Exponent>(uniform(rng, 1, max_e)));
      v[b] = 1;
      push(std::move(v), true);
    }
  }
  const std::size_t residuals = n >= 2 ? uniform(rng, 0, 2) : 0;
  for (std::size_t r = 0; r < residuals; ++r) push(random_residual(rng, n, max_e), false);
  return nf;
}

void top_up(std::mt19937_64& rng, std::vector<ExponentVector>& comps, std::size_t n, Exponent max_e) {
  while (comps.size() < 2 * n) {
    if (n >= 2)
      comps.push_back(random_residual(rng, n, max_e));
    else
      comps.push_back(ExponentVector::unit(1, 0, static_cast<Exponent>(uniform(rng, 1, max_e))));
  }
}

}  // namespace

std::vector<Exponent> random_curve(std::mt19937_64& rng, Exponent max_e, std::size_t max_len) {
  if (max_e < 3) throw Error(Errc::invalid_argument, "random curves need exponents up to at least 3");
  for (;;) {
    const std::size_t len = uniform(rng, 2, std::max<std::size_t>(2, max_len));
    std::vector<Exponent> c;
    for (std::size_t k = 0; k < len; ++k) c.push_back(static_cast<Exponent>(uniform(rng, 2, max_e)));
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    Exponent g = 0;
    for (const Exponent m : c) g = std::gcd(g, m);
    if (g == 1) return c;
  }
}

ExponentVector random_residual(std::mt19937_64& rng, std::size_t n, Exponent max_e) {
  if (n < 2) throw Error(Errc::invalid_argument, "a residual needs two variables");
  ExponentVector v(n);
  while (v.support_size() < 2) {
    const std::size_t i = uniform(rng, 0, n - 1);
    v[i] = static_cast<Exponent>(uniform(rng, 1, max_e));
  }
  return v;
}

MonomialMap random_map(std::mt19937_64& rng, CorpusKind kind, const RandomMapOptions& options) {
  const std::size_t n = uniform(rng, 1, options.max_n);
  const Exponent max_e = options.max_exponent;
  std::vector<ExponentVector> comps;
  switch (kind) {
    case CorpusKind::normal_form: {
      comps = random_normal_form(rng, n, max_e).comps;
      break;
    }
    case CorpusKind::broken: {
      NormalForm nf = random_normal_form(rng, n, max_e);
      const std::size_t victim = nf.structural[uniform(rng, 0, nf.structural.size() - 1)];
      nf.comps.erase(nf.comps.begin() + static_cast<std::ptrdiff_t>(victim));
      comps = std::move(nf.comps);
      break;
    }
    case CorpusKind::arbitrary: {
      const std::size_t p = uniform(rng, 2 * n, 2 * n + 3);
      while (comps.size() < p) {
        ExponentVector v(n);
        for (std::size_t i = 0; i < n; ++i)
          if (coin(rng)) v[i] = static_cast<Exponent>(uniform(rng, 1, max_e));
        if (!v.is_zero()) comps.push_back(std::move(v));
      }
      break;
    }
  }
  top_up(rng, comps, n, max_e);
  std::shuffle(comps.begin(), comps.end(), rng);
  return MonomialMap::with_default_names(n, std::move(comps));
}

std::vector<MonomialMap> random_corpus(std::uint64_t seed, std::size_t count, const RandomMapOptions& options) {
  std::mt19937_64 rng(seed);
  constexpr CorpusKind kinds[] = {CorpusKind::normal_form, CorpusKind::broken, CorpusKind::arbitrary};
  std::vector<MonomialMap> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_map(rng, kinds[k % 3], options));
  return out;
}

CorankOneSpec random_corank_one_spec(std::mt19937_64& rng, std::size_t max_n, Exponent max_m1, Exponent max_lambda,
                                     Exponent max_e) {
  CorankOneSpec s;
  s.n = uniform(rng, 2, std::max<std::size_t>(2, max_n));
  const auto m1 = static_cast<Exponent>(uniform(rng, 2, std::max<Exponent>(2, max_m1)));
  // Curve starting at m1: add larger exponents until the gcd drops to 1.
  s.curve = {m1};
  Exponent g = m1;
  const Exponent top = std::max<Exponent>(max_e, m1 + 1);
  while (g != 1 || (s.curve.size() < 3 && coin(rng))) {
    const auto m = static_cast<Exponent>(uniform(rng, m1 + 1, top));
    if (std::find(s.curve.begin(), s.curve.end(), m) != s.curve.end()) {
      if (g == 1) break;
      continue;
    }
    s.curve.push_back(m);
    g = std::gcd(g, m);
  }
  std::sort(s.curve.begin(), s.curve.end());
  for (std::size_t i = 0; i + 1 < s.n; ++i) s.lambdas.push_back(static_cast<Exponent>(uniform(rng, 1, max_lambda)));
  return s;
}

FullCorankSpec random_full_corank_spec(std::mt19937_64& rng, std::size_t max_n, Exponent max_e, Exponent max_mu) {
  FullCorankSpec s;
  const std::size_t n = uniform(rng, 2, std::max<std::size_t>(2, max_n));
  for (std::size_t j = 0; j < n; ++j) s.curves.push_back(random_curve(rng, max_e));
  s.mu.assign(n, std::vector<Exponent>(n, 0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t t = 0; t < n; ++t)
      if (j != t) s.mu[j][t] = static_cast<Exponent>(uniform(rng, 1, max_mu));
  return s;
}

}  // namespace monogerm
