#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "monogerm/germ.hpp"
#include "monogerm/join.hpp"

namespace monogerm {

enum class CorpusKind {
  normal_form,  // identity + curves + links + pairs + residual, shuffled
  broken,       // a normal form with one structural component removed
  arbitrary,    // independent random sparse exponent vectors
};

struct RandomMapOptions {
  std::size_t max_n = 3;
  Exponent max_exponent = 7;
};

/// Every map has p >= 2n and exponents in [0, max_exponent].
MonomialMap random_map(std::mt19937_64& rng, CorpusKind kind, const RandomMapOptions& options = {});

/// `count` maps cycling through the three kinds, reproducible from `seed`.
std::vector<MonomialMap> random_corpus(std::uint64_t seed, std::size_t count, const RandomMapOptions& options = {});

/// A primitive increasing exponent list in [2, max_exponent] with at most
/// max_len entries. Needs max_exponent >= 3.
std::vector<Exponent> random_curve(std::mt19937_64& rng, Exponent max_exponent, std::size_t max_len = 3);

CorankOneSpec random_corank_one_spec(std::mt19937_64& rng, std::size_t max_n, Exponent max_m1, Exponent max_lambda,
                                     Exponent max_exponent = 7);
FullCorankSpec random_full_corank_spec(std::mt19937_64& rng, std::size_t max_n, Exponent max_exponent,
                                       Exponent max_mu);

/// A random exponent vector of length n with at least two nonzero entries.
ExponentVector random_residual(std::mt19937_64& rng, std::size_t n, Exponent max_exponent);

}  // namespace monogerm
