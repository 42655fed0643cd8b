#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace monogerm {

/// A numerical semigroup S = <v_1, ..., v_r> of N with gcd(v_i) = 1.
///
/// The Apéry sequence with respect to the multiplicity m (the least nonzero
/// element) is computed once at construction; every other query (membership,
/// gaps, conductor, gap count) is answered from it. Instances are immutable.
class NumericalSemigroup {
 public:
  /// Sorts and deduplicates `gens`. Throws EmptyGenerators for an empty list,
  /// InvalidArgument for a zero generator and NonPrimitive (detail = gcd)
  /// when the generators share a factor.
  static NumericalSemigroup from_generators(std::span<const std::uint64_t> gens);
  static NumericalSemigroup from_generators(std::initializer_list<std::uint64_t> gens) {
    return from_generators(std::span<const std::uint64_t>(gens.begin(), gens.size()));
  }

  const std::vector<std::uint64_t>& generators() const noexcept { return gens_; }
  std::uint64_t multiplicity() const noexcept { return gens_.front(); }

  /// s ∈ S, decided as apery[s mod m] <= s.
  bool contains(std::uint64_t s) const noexcept;

  /// Apéry sequence with respect to the multiplicity, ascending: a_0 = 0 and
  /// each a_j is the least element of S outside the classes of a_0..a_{j-1}.
  std::vector<std::uint64_t> apery_sequence() const;

  /// Apéry sequence with respect to an arbitrary nonzero element q of S.
  /// Throws ModulusNotInSemigroup when q = 0 or q ∉ S.
  std::vector<std::uint64_t> apery_sequence(std::uint64_t q) const;

  /// Least element of S in each residue class mod m, indexed by residue.
  const std::vector<std::uint64_t>& apery_by_residue() const noexcept { return apery_; }

  /// N \ S in ascending order, enumerated from the Apéry set as
  /// { a_j - beta*m : 1 <= beta <= floor(a_j / m) }.
  std::vector<std::uint64_t> gaps() const;

  /// Least c with c + N ⊂ S; 0 when S = N.
  std::uint64_t conductor() const noexcept;

  /// Number of gaps, i.e. the delta invariant of a monomial curve with this
  /// value semigroup.
  std::uint64_t delta() const noexcept;

  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gens_ == b.gens_;
  }

 private:
  NumericalSemigroup(std::vector<std::uint64_t> gens, std::vector<std::uint64_t> apery)
      : gens_(std::move(gens)), apery_(std::move(apery)) {}

  std::vector<std::uint64_t> gens_;
  std::vector<std::uint64_t> apery_;
};

/// Least element of <gens> in each residue class modulo `modulus`, indexed by
/// residue (shortest paths on the residue graph). Requires gcd(gens) = 1 and
/// modulus >= 1.
std::vector<std::uint64_t> apery_by_residue(std::span<const std::uint64_t> gens, std::uint64_t modulus);

}  // namespace monogerm
