#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "monogerm/classify.hpp"
#include "monogerm/germ.hpp"

namespace monogerm {

/// Characteristic function of the exponent monoid M ⊆ N^n generated by the
/// components of a map, on a box [0, extent_0) x ... x [0, extent_{n-1}).
/// Row-major: the last coordinate varies fastest.
class MembershipTable {
 public:
  static constexpr std::uint64_t kDefaultMaxCells = 100'000'000;

  /// Cube [0, bound]^n. Throws BoxTooLarge when (bound+1)^n > max_cells.
  static MembershipTable build(const MonomialMap& f, Exponent bound,
                               std::uint64_t max_cells = kDefaultMaxCells);

  /// Arbitrary box [0, upper_i] per axis.
  static MembershipTable build_box(const MonomialMap& f, std::span<const Exponent> upper,
                                   std::uint64_t max_cells = kDefaultMaxCells);

  std::size_t dims() const noexcept { return extent_.size(); }
  const std::vector<std::size_t>& extents() const noexcept { return extent_; }
  std::uint64_t cell_count() const noexcept { return flags_.size(); }
  std::span<const std::uint8_t> flags() const noexcept { return flags_; }

  /// Largest coordinate on axis 0 (the cube bound for cube tables).
  Exponent bound() const noexcept { return static_cast<Exponent>(extent_.front() - 1); }

  bool in_box(const ExponentVector& v) const noexcept;
  /// v must lie in the box.
  bool contains(const ExponentVector& v) const;

  std::uint64_t count_non_members() const;
  /// Non-members in deglex order.
  std::vector<ExponentVector> non_members() const;

  /// True iff every cell with some coordinate v_i > bound - periods[i]
  /// is a member. periods[i] >= 1 is a pure-power exponent on axis i.
  bool shell_covered(std::span<const Exponent> periods) const;

 private:
  MembershipTable(std::vector<std::size_t> extent, std::vector<std::uint8_t> flags)
      : extent_(std::move(extent)), flags_(std::move(flags)) {}

  std::size_t index(const ExponentVector& v) const;

  std::vector<std::size_t> extent_;
  std::vector<std::uint8_t> flags_;
};

/// v is a finite sum of component exponent vectors of f (0 is the empty sum).
bool contains_exponent(const MonomialMap& f, const ExponentVector& v);

struct DeltaOptions {
  std::uint64_t max_cells = MembershipTable::kDefaultMaxCells;
  /// Decide finiteness structurally before enumerating. When off, the box is
  /// grown until certified or capped and only then is the structural decider
  /// consulted; used to cross-check the two routes.
  bool structural_shortcut = true;
};

struct DeltaFinite {
  std::uint64_t delta = 0;
  std::vector<ExponentVector> basis;  // deglex
  Exponent certified_bound = 0;
};
struct DeltaInfinite {
  Obstruction witness;
};
struct DeltaInconclusive {
  Exponent bound_reached = 0;
};

using DeltaResult = std::variant<DeltaFinite, DeltaInfinite, DeltaInconclusive>;

/// δ_f = #(N^n \ M), counted on a box grown until the shell certificate holds:
/// every lattice point with some v_i > B - r_i (r_i the least pure power on
/// axis i) is in M, which forces every point outside the box into M.
/// Throws BoxTooLarge if even the starting box exceeds the cell cap and
/// InternalInconsistency if the count and the structural decider disagree.
DeltaResult delta(const MonomialMap& f, const DeltaOptions& options = {});

/// Box side the certified search starts from: 2*(max exponent) plus the
/// largest conductor among axes whose pure powers are primitive.
Exponent initial_box_bound(const MonomialMap& f);

/// N^n \ M in deglex order. Throws NotFinite (or BoxTooLarge when capped).
std::vector<ExponentVector> monomial_basis(const MonomialMap& f, const DeltaOptions& options = {});

/// Finite δ or NotFinite/BoxTooLarge.
std::uint64_t finite_delta(const MonomialMap& f, const DeltaOptions& options = {});

/// L_e-codimension p * δ_f.
std::uint64_t le_codimension(const MonomialMap& f, const DeltaOptions& options = {});

struct Stability {
  bool stable = false;
  /// δ = 0 characterizes stability only for p >= 2n.
  bool caveat = false;
};
Stability is_stable(const MonomialMap& f, const DeltaOptions& options = {});

}  // namespace monogerm
