#include "monogerm/monoid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "monogerm/checked.hpp"
#include "monogerm/errors.hpp"
#include "monogerm/kernels.hpp"
#include "monogerm/semigroup.hpp"

namespace monogerm {
namespace {

std::uint64_t cells_for(std::span<const std::size_t> extent, std::uint64_t max_cells) {
  std::uint64_t cells = 1;
  for (const std::size_t e : extent) {
    if (__builtin_mul_overflow(cells, std::uint64_t{e}, &cells) || cells > max_cells) {
      throw Error(Errc::box_too_large, "membership box exceeds the cell cap of " + std::to_string(max_cells));
    }
  }
  return cells;
}

bool cube_fits(std::size_t n, std::uint64_t side, std::uint64_t max_cells) {
  std::uint64_t cells = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (__builtin_mul_overflow(cells, side, &cells) || cells > max_cells) return false;
  return true;
}

// Largest B with (B+1)^n <= max_cells.
std::uint64_t largest_cube_bound(std::size_t n, std::uint64_t max_cells) {
  auto side = static_cast<std::uint64_t>(std::pow(static_cast<double>(max_cells), 1.0 / static_cast<double>(n)));
  while (side > 1 && !cube_fits(n, side, max_cells)) --side;
  while (cube_fits(n, side + 1, max_cells)) ++side;
  return side == 0 ? 0 : side - 1;
}

}  // namespace

MembershipTable MembershipTable::build(const MonomialMap& f, Exponent bound, std::uint64_t max_cells) {
  const std::vector<Exponent> upper(f.n(), bound);
  return build_box(f, upper, max_cells);
}

MembershipTable MembershipTable::build_box(const MonomialMap& f, std::span<const Exponent> upper,
                                           std::uint64_t max_cells) {
  const std::size_t n = f.n();
  if (upper.size() != n) throw Error(Errc::dimension_mismatch, "box rank differs from the source dimension");
  std::vector<std::size_t> extent(n);
  for (std::size_t i = 0; i < n; ++i) extent[i] = std::size_t{upper[i]} + 1;
  const std::uint64_t cells = cells_for(extent, max_cells);

  std::vector<std::uint8_t> flags(cells, 0);
  const auto& k = kernels::active_kernels();
  const std::size_t row_len = extent[n - 1];
  const std::size_t prefix_dims = n - 1;

  // Row strides over the leading n-1 coordinates.
  std::vector<std::size_t> row_stride(prefix_dims, 1);
  for (std::size_t i = prefix_dims; i-- > 1;) row_stride[i - 1] = row_stride[i] * extent[i];
  const std::size_t rows = cells / row_len;

  struct CrossRow {
    ExponentVector g;
    std::size_t row_offset;
    std::size_t shift;
  };
  std::vector<CrossRow> cross;
  std::vector<std::size_t> periods;
  std::vector<ExponentVector> gens = f.components();
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto& g : gens) {
    bool fits = true;
    for (std::size_t i = 0; i < n; ++i) fits = fits && g[i] < extent[i];
    if (!fits) continue;  // a generator outside the box reaches nothing inside it
    bool in_row = true;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < prefix_dims; ++i) {
      in_row = in_row && g[i] == 0;
      offset += g[i] * row_stride[i];
    }
    if (in_row)
      periods.push_back(g[n - 1]);
    else
      cross.push_back({g, offset, g[n - 1]});
  }
  std::sort(periods.begin(), periods.end());

  std::vector<std::size_t> prefix(prefix_dims, 0);
  flags[0] = 1;
  for (std::size_t r = 0; r < rows; ++r) {
    std::uint8_t* row = flags.data() + r * row_len;
    for (const auto& c : cross) {
      bool below = true;
      for (std::size_t i = 0; i < prefix_dims && below; ++i) below = c.g[i] <= prefix[i];
      if (!below) continue;
      const std::uint8_t* src = flags.data() + (r - c.row_offset) * row_len;
      k.or_into(row + c.shift, src, row_len - c.shift);
    }
    for (const std::size_t p : periods) k.close_under_shift(row, row_len, p);

    for (std::size_t i = prefix_dims; i-- > 0;) {
      if (++prefix[i] < extent[i]) break;
      prefix[i] = 0;
    }
  }
  return MembershipTable(std::move(extent), std::move(flags));
}

bool MembershipTable::in_box(const ExponentVector& v) const noexcept {
  if (v.size() != extent_.size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] >= extent_[i]) return false;
  return true;
}

std::size_t MembershipTable::index(const ExponentVector& v) const {
  if (!in_box(v)) throw Error(Errc::invalid_argument, "exponent outside the membership box");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < v.size(); ++i) idx = idx * extent_[i] + v[i];
  return idx;
}

bool MembershipTable::contains(const ExponentVector& v) const { return flags_[index(v)] != 0; }

std::uint64_t MembershipTable::count_non_members() const {
  return kernels::active_kernels().count_zero(flags_.data(), flags_.size());
}

std::vector<ExponentVector> MembershipTable::non_members() const {
  std::vector<ExponentVector> out;
  ExponentVector v(extent_.size());
  for (std::size_t idx = 0; idx < flags_.size(); ++idx) {
    if (flags_[idx] == 0) out.push_back(v);
    for (std::size_t i = v.size(); i-- > 0;) {
      if (++v[i] < extent_[i]) break;
      v[i] = 0;
    }
  }
  std::sort(out.begin(), out.end(), deglex_less);
  return out;
}

bool MembershipTable::shell_covered(std::span<const Exponent> periods) const {
  const std::size_t n = extent_.size();
  if (periods.size() != n) throw Error(Errc::dimension_mismatch, "one period per axis expected");
  const auto& k = kernels::active_kernels();
  const std::size_t row_len = extent_[n - 1];
  const std::size_t rows = flags_.size() / row_len;
  // Tail of each row that lies in the shell through the last axis.
  const std::size_t last_period = std::max<std::size_t>(1, periods[n - 1]);
  const std::size_t tail_start = last_period >= row_len ? 0 : row_len - last_period;

  std::vector<std::size_t> prefix(n - 1, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    bool whole_row = false;
    for (std::size_t i = 0; i + 1 < n && !whole_row; ++i) whole_row = prefix[i] + periods[i] >= extent_[i];
    const std::uint8_t* row = flags_.data() + r * row_len;
    const std::size_t start = whole_row ? 0 : tail_start;
    if (!k.all_nonzero(row + start, row_len - start)) return false;
    for (std::size_t i = n - 1; i-- > 0;) {
      if (++prefix[i] < extent_[i]) break;
      prefix[i] = 0;
    }
  }
  return true;
}

bool contains_exponent(const MonomialMap& f, const ExponentVector& v) {
  if (v.size() != f.n()) throw Error(Errc::dimension_mismatch, "exponent has the wrong length");
  if (v.is_zero()) return true;
  const auto table = MembershipTable::build_box(f, v.view());
  return table.contains(v);
}

// ---------------------------------------------------------------------------

Exponent initial_box_bound(const MonomialMap& f) {
  std::uint64_t conductor = 0;
  for (const auto& powers : pure_power_profile(f)) {
    if (powers.empty()) continue;
    std::uint64_t g = 0;
    for (const Exponent r : powers) g = std::gcd(g, std::uint64_t{r});
    if (g != 1) continue;
    const std::vector<std::uint64_t> gens(powers.begin(), powers.end());
    conductor = std::max(conductor, NumericalSemigroup::from_generators(gens).conductor());
  }
  const std::uint64_t b = checked::add(checked::mul<std::uint64_t>(2, f.max_exponent()), conductor);
  return checked::narrow<Exponent>(b);
}

DeltaResult delta(const MonomialMap& f, const DeltaOptions& options) {
  const std::size_t n = f.n();
  const auto profile = pure_power_profile(f);
  std::vector<Exponent> periods(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (profile[i].empty()) {
      // k*e_i can only be a sum of pure powers of x_i.
      return DeltaInfinite{Obstruction{Obstruction::Kind::missing_pure_power, i, i, 0, ExponentVector::unit(n, i),
                                       ExponentVector::unit(n, i)}};
    }
    periods[i] = profile[i].front();
  }
  const Exponent max_period = *std::max_element(periods.begin(), periods.end());

  std::optional<FinitenessDecision> decision;
  std::optional<std::uint64_t> guaranteed;  // certification must succeed from here on
  auto decide = [&]() -> const FinitenessDecision& {
    if (!decision) {
      decision = decide_finiteness(f);
      if (const auto* d = std::get_if<JoinDecomposition>(&*decision))
        guaranteed = checked::add<std::uint64_t>(d->gap_coordinate_bound(), max_period);
    }
    return *decision;
  };

  if (options.structural_shortcut) {
    if (const auto* o = std::get_if<Obstruction>(&decide())) return DeltaInfinite{*o};
  }

  std::uint64_t bound = initial_box_bound(f);
  if (guaranteed) bound = std::min(bound, *guaranteed);
  bound = std::max<std::uint64_t>(bound, max_period);
  if (!cube_fits(n, bound + 1, options.max_cells)) {
    throw Error(Errc::box_too_large, "starting box [0," + std::to_string(bound) + "]^" + std::to_string(n) +
                                         " exceeds the cell cap of " + std::to_string(options.max_cells));
  }
  const std::uint64_t cap_bound = largest_cube_bound(n, options.max_cells);

  std::uint64_t tried = bound;
  for (;;) {
    tried = bound;
    const auto table = MembershipTable::build(f, static_cast<Exponent>(bound), options.max_cells);
    if (table.shell_covered(periods)) {
      if (std::holds_alternative<Obstruction>(decide())) {
        throw Error(Errc::internal_inconsistency,
                    "certified finite gap count but the structural decider reports an obstruction");
      }
      DeltaFinite out;
      out.basis = table.non_members();
      out.delta = out.basis.size();
      out.certified_bound = static_cast<Exponent>(bound);
      return out;
    }
    if (guaranteed && bound >= *guaranteed) {
      throw Error(Errc::internal_inconsistency,
                  "shell certificate failed at B=" + std::to_string(bound) + " although the structural bound is " +
                      std::to_string(*guaranteed));
    }
    std::uint64_t next = checked::mul<std::uint64_t>(bound, 2);
    if (guaranteed) next = std::min(next, *guaranteed);
    next = std::min(next, cap_bound);
    if (next <= bound) break;
    bound = next;
  }

  if (const auto* o = std::get_if<Obstruction>(&decide())) return DeltaInfinite{*o};
  if (guaranteed && tried >= *guaranteed) {
    throw Error(Errc::internal_inconsistency, "structural decider reports a finite complement the count cannot certify");
  }
  return DeltaInconclusive{static_cast<Exponent>(tried)};
}

std::uint64_t finite_delta(const MonomialMap& f, const DeltaOptions& options) {
  const auto r = delta(f, options);
  if (const auto* fin = std::get_if<DeltaFinite>(&r)) return fin->delta;
  if (std::holds_alternative<DeltaInfinite>(r)) throw Error(Errc::not_finite, "delta invariant is infinite");
  throw Error(Errc::box_too_large, "delta not certified within the cell cap");
}

std::vector<ExponentVector> monomial_basis(const MonomialMap& f, const DeltaOptions& options) {
  auto r = delta(f, options);
  if (auto* fin = std::get_if<DeltaFinite>(&r)) return std::move(fin->basis);
  if (std::holds_alternative<DeltaInfinite>(r)) throw Error(Errc::not_finite, "delta invariant is infinite");
  throw Error(Errc::box_too_large, "delta not certified within the cell cap");
}

std::uint64_t le_codimension(const MonomialMap& f, const DeltaOptions& options) {
  return checked::mul<std::uint64_t>(f.p(), finite_delta(f, options));
}

Stability is_stable(const MonomialMap& f, const DeltaOptions& options) {
  Stability s;
  s.caveat = f.p() < 2 * f.n();
  const auto r = delta(f, options);
  if (const auto* fin = std::get_if<DeltaFinite>(&r))
    s.stable = fin->delta == 0;
  else if (std::holds_alternative<DeltaInconclusive>(r))
    throw Error(Errc::box_too_large, "delta not certified within the cell cap");
  return s;
}

}  // namespace monogerm
