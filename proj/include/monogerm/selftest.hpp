#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "monogerm/germ.hpp"

namespace monogerm {

/// Outcome of checking the structural decider against the gap count for one map.
struct CrossCheck {
  enum class Outcome { finite, infinite, inconclusive, disagreement };
  Outcome outcome = Outcome::inconclusive;
  std::string detail;
};

/// Runs the gap count with the structural shortcut off (grow until certified
/// or capped) and compares with decide_finiteness. For infinite maps the
/// obstruction family is checked member by member against the monoid. A
/// Finite verdict must also meet the target-dimension threshold.
CrossCheck cross_check(const MonomialMap& f, std::uint64_t max_cells);

struct SelftestOptions {
  std::uint64_t seed = 42;
  std::size_t random_maps = 500;
  std::uint64_t max_cells = std::uint64_t{1} << 22;
  bool inject_wrong_delta = false;  // negative control: corrupt one expected value
};

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestResult {
  std::vector<SelftestCheck> checks;
  std::size_t finite = 0;
  std::size_t infinite = 0;
  std::size_t inconclusive = 0;
  std::size_t disagreements = 0;

  bool passed() const;
  /// One "PASS|FAIL name: detail" line per check plus a totals line.
  std::string summary() const;
  nlohmann::json to_json() const;
};

SelftestResult run_selftest(const SelftestOptions& options = {});

}  // namespace monogerm
