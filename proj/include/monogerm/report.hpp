#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "monogerm/classify.hpp"
#include "monogerm/invariants.hpp"
#include "monogerm/monoid.hpp"
#include "monogerm/semigroup.hpp"

namespace monogerm {

inline constexpr int kReportSchemaVersion = 1;

struct WitnessInfo {
  std::string kind;
  std::string description;
  ExponentVector base;
  ExponentVector direction;

  friend bool operator==(const WitnessInfo&, const WitnessInfo&) = default;
};

/// Everything `analyze` knows about one map. JSON keys are emitted sorted,
/// so equal reports serialize to identical bytes.
struct Report {
  int schema_version = kReportSchemaVersion;
  MonomialMap input = MonomialMap({"x"}, {ExponentVector{1}});
  std::string verdict;                   // immersion | finite | not_finite | out_of_theorem_scope
  std::string delta_status;              // finite | infinite | inconclusive
  std::optional<std::uint64_t> delta;
  std::optional<std::uint64_t> le_codimension;
  std::optional<bool> stable;
  std::optional<Exponent> box_bound;     // certified bound, or the bound reached
  std::vector<ExponentVector> basis;     // deglex, possibly truncated
  bool basis_truncated = false;
  std::optional<WitnessInfo> witness;
  std::optional<nlohmann::json> decomposition;
  std::vector<BoundReport> bounds;
  std::map<std::string, double> timings_ms;  // only with --timings

  friend bool operator==(const Report&, const Report&) = default;
};

struct AnalyzeOptions {
  DeltaOptions delta;
  std::size_t basis_cap = 200;
  bool full_basis = false;
  bool bounds = false;
  bool timings = false;
};

/// classify + delta + L_e-codimension (+ bounds). Throws InternalInconsistency
/// when the verdict and the gap count disagree.
Report analyze(const MonomialMap& f, const AnalyzeOptions& options = {});

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

nlohmann::json decomposition_json(const JoinDecomposition& d);
nlohmann::json semigroup_json(const NumericalSemigroup& s);
WitnessInfo witness_info(const Obstruction& o, const MonomialMap& f);

/// Aligned "key  value" lines.
std::string format_table(const Report& r);
std::string format_table(const std::vector<std::pair<std::string, std::string>>& rows);
std::string format_bound(const BoundReport& b);

}  // namespace monogerm
