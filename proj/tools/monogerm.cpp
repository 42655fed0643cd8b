// Command-line front end. Exit status: 0 ok, 2 bad input, 3 internal
// inconsistency, 4 resource cap.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "monogerm/classify.hpp"
#include "monogerm/errors.hpp"
#include "monogerm/invariants.hpp"
#include "monogerm/join.hpp"
#include "monogerm/monoid.hpp"
#include "monogerm/report.hpp"
#include "monogerm/selftest.hpp"
#include "monogerm/semigroup.hpp"

using namespace monogerm;
using nlohmann::json;

namespace {

struct Common {
  std::string format = "table";
  std::uint64_t max_box = MembershipTable::kDefaultMaxCells;
  bool full_basis = false;
  bool bounds = false;
  bool timings = false;
  std::size_t jobs = 1;

  bool as_json() const { return format == "json"; }
  DeltaOptions delta() const {
    DeltaOptions d;
    d.max_cells = max_box;
    return d;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--max-box", c.max_box, "Cell cap for the membership box")->check(CLI::PositiveNumber);
}

// An argument is a file path if it starts with '@' or names an existing file;
// '-' reads standard input. Anything else is the map text itself.
std::string read_input(const std::string& arg) {
  std::string path;
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (!arg.empty() && arg[0] == '@')
    path = arg.substr(1);
  else if (std::error_code ec; std::filesystem::is_regular_file(arg, ec))
    path = arg;
  if (path.empty()) return arg;
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_argument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string witness_text(const Obstruction& o, const MonomialMap& f) {
  return std::string(to_string(o.kind)) + ": " + o.describe(f);
}

// ---------------------------------------------------------------------------

int run_analyze(const std::vector<std::string>& inputs, const Common& c) {
  std::vector<MonomialMap> maps;
  for (const auto& in : inputs) maps.push_back(parse_map_any(read_input(in)));

  AnalyzeOptions opts;
  opts.delta = c.delta();
  opts.full_basis = c.full_basis;
  opts.bounds = c.bounds;
  opts.timings = c.timings;

  std::vector<std::optional<Report>> reports(maps.size());
  std::vector<std::optional<Error>> errors(maps.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < maps.size();) {
      try {
        reports[i] = analyze(maps[i], opts);
      } catch (const Error& e) {
        errors[i] = e;
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(c.jobs, maps.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& e : errors)
    if (e) throw *e;
  if (c.as_json()) {
    if (reports.size() == 1) {
      emit(to_json(*reports.front()));
    } else {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(to_json(*r));
      emit(arr);
    }
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) std::cout << (i ? "\n" : "") << format_table(*reports[i]);
  }
  return 0;
}

int run_semigroup(const std::vector<std::uint64_t>& gens, const Common& c) {
  const auto s = NumericalSemigroup::from_generators(gens);
  const json j = semigroup_json(s);
  if (c.as_json()) {
    emit(j);
    return 0;
  }
  auto list = [](const json& a) {
    std::string out;
    for (const auto& x : a) out += (out.empty() ? "" : ", ") + std::to_string(x.get<std::uint64_t>());
    return "{" + out + "}";
  };
  std::cout << format_table({{"semigroup", s.to_string()},
                             {"multiplicity", std::to_string(s.multiplicity())},
                             {"apery", list(j["apery"])},
                             {"gaps", list(j["gaps"])},
                             {"conductor", std::to_string(s.conductor())},
                             {"delta", std::to_string(s.delta())}});
  return 0;
}

int run_join(const std::string& input, const Common& c) {
  json spec_json;
  try {
    spec_json = json::parse(read_input(input));
  } catch (const json::parse_error& e) {
    throw Error(Errc::syntax_error, std::string("join spec: ") + e.what());
  }
  const JoinSpec spec = join_spec_from_json(spec_json);
  const MonomialMap f = build_join(spec);
  AnalyzeOptions opts;
  opts.delta = c.delta();
  opts.full_basis = c.full_basis;
  opts.bounds = c.bounds;
  opts.timings = c.timings;
  const Report r = analyze(f, opts);
  if (c.as_json()) {
    emit({{"spec", to_json(spec)}, {"map", format_map(f)}, {"report", to_json(r)}});
  } else {
    std::cout << format_map(f) << "\n\n" << format_table(r);
  }
  return 0;
}

int run_delta(const std::string& input, const Common& c) {
  const MonomialMap f = parse_map_any(read_input(input));
  const DeltaResult r = delta(f, c.delta());
  json j;
  j["map"] = format_map(f);
  std::vector<std::pair<std::string, std::string>> rows{{"map", format_map(f)}};
  if (const auto* fin = std::get_if<DeltaFinite>(&r)) {
    const std::size_t keep = c.full_basis ? fin->basis.size() : std::min<std::size_t>(fin->basis.size(), 200);
    json basis = json::array();
    std::string text;
    for (std::size_t i = 0; i < keep; ++i) {
      basis.push_back(fin->basis[i].entries());
      text += (i ? ", " : "") + format_monomial(fin->basis[i], f.vars());
    }
    if (keep < fin->basis.size()) text += ", ...";
    j["status"] = "finite";
    j["delta"] = fin->delta;
    j["le_codimension"] = le_codimension(f, c.delta());
    j["certified_bound"] = fin->certified_bound;
    j["basis"] = std::move(basis);
    j["basis_truncated"] = keep < fin->basis.size();
    rows.insert(rows.end(), {{"delta", std::to_string(fin->delta)},
                             {"L_e-codimension", std::to_string(f.p() * fin->delta)},
                             {"certified box", std::to_string(fin->certified_bound)},
                             {"basis", "{" + text + "}"}});
  } else if (const auto* inf = std::get_if<DeltaInfinite>(&r)) {
    j["status"] = "infinite";
    j["witness"] = witness_text(inf->witness, f);
    rows.insert(rows.end(), {{"delta", "infinite"}, {"witness", witness_text(inf->witness, f)}});
  } else {
    const auto b = std::get<DeltaInconclusive>(r).bound_reached;
    j["status"] = "inconclusive";
    j["bound_reached"] = b;
    rows.insert(rows.end(), {{"delta", "inconclusive"}, {"box reached", std::to_string(b)}});
  }
  if (c.as_json())
    emit(j);
  else
    std::cout << format_table(rows);
  return 0;
}

int run_classify(const std::string& input, const Common& c) {
  const MonomialMap f = parse_map_any(read_input(input));
  const Verdict v = classify(f);
  json j;
  j["map"] = format_map(f);
  j["verdict"] = std::string(verdict_name(v));
  std::vector<std::pair<std::string, std::string>> rows{{"map", format_map(f)}, {"verdict", j["verdict"]}};
  if (const auto* d = decomposition_of(v)) {
    j["decomposition"] = decomposition_json(*d);
    j["min_target_dimension"] = min_target_dimension(f.n(), d->corank());
    rows.emplace_back("normal form", normal_form(*d));
    rows.emplace_back("normal form map", format_map(normal_form_map(*d)));
    rows.emplace_back("min target dimension", std::to_string(min_target_dimension(f.n(), d->corank())));
  } else if (const auto* nf = std::get_if<NotFinite>(&v)) {
    j["witness"] = witness_text(nf->reason, f);
    rows.emplace_back("witness", witness_text(nf->reason, f));
  } else {
    const auto& o = std::get<OutOfTheoremScope>(v);
    j["reason"] = "p = " + std::to_string(o.p) + " < 2n = " + std::to_string(o.two_n);
    rows.emplace_back("reason", j["reason"]);
  }
  if (c.as_json())
    emit(j);
  else
    std::cout << format_table(rows);
  return 0;
}

struct ProjectionArgs {
  std::vector<std::int64_t> values;  // aecod_gk p k delta
  bool stable = false;
  std::int64_t n = 0;
};

int run_bounds(const std::string& input, const ProjectionArgs& proj, const Common& c) {
  std::vector<BoundReport> reports;
  std::string header;
  if (!proj.values.empty()) {
    if (proj.values.size() != 4)
      throw Error(Errc::invalid_argument, "--projection takes AECOD_GK P K DELTA");
    reports.push_back(projection_bound(proj.values[0], proj.values[1], proj.values[2], proj.values[3], proj.stable,
                                       proj.n > 0 ? std::optional<std::int64_t>(proj.n) : std::nullopt));
  } else {
    if (input.empty()) throw Error(Errc::invalid_argument, "bounds needs a map or --projection");
    const MonomialMap f = parse_map_any(read_input(input));
    header = format_map(f);
    const auto r = delta(f, c.delta());
    if (!std::holds_alternative<DeltaFinite>(r)) throw Error(Errc::not_finite, "bounds need a finite delta invariant");
    reports = applicable_bounds(f, c.delta());
  }
  if (c.as_json()) {
    json arr = json::array();
    for (const auto& b : reports) arr.push_back(to_json(b));
    json j{{"bounds", std::move(arr)}};
    if (!header.empty()) j["map"] = header;
    emit(j);
  } else {
    std::vector<std::pair<std::string, std::string>> rows;
    if (!header.empty()) rows.emplace_back("map", header);
    for (const auto& b : reports) rows.emplace_back("bound", format_bound(b));
    std::cout << format_table(rows);
  }
  return 0;
}

int run_dpoints(const std::string& input, const std::vector<std::int64_t>& weights,
                const std::vector<std::int64_t>& curve, const std::vector<Exponent>& lambdas, const Common& c) {
  json j;
  std::vector<std::pair<std::string, std::string>> rows;
  if (!curve.empty()) {
    if (curve.size() != 2) throw Error(Errc::invalid_argument, "--curve takes M1 M2");
    const auto d = double_points_join_curve(lambdas, curve[0], curve[1]);
    const auto codim = divided_difference_codim(curve[0], curve[1]);
    j = {{"m1", curve[0]}, {"m2", curve[1]}, {"lambdas", lambdas}, {"double_points", d},
         {"divided_difference_codim", codim ? json(*codim) : json(nullptr)}};
    rows = {{"double points", std::to_string(d)},
            {"divided difference codim", codim ? std::to_string(*codim) : "infinite"}};
  } else {
    if (input.empty()) throw Error(Errc::invalid_argument, "dpoints needs a map or --curve");
    const MonomialMap f = parse_map_any(read_input(input));
    const auto d = double_points(f, weights);
    j = {{"map", format_map(f)}, {"double_points", d}};
    rows = {{"map", format_map(f)}, {"double points", std::to_string(d)}};
  }
  if (c.as_json())
    emit(j);
  else
    std::cout << format_table(rows);
  return 0;
}

int run_selftest(const SelftestOptions& opts, const Common& c) {
  const SelftestResult r = monogerm::run_selftest(opts);
  if (c.as_json())
    emit(r.to_json());
  else
    std::cout << r.summary();
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and A-finiteness of monomial map-germs"};
  app.require_subcommand(1);
  Common common;

  std::vector<std::string> analyze_inputs;
  auto* analyze_cmd = app.add_subcommand("analyze", "Classify, count gaps and report");
  analyze_cmd->add_option("maps", analyze_inputs, "Map text, JSON, a file path, @file or -")->required();
  add_common(analyze_cmd, common);
  analyze_cmd->add_flag("--full-basis", common.full_basis, "List the whole monomial basis");
  analyze_cmd->add_flag("--bounds", common.bounds, "Include bound reports");
  analyze_cmd->add_flag("--timings", common.timings, "Include wall-clock timings");
  analyze_cmd->add_option("--jobs", common.jobs, "Maps analyzed concurrently")->check(CLI::PositiveNumber);

  std::vector<std::uint64_t> gens;
  auto* semigroup_cmd = app.add_subcommand("semigroup", "Apery sequence, gaps and conductor");
  semigroup_cmd->add_option("generators", gens, "Generators")->required();
  add_common(semigroup_cmd, common);

  std::string input;
  auto* join_cmd = app.add_subcommand("join", "Build a join from a JSON spec and analyze it");
  join_cmd->add_option("spec", input, "Spec JSON, a file path, @file or -")->required();
  add_common(join_cmd, common);
  join_cmd->add_flag("--full-basis", common.full_basis, "List the whole monomial basis");
  join_cmd->add_flag("--bounds", common.bounds, "Include bound reports");
  join_cmd->add_flag("--timings", common.timings, "Include wall-clock timings");

  auto* delta_cmd = app.add_subcommand("delta", "Certified gap count and monomial basis");
  delta_cmd->add_option("map", input, "Map")->required();
  add_common(delta_cmd, common);
  delta_cmd->add_flag("--full-basis", common.full_basis, "List the whole monomial basis");

  auto* classify_cmd = app.add_subcommand("classify", "A-finiteness verdict and normal form");
  classify_cmd->add_option("map", input, "Map")->required();
  add_common(classify_cmd, common);

  ProjectionArgs proj;
  auto* bounds_cmd = app.add_subcommand("bounds", "Bound reports for a map, or a projection bound");
  bounds_cmd->add_option("map", input, "Map");
  bounds_cmd->add_option("--projection", proj.values, "AECOD_GK P K DELTA")->expected(4);
  bounds_cmd->add_flag("--stable", proj.stable, "The projection g_k is stable");
  bounds_cmd->add_option("--n", proj.n, "Source dimension for the stable interval");
  add_common(bounds_cmd, common);

  std::vector<std::int64_t> weights;
  std::vector<std::int64_t> curve;
  std::vector<Exponent> lambdas;
  auto* dpoints_cmd = app.add_subcommand("dpoints", "Double points of a corank-1 map into dimension 2n");
  dpoints_cmd->add_option("map", input, "Map");
  dpoints_cmd->add_option("--weights", weights, "Variable weights in map order");
  dpoints_cmd->add_option("--curve", curve, "M1 M2 of a two-exponent curve")->expected(2);
  dpoints_cmd->add_option("--lambdas", lambdas, "Link exponents");
  add_common(dpoints_cmd, common);

  SelftestOptions st;
  auto* selftest_cmd = app.add_subcommand("selftest", "Reference examples and the randomized cross-oracle");
  selftest_cmd->add_option("--seed", st.seed, "Corpus seed");
  selftest_cmd->add_option("--maps", st.random_maps, "Number of random maps");
  selftest_cmd->add_flag("--inject-wrong-delta", st.inject_wrong_delta, "Corrupt one expected value");
  add_common(selftest_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze_inputs, common);
    if (*semigroup_cmd) return run_semigroup(gens, common);
    if (*join_cmd) return run_join(input, common);
    if (*delta_cmd) return run_delta(input, common);
    if (*classify_cmd) return run_classify(input, common);
    if (*bounds_cmd) return run_bounds(input, proj, common);
    if (*dpoints_cmd) return run_dpoints(input, weights, curve, lambdas, common);
    if (*selftest_cmd) {
      if (common.max_box != MembershipTable::kDefaultMaxCells) st.max_cells = common.max_box;
      return run_selftest(st, common);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::bad_alloc&) {
    std::cerr << "error: ResourceLimit: out of memory\n";
    return 4;
  }
  return 2;
}
