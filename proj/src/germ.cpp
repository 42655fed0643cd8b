#include "monogerm/germ.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "monogerm/checked.hpp"
#include "monogerm/errors.hpp"

namespace monogerm {

std::uint64_t ExponentVector::degree() const noexcept {
  std::uint64_t d = 0;
  for (const Exponent x : e_) d += x;
  return d;
}

std::size_t ExponentVector::support_size() const noexcept {
  return static_cast<std::size_t>(std::count_if(e_.begin(), e_.end(), [](Exponent x) { return x != 0; }));
}

Exponent ExponentVector::max_entry() const noexcept {
  return e_.empty() ? 0 : *std::max_element(e_.begin(), e_.end());
}

bool ExponentVector::divides(const ExponentVector& other) const noexcept {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw Error(Errc::dimension_mismatch, "adding exponent vectors of different length");
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = checked::add(a.e_[i], b.e_[i]);
  return r;
}

bool deglex_less(const ExponentVector& a, const ExponentVector& b) noexcept {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return a.size() < b.size();
}

// ---------------------------------------------------------------------------

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

MonomialMap::MonomialMap(std::vector<std::string> vars, std::vector<ExponentVector> components)
    : vars_(std::move(vars)), components_(std::move(components)) {
  if (vars_.empty()) throw Error(Errc::invalid_argument, "a map-germ needs at least one source variable");
  std::set<std::string_view> seen;
  for (const auto& v : vars_) {
    if (!is_identifier(v)) throw Error(Errc::invalid_argument, "invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw Error(Errc::invalid_argument, "duplicate variable '" + v + "'");
  }
  if (components_.empty()) throw Error(Errc::invalid_argument, "a map-germ needs at least one component");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].size() != vars_.size())
      throw Error(Errc::dimension_mismatch, "component " + std::to_string(i + 1) + " has the wrong number of exponents");
    if (components_[i].is_zero())
      throw Error(Errc::zero_component, "component " + std::to_string(i + 1) + " does not vanish at the origin");
  }
}

std::vector<std::string> default_variable_names(std::size_t n) {
  static const char* kShort[] = {"x", "y", "z"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(n <= 3 ? std::string(kShort[i]) : "x" + std::to_string(i + 1));
  return names;
}

MonomialMap MonomialMap::with_default_names(std::size_t n, std::vector<ExponentVector> components) {
  return MonomialMap(default_variable_names(n), std::move(components));
}

std::vector<std::size_t> MonomialMap::duplicate_components() const {
  std::vector<std::size_t> dups;
  std::set<ExponentVector> seen;
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (!seen.insert(components_[i]).second) dups.push_back(i);
  return dups;
}

Exponent MonomialMap::max_exponent() const noexcept {
  Exponent m = 0;
  for (const auto& c : components_) m = std::max(m, c.max_entry());
  return m;
}

// ---------------------------------------------------------------------------
// Surface syntax

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    // Whitespace is insignificant everywhere, so drop it up front and keep the
    // original offsets for error messages.
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      s_.push_back(text[i]);
      offsets_.push_back(i);
    }
    end_offset_ = text.size();
  }

  MonomialMap parse() {
    expect_keyword("vars");
    std::vector<std::string> vars;
    vars.push_back(identifier());
    while (accept(',')) vars.push_back(identifier());
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (vars[i] == vars[j]) fail("duplicate variable '" + vars[i] + "'");
    expect(';');

    std::vector<ExponentVector> comps;
    comps.push_back(component(vars));
    while (accept(',')) comps.push_back(component(vars));
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return MonomialMap(std::move(vars), std::move(comps));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    const std::size_t at = pos_ < offsets_.size() ? offsets_[pos_] : end_offset_;
    throw Error(Errc::syntax_error, "syntax error at offset " + std::to_string(at) + ": " + msg,
                static_cast<std::int64_t>(at));
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_keyword(std::string_view kw) {
    if (s_.compare(pos_, kw.size(), kw) != 0) fail("expected '" + std::string(kw) + "'");
    pos_ += kw.size();
  }

  std::string identifier() {
    const std::size_t start = pos_;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected an identifier");
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return s_.substr(start, pos_ - start);
  }

  // Digits at the cursor as a checked unsigned value.
  std::uint64_t number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = checked::add(checked::mul<std::uint64_t>(v, 10), static_cast<std::uint64_t>(s_[pos_] - '0'));
      ++pos_;
    }
    return v;
  }

  ExponentVector component(const std::vector<std::string>& vars) {
    const std::size_t start = pos_;
    bool has_coefficient = false;
    std::uint64_t coefficient = 1;
    if (peek() == '-' || peek() == '+' || std::isdigit(static_cast<unsigned char>(peek()))) {
      if (peek() == '-' || peek() == '+') ++pos_;
      coefficient = number();
      has_coefficient = true;
      if (peek() == ',' || at_end()) {
        pos_ = start;
        throw Error(Errc::zero_component,
                    "constant component at offset " + std::to_string(offsets_[start]) + " does not vanish at the origin");
      }
      accept('*');
    }
    if (has_coefficient && coefficient == 0) {
      pos_ = start;
      throw Error(Errc::zero_coefficient, "zero coefficient at offset " + std::to_string(offsets_[start]));
    }

    ExponentVector v(vars.size());
    do {
      const std::size_t term_start = pos_;
      const std::string name = identifier();
      const auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) {
        throw Error(Errc::unknown_variable,
                    "unknown variable '" + name + "' at offset " + std::to_string(offsets_[term_start]));
      }
      Exponent power = 1;
      if (accept('^')) {
        const std::uint64_t e = number();
        if (e == 0) fail("exponents must be positive");
        power = checked::narrow<Exponent>(e);
      }
      auto& slot = v[static_cast<std::size_t>(it - vars.begin())];
      slot = checked::add(slot, power);
    } while (accept('*'));
    return v;
  }

  std::string s_;
  std::vector<std::size_t> offsets_;
  std::size_t end_offset_ = 0;
  std::size_t pos_ = 0;
};

}  // namespace

MonomialMap parse_map(std::string_view text) { return Parser(text).parse(); }

std::string format_monomial(const ExponentVector& v, std::span<const std::string> vars) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (v[i] > 1) out += '^' + std::to_string(v[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_map(const MonomialMap& f) {
  std::ostringstream os;
  os << "vars ";
  for (std::size_t i = 0; i < f.n(); ++i) os << (i ? "," : "") << f.vars()[i];
  os << ';';
  for (std::size_t i = 0; i < f.p(); ++i) os << (i ? ", " : " ") << format_monomial(f.component(i), f.vars());
  return os.str();
}

// ---------------------------------------------------------------------------
// JSON interchange

nlohmann::json to_json(const MonomialMap& f) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : f.components()) comps.push_back(c.entries());
  return {{"n", f.n()}, {"vars", f.vars()}, {"components", std::move(comps)}};
}

MonomialMap map_from_json(const nlohmann::json& j) {
  auto bad = [](const std::string& msg) { return Error(Errc::schema_error, "map JSON: " + msg); };
  if (!j.is_object()) throw bad("expected an object");
  if (!j.contains("components") || !j["components"].is_array()) throw bad("missing 'components' array");

  std::vector<ExponentVector> comps;
  for (const auto& c : j["components"]) {
    if (!c.is_array()) throw bad("each component must be an array of exponents");
    std::vector<Exponent> e;
    for (const auto& x : c) {
      if (!x.is_number_integer() || x.get<std::int64_t>() < 0) throw bad("exponents must be nonnegative integers");
      e.push_back(checked::narrow<Exponent>(x.get<std::int64_t>()));
    }
    comps.emplace_back(std::move(e));
  }

  std::vector<std::string> vars;
  if (j.contains("vars")) {
    if (!j["vars"].is_array()) throw bad("'vars' must be an array of strings");
    for (const auto& v : j["vars"]) {
      if (!v.is_string()) throw bad("'vars' must be an array of strings");
      vars.push_back(v.get<std::string>());
    }
  }
  std::size_t n = vars.size();
  if (j.contains("n")) {
    if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 1) throw bad("'n' must be a positive integer");
    n = j["n"].get<std::size_t>();
    if (!vars.empty() && vars.size() != n) throw bad("'n' disagrees with the length of 'vars'");
  }
  if (n == 0) throw bad("need 'n' or 'vars'");
  if (vars.empty()) vars = default_variable_names(n);
  return MonomialMap(std::move(vars), std::move(comps));
}

MonomialMap parse_map_any(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(Errc::syntax_error, std::string("invalid JSON: ") + e.what(), static_cast<std::int64_t>(e.byte));
    }
    return map_from_json(j);
  }
  return parse_map(text);
}

// ---------------------------------------------------------------------------

std::size_t corank(const MonomialMap& f) {
  std::vector<bool> immersive(f.n(), false);
  for (const auto& c : f.components()) {
    if (c.degree() != 1) continue;
    for (std::size_t i = 0; i < f.n(); ++i)
      if (c[i] == 1) immersive[i] = true;
  }
  return static_cast<std::size_t>(std::count(immersive.begin(), immersive.end(), false));
}

std::vector<std::vector<Exponent>> pure_power_profile(const MonomialMap& f) {
  std::vector<std::vector<Exponent>> profile(f.n());
  for (const auto& c : f.components()) {
    if (c.support_size() != 1) continue;
    for (std::size_t i = 0; i < f.n(); ++i)
      if (c[i] != 0) profile[i].push_back(c[i]);
  }
  for (auto& p : profile) {
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
  }
  return profile;
}

}  // namespace monogerm
