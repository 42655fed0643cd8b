#include "monogerm/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

#include "monogerm/checked.hpp"
#include "monogerm/errors.hpp"

namespace monogerm {
namespace {

// Largest Apéry modulus (and gap listing) we will materialize.
constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 24;
constexpr std::uint64_t kMaxGapListing = std::uint64_t{1} << 26;

}  // namespace

std::vector<std::uint64_t> apery_by_residue(std::span<const std::uint64_t> gens, std::uint64_t modulus) {
  if (modulus == 0) throw Error(Errc::invalid_argument, "Apery modulus must be positive");
  if (modulus > kMaxModulus)
    throw Error(Errc::resource_limit, "Apery modulus " + std::to_string(modulus) + " exceeds the supported size");

  constexpr auto kUnreached = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> dist(modulus, kUnreached);
  using Entry = std::pair<std::uint64_t, std::uint64_t>;  // (value, residue)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    const auto [value, residue] = queue.top();
    queue.pop();
    if (value != dist[residue]) continue;
    for (const std::uint64_t g : gens) {
      const std::uint64_t next = checked::add(value, g);
      const std::uint64_t r = (residue + g % modulus) % modulus;
      if (next < dist[r]) {
        dist[r] = next;
        queue.emplace(next, r);
      }
    }
  }
  for (const std::uint64_t d : dist)
    if (d == kUnreached) throw Error(Errc::non_primitive, "generators do not reach every residue class");
  return dist;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const std::uint64_t> gens) {
  if (gens.empty()) throw Error(Errc::empty_generators, "a numerical semigroup needs at least one generator");
  std::vector<std::uint64_t> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() == 0) throw Error(Errc::invalid_argument, "generators must be positive");

  std::uint64_t g = 0;
  for (const std::uint64_t v : sorted) g = std::gcd(g, v);
  if (g != 1) {
    throw Error(Errc::non_primitive,
                "generators have gcd " + std::to_string(g) + " (non-primitive parameterization)",
                static_cast<std::int64_t>(g));
  }

  auto apery = monogerm::apery_by_residue(sorted, sorted.front());
  return NumericalSemigroup(std::move(sorted), std::move(apery));
}

bool NumericalSemigroup::contains(std::uint64_t s) const noexcept {
  return apery_[s % multiplicity()] <= s;
}

std::vector<std::uint64_t> NumericalSemigroup::apery_sequence() const {
  std::vector<std::uint64_t> out = apery_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> NumericalSemigroup::apery_sequence(std::uint64_t q) const {
  if (q == 0 || !contains(q))
    throw Error(Errc::modulus_not_in_semigroup, "Apery modulus " + std::to_string(q) + " is not a nonzero element");
  if (q == multiplicity()) return apery_sequence();
  auto out = monogerm::apery_by_residue(gens_, q);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> NumericalSemigroup::gaps() const {
  if (delta() > kMaxGapListing) throw Error(Errc::resource_limit, "gap set too large to list");
  const std::uint64_t m = multiplicity();
  std::vector<std::uint64_t> out;
  out.reserve(delta());
  for (std::uint64_t j = 1; j < m; ++j) {
    const std::uint64_t a = apery_[j];
    for (std::uint64_t beta = 1; beta <= a / m; ++beta) out.push_back(a - beta * m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t NumericalSemigroup::conductor() const noexcept {
  // Frobenius number = max Apéry element - m.
  const std::uint64_t m = multiplicity();
  if (m == 1) return 0;
  const std::uint64_t top = *std::max_element(apery_.begin(), apery_.end());
  return top - m + 1;
}

std::uint64_t NumericalSemigroup::delta() const noexcept {
  const std::uint64_t m = multiplicity();
  std::uint64_t count = 0;
  for (const std::uint64_t a : apery_) count += a / m;
  return count;
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? "," : "") << gens_[i];
  os << '>';
  return os.str();
}

}  // namespace monogerm
