#include <random>

#include "doctest.h"
#include "monogerm/kernels.hpp"

using namespace monogerm::kernels;

namespace {

std::vector<std::uint8_t> random_flags(std::mt19937_64& rng, std::size_t len, int density) {
  std::uniform_int_distribution<int> d(0, 99);
  std::vector<std::uint8_t> v(len);
  for (auto& b : v) b = d(rng) < density ? 1 : 0;
  return v;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("the scalar reference comes first") {
    const auto all = available_kernels();
    REQUIRE_FALSE(all.empty());
    CHECK(all.front()->isa == Isa::scalar);
    CHECK(to_string(active_kernels().isa).size() > 0);
  }

  TEST_CASE("every variant matches the scalar reference") {
    const auto& ref = scalar_kernels();
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<std::size_t> len_d(0, 300), off_d(0, 31), period_d(1, 70);
    for (const auto* k : available_kernels()) {
      CAPTURE(to_string(k->isa));
      for (int t = 0; t < 400; ++t) {
        const std::size_t len = len_d(rng), off = off_d(rng);
        const int density = t % 5 == 0 ? 99 : 30;
        auto a = random_flags(rng, len + off, density);
        const auto src = random_flags(rng, len + off, density);

        auto ra = a, ka = a;
        ref.or_into(ra.data() + off, src.data() + off, len);
        k->or_into(ka.data() + off, src.data() + off, len);
        CHECK(ra == ka);

        const std::size_t period = period_d(rng);
        auto rb = a, kb = a;
        ref.close_under_shift(rb.data() + off, len, period);
        k->close_under_shift(kb.data() + off, len, period);
        CHECK(rb == kb);

        CHECK(ref.count_zero(a.data() + off, len) == k->count_zero(a.data() + off, len));
        CHECK(ref.all_nonzero(a.data() + off, len) == k->all_nonzero(a.data() + off, len));
        std::vector<std::uint8_t> ones(len, 1);
        CHECK(k->all_nonzero(ones.data(), len));
      }
    }
  }

  TEST_CASE("close_under_shift semantics") {
    std::vector<std::uint8_t> v{1, 0, 0, 0, 0, 0, 0};
    scalar_kernels().close_under_shift(v.data(), v.size(), 3);
    CHECK(v == std::vector<std::uint8_t>{1, 0, 0, 1, 0, 0, 1});
  }
}
