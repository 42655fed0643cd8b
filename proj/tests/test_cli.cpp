#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MONOGERM_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("analyze") {
    const auto r = run("analyze 'vars x,y; x^3, x^4, y^5, y^6, x^2*y, x*y^3' --format json");
    REQUIRE(r.status == 0);
    const auto j = json_of(r);
    CHECK(j["delta"] == 48);
    CHECK(j["verdict"] == "finite");
    CHECK(j["basis_truncated"] == false);

    const auto again = run("analyze 'vars x,y; x^3, x^4, y^5, y^6, x^2*y, x*y^3' --format json");
    CHECK(again.out == r.out);
  }

  TEST_CASE("several maps in parallel keep their order") {
    const auto r = run("analyze 'vars x,y; x, y^4, y^5, x*y' 'vars x,y; x, y^4, y^5, x*y^2' --jobs 2 --format json");
    REQUIRE(r.status == 0);
    const auto j = json_of(r);
    REQUIRE(j.is_array());
    CHECK(j[0]["delta"] == 10);
    CHECK(j[1]["verdict"] == "not_finite");
  }

  TEST_CASE("delta, classify and semigroup") {
    const auto d = run("delta 'vars x,y,z; x, y^2, y^3, z^2, z^3, x*y, x*z, y*z' --format json");
    REQUIRE(d.status == 0);
    CHECK(json_of(d)["delta"] == 4);

    const auto c = run("classify 'vars x1,x2,y; x1, x2, y^4, y^5, x1*y, x2*y, x1*x2*y^3' --format json");
    REQUIRE(c.status == 0);
    CHECK(json_of(c)["verdict"] == "finite");

    const auto s = run("semigroup 4 5 --format json");
    REQUIRE(s.status == 0);
    const auto sj = json_of(s);
    CHECK(sj["gaps"] == nlohmann::json::array({1, 2, 3, 6, 7, 11}));
    CHECK(sj["conductor"] == 12);
    CHECK(sj["delta"] == 6);
  }

  TEST_CASE("join, bounds and double points") {
    const auto j = run(R"(join '{"kind":"full","curves":[[3,4],[5,6]],"mu":[[0,2],[3,0]]}' --format json)");
    REQUIRE(j.status == 0);
    CHECK(json_of(j)["report"]["delta"] == 48);

    const auto p = run("bounds --projection 0 6 3 4 --stable --n 3 --format json");
    REQUIRE(p.status == 0);
    const auto pj = json_of(p)["bounds"][0];
    CHECK(pj["lower"] == 4);
    CHECK(pj["upper"] == 11);

    const auto dp = run("dpoints --curve 3 4 --lambdas 2 3 --format json");
    REQUIRE(dp.status == 0);
    CHECK(dp.out.find("18") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    CHECK(run("analyze 'vars x,y; x, 1+y'").status == 2);
    CHECK(run("semigroup 6 9").status == 2);
    CHECK(run("no-such-command").status == 2);
    CHECK(run("delta 'vars x,y; x^3, x^4, y^5, y^6, x^2*y, x*y^3' --max-box 50").status == 4);
    const auto inf = run("delta 'vars x,y; x, y^4, y^5, x*y^2' --format json");
    CHECK(inf.status == 0);
    CHECK(json_of(inf)["status"] == "infinite");
  }

  TEST_CASE("selftest") {
    const auto ok = run("selftest --maps 60");
    CHECK(ok.status == 0);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    const auto bad = run("selftest --maps 10 --inject-wrong-delta");
    CHECK(bad.status != 0);
    CHECK(bad.out.find("FAIL") != std::string::npos);
  }
}
