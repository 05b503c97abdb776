#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "stlab/errors.hpp"
#include "stlab/suite.hpp"

using namespace stlab;

TEST_CASE("defaults") {
  const SuiteConfig c;
  CHECK(c.systems.size() == 5);
  CHECK(c.systems.back() == RootSystemSpec{'A', 3});
  CHECK(c.primes == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(c.exponents == std::vector<std::uint64_t>{1, 2});
  CHECK(c.radius == 5);
  CHECK(c.suites == all_suites());
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("config parsing") {
  std::istringstream in(R"(# comment
systems = A1, b2
primes = 2,7
radius=3   # trailing comment
suites = steinberg,p1
)");
  const auto c = parse_config(in);
  CHECK(c.systems == std::vector<RootSystemSpec>{{'A', 1}, {'B', 2}});
  CHECK(c.primes == std::vector<std::uint64_t>{2, 7});
  CHECK(c.radius == 3);
  CHECK(c.suites == std::vector<std::string>{"steinberg", "p1"});
  CHECK(c.exponents == std::vector<std::uint64_t>{1, 2});
}

TEST_CASE("config errors") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
  };
  CHECK_THROWS_AS(parse("bogus = 1"), ValidationError);
  CHECK_THROWS_AS(parse("systems = E6"), ValidationError);
  CHECK_THROWS_AS(parse("primes = 4"), ValidationError);
  CHECK_THROWS_AS(parse("radius = five"), ValidationError);
  CHECK_THROWS_AS(parse("suites = bott, nonsense"), ValidationError);
  CHECK_THROWS_AS(parse("suites = "), ValidationError);
  CHECK_THROWS_AS(parse("kempf_q = 6"), ValidationError);
  CHECK_THROWS_AS(parse("just some words"), ValidationError);
  CHECK_THROWS_AS(load_config("/nonexistent/steinberg.cfg"), ValidationError);
}

TEST_CASE("config path resolution honours the environment") {
  ::unsetenv(kConfigEnvVar);
  CHECK(resolve_config(std::nullopt).radius == 5);
  ::setenv(kConfigEnvVar, "/nonexistent/steinberg.cfg", 1);
  CHECK_THROWS_AS(resolve_config(std::nullopt), ValidationError);
  ::unsetenv(kConfigEnvVar);
}

TEST_CASE("prime power factoring") {
  CHECK(factor_prime_power(8) == std::pair<std::uint64_t, std::uint64_t>{2, 3});
  CHECK(factor_prime_power(9) == std::pair<std::uint64_t, std::uint64_t>{3, 2});
  CHECK(factor_prime_power(7) == std::pair<std::uint64_t, std::uint64_t>{7, 1});
  CHECK_THROWS_AS(factor_prime_power(12), ValidationError);
  CHECK_THROWS_AS(factor_prime_power(1), ValidationError);
}

TEST_CASE("reports are deterministic and independent of the job count") {
  SuiteConfig c;
  c.systems = {{'A', 1}, {'A', 2}, {'B', 2}};
  c.demazure_systems = {{'A', 2}};
  c.radius = 3;
  const auto serial = verify_all(c, 1);
  const auto parallel = verify_all(c, 4);
  CHECK(serial.all_passed());
  CHECK(serial.to_json(c).dump() == parallel.to_json(c).dump());
  CHECK(serial.passed() + serial.failed() == serial.cases.size());

  const auto doc = serial.to_json(c);
  CHECK(doc["schema_version"] == kSchemaVersion);
  CHECK(doc.contains("config"));
  CHECK(!doc.contains("duration"));
  for (const auto& rec : doc["cases"])
    for (auto key : {"suite", "family", "rank", "p", "n", "weight", "passed", "witness"}) CHECK(rec.contains(key));
}

TEST_CASE("tampering drives failures with witnesses") {
  for (const auto& suite : all_suites()) {
    CAPTURE(suite);
    SuiteConfig c;
    c.systems = {{'A', 2}};
    c.demazure_systems = {{'A', 2}};
    c.kempf_systems = {{'A', 2}};
    c.primes = {2};
    c.exponents = {1};
    c.p1_primes = {2};
    c.p1_exponents = {1};
    c.radius = 2;
    c.suites = {suite};
    c.tamper = suite;
    const auto report = verify_all(c);
    CHECK_FALSE(report.all_passed());
    for (const auto& rec : report.cases)
      if (!rec.passed) CHECK(!rec.witness.is_null());
  }
}

TEST_CASE("single-suite runners") {
  auto ortho = run_orthogonality({'B', 2}, 3, 2, 0, 5);
  REQUIRE(ortho.size() == 1);
  CHECK(ortho[0].passed);
  CHECK_THROWS_AS(run_orthogonality({'B', 2}, 3, 2, 2, 5), ValidationError);
  CHECK_THROWS_AS(run_demazure({'A', 2}, "commutes", 1), ValidationError);
  CHECK(run_demazure({'G', 2}, "", 2).size() == 4);
  auto p1 = run_p1(3, 2, 10);
  CHECK(p1.size() == 2);
  CHECK(p1[0].passed);
  CHECK(p1[1].passed);
  CHECK(p1[0].to_json()["family"].is_null());
}
