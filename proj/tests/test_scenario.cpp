#include <doctest.h>

#include <string>

#include "optout/scenario.hpp"

using namespace optout;

namespace {

const std::string kMinimal =
    R"({"distribution":{"kind":"uniform","lo":0.0,"hi":1.0},"benefit":1.0,"revenue_rate":1.0,"gamma":0.5})";

}  // namespace

TEST_CASE("minimal scenario parses") {
  const Scenario s = parse_scenario(kMinimal);
  CHECK(s.benefit == 1.0);
  CHECK(s.revenue_rate == 1.0);
  CHECK(s.gamma == 0.5);
  CHECK_FALSE(s.duopoly.has_value());
  CHECK(std::holds_alternative<Uniform>(s.dist.variant()));
}

TEST_CASE("all distribution fragments parse") {
  auto with_dist = [](const std::string& frag) {
    return parse_scenario(R"({"distribution":)" + frag +
                          R"(,"benefit":1,"revenue_rate":1,"gamma":0.5})");
  };
  CHECK(std::holds_alternative<Exponential>(
      with_dist(R"({"kind":"exponential","rate":1.0})").dist.variant()));
  CHECK(std::holds_alternative<PointMass>(
      with_dist(R"({"kind":"pointmass","at":0.4})").dist.variant()));
  CHECK(std::holds_alternative<Empirical>(
      with_dist(R"({"kind":"empirical","points":[[0.2,0.5],[0.8,0.5]]})").dist.variant()));
  CHECK_THROWS_AS(with_dist(R"({"kind":"normal","mu":0})"), ScenarioError);
}

TEST_CASE("duopoly block") {
  const Scenario s = parse_scenario(
      R"({"distribution":{"kind":"uniform","lo":0,"hi":1},"benefit":1,"revenue_rate":1,
          "gamma":0.5,"duopoly":{"benefit2":0.8,"revenue_rate2":2.0,"gamma2":0.3}})");
  REQUIRE(s.duopoly.has_value());
  const DuopolyParams d = to_duopoly_params(s);
  CHECK(d.provider2.benefit == 0.8);
  CHECK(d.provider2.revenue_rate == 2.0);
  CHECK(d.provider2.gamma == 0.3);

  // absent block mirrors provider 1
  const DuopolyParams mirrored = to_duopoly_params(parse_scenario(kMinimal));
  CHECK(mirrored.provider2.benefit == 1.0);
  CHECK(mirrored.provider2.gamma == 0.5);
}

TEST_CASE("diagnostics name the offending field") {
  auto expect_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_scenario(text);
      FAIL("expected ScenarioError for: ", text);
    } catch (const ScenarioError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error(
      R"({"distribution":{"kind":"uniform","lo":0,"hi":1},"benefit":1,"revenue_rate":1,"gamma":1.5})",
      "gamma");
  expect_error(
      R"({"distribution":{"kind":"uniform","lo":0,"hi":1},"benefit":1,"revenue_rate":1,"gamma":1.5})",
      "[0,1]");
  expect_error(
      R"({"distribution":{"kind":"uniform","lo":0,"hi":1},"benefit":-1,"revenue_rate":1,"gamma":0.5})",
      "benefit");
  expect_error(
      R"({"distribution":{"kind":"uniform","lo":0,"hi":1},"benefit":1,"revenue_rate":0,"gamma":0.5})",
      "revenue_rate");
  expect_error(
      R"({"distribution":{"kind":"uniform","lo":0,"hi":1},"benefit":1,"revenue_rate":1,"gamma":0.5,"extra":3})",
      "extra");
  expect_error(R"({"benefit":1,"revenue_rate":1,"gamma":0.5})", "distribution");
  expect_error("{not json", "scenario");
}

TEST_CASE("duplicated fields are rejected") {
  CHECK_THROWS_AS(
      parse_scenario(
          R"({"distribution":{"kind":"uniform","lo":0,"hi":1},"benefit":1,"benefit":2,"revenue_rate":1,"gamma":0.5})"),
      ScenarioError);
  CHECK_THROWS_AS(
      parse_scenario(
          R"({"distribution":{"kind":"uniform","lo":0,"lo":0,"hi":1},"benefit":1,"revenue_rate":1,"gamma":0.5})"),
      ScenarioError);
}

TEST_CASE("dump/parse round trip") {
  for (const std::string& text :
       {kMinimal,
        std::string(
            R"({"distribution":{"kind":"empirical","points":[[0.2,0.5],[0.8,0.5]]},"benefit":0.75,
                "revenue_rate":2.5,"gamma":0.125,"duopoly":{"benefit2":1,"revenue_rate2":1,"gamma2":0}})")}) {
    const Scenario s = parse_scenario(text);
    const Scenario again = parse_scenario(dump_scenario(s));
    CHECK(dump_scenario(again) == dump_scenario(s));
    CHECK(again.benefit == s.benefit);
    CHECK(again.gamma == s.gamma);
    CHECK(again.revenue_rate == s.revenue_rate);
    CHECK(again.duopoly.has_value() == s.duopoly.has_value());
  }
}

TEST_CASE("parse_range") {
  const auto vals = parse_range("0:1:0.5");
  REQUIRE(vals.size() == 3);
  CHECK(vals[0] == 0.0);
  CHECK(vals[1] == 0.5);
  CHECK(vals[2] == 1.0);  // inclusive upper end

  const auto fine = parse_range("0:1:0.1");
  REQUIRE(fine.size() == 11);
  CHECK(fine.back() == 1.0);

  CHECK(parse_range("0.3:0.3:0.1") == std::vector<double>{0.3});
  CHECK_THROWS_AS(parse_range("1:0:0.1"), ScenarioError);
  CHECK_THROWS_AS(parse_range("0:1:0"), ScenarioError);
  CHECK_THROWS_AS(parse_range("nonsense"), ScenarioError);
}

TEST_CASE("format_value uses 9 significant digits and no locale surprises") {
  CHECK(format_value(0.72) == "0.72");
  CHECK(format_value(1.0 / 3.0) == "0.333333333");
  CHECK(format_value(1234567.891) == "1234567.89");
  CHECK(format_optional(std::nullopt) == "none");
  CHECK(format_optional(0.6) == "0.6");
}
