#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "optout/sweep.hpp"

using namespace optout;

namespace {

const auto kUniform01 = ValuationDistribution::uniform(0, 1);

SingleSweepSpec base_spec() {
  SingleSweepSpec spec;
  spec.axis = SweepAxis::Gamma;
  spec.values = {0.0, 0.5, 1.0};
  spec.base = {1.0, 0.0, kUniform01, 0.6};
  spec.c_max = 1.0;
  spec.step = 0.01;
  return spec;
}

}  // namespace

TEST_CASE("gamma sweep rows match direct solves and are monotone") {
  const auto rows = single_sweep(base_spec());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].axis_value == 0.0);
  CHECK(rows[1].axis_value == 0.5);
  CHECK(rows[2].axis_value == 1.0);

  for (std::size_t i = 0; i < rows.size(); ++i) {
    MarketParams p = base_spec().base;
    p.gamma = rows[i].axis_value;
    const SingleSolution direct = optimal_cost(p, 1.0, 0.01);
    CHECK(rows[i].c_star.has_value() == direct.c_star.has_value());
    if (rows[i].c_star) CHECK(*rows[i].c_star == *direct.c_star);
    CHECK(rows[i].revenue_star == direct.revenue_star);
    CHECK(rows[i].revenue_no_optout == direct.baseline_no_optout);
    CHECK(rows[i].revenue_star >= rows[i].revenue_no_optout - 1e-12);
    CHECK(rows[i].optout_share >= 0.0);
    CHECK(rows[i].optout_share <= 1.0);
    // oracle cross-check
    const SingleSolution oracle = oracle_optimal_cost(p, 1.0);
    CHECK(rows[i].revenue_star >= oracle.revenue_star - 1e-9);
  }
  CHECK(rows[0].revenue_star == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(rows[1].revenue_star <= rows[2].revenue_star + 1e-12);
  CHECK(rows[0].revenue_star <= rows[1].revenue_star + 1e-12);
}

TEST_CASE("single-value sweep equals one optimal_cost call") {
  SingleSweepSpec spec = base_spec();
  spec.values = {0.3};
  const auto rows = single_sweep(spec);
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].c_star.has_value());
  CHECK(*rows[0].c_star == doctest::Approx(0.6).epsilon(1e-9));
  CHECK(rows[0].revenue_star == doctest::Approx(0.72).epsilon(1e-12));
}

TEST_CASE("sweeps are deterministic") {
  const auto a = single_sweep(base_spec());
  const auto b = single_sweep(base_spec());
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].revenue_star == b[i].revenue_star);
    CHECK(a[i].c_star == b[i].c_star);
  }
}

TEST_CASE("sweep input validation") {
  SingleSweepSpec spec = base_spec();
  spec.values = {};
  CHECK_THROWS_AS(single_sweep(spec), std::invalid_argument);
  spec.values = {0.5, 0.5};
  CHECK_THROWS_AS(single_sweep(spec), std::invalid_argument);
  spec.values = {0.5, 1.5};
  CHECK_THROWS_AS(single_sweep(spec), std::invalid_argument);
  spec.values = {0.5};
  spec.axis = SweepAxis::Rate;  // rate axis needs an exponential population
  CHECK_THROWS(single_sweep(spec));
}

TEST_CASE("rate sweep rebuilds the exponential population") {
  SingleSweepSpec spec;
  spec.axis = SweepAxis::Rate;
  spec.values = {0.5, 1.0, 2.0};
  spec.base = {1.0, 0.4, ValuationDistribution::exponential(1.0), 1.0};
  spec.step = 0.02;
  const auto rows = single_sweep(spec);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) CHECK(row.revenue_star >= row.revenue_no_optout - 1e-12);
}

TEST_CASE("duopoly sweep lists pure Nash cost pairs per row") {
  DuopolySweepSpec spec;
  spec.axis = SweepAxis::Gamma;
  spec.values = {0.5};
  ProviderParams p{1.0, 0.0, 1.0};
  spec.base = {p, p, kUniform01};
  spec.grid = CostGrid::regular(0.0, 1.0, 0.1);
  const auto rows = duopoly_sweep(spec);
  REQUIRE(rows.size() == 1);
  bool has_origin = false;
  for (const auto& e : rows[0].nash) {
    REQUIRE(e.c1.has_value());
    REQUIRE(e.c2.has_value());
    if (*e.c1 == 0.0 && *e.c2 == 0.0) has_origin = true;
  }
  CHECK(has_origin);

  // symmetric base: Nash entries closed under swap
  for (const auto& e : rows[0].nash) {
    bool found = false;
    for (const auto& f : rows[0].nash)
      if (f.c1 == e.c2 && f.c2 == e.c1) found = true;
    CHECK(found);
  }
}

TEST_CASE("duopoly sweep rejects an empty grid") {
  DuopolySweepSpec spec;
  spec.axis = SweepAxis::Gamma;
  spec.values = {0.5};
  ProviderParams p{1.0, 0.0, 1.0};
  spec.base = {p, p, kUniform01};
  CHECK_THROWS_AS(duopoly_sweep(spec), std::invalid_argument);
}

TEST_CASE("solver errors carry the offending axis value") {
  SingleSweepSpec spec = base_spec();
  spec.step = 5.0;  // step > c_max fails inside the solver
  try {
    single_sweep(spec);
    FAIL("expected an error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("axis value 0") != std::string::npos);
  }
}
