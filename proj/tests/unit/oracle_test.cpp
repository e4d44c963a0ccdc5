#include <gtest/gtest.h>

#include <random>

#include "lotsize/errors.hpp"
#include "lotsize/oracle.hpp"
#include "lotsize/ww.hpp"
#include "test_support.hpp"

using namespace lotsize;
using namespace lotsize::oracle;
using lotsize::fixture::money;

TEST(OracleMin, ReferenceRowOne) {
  const auto report = oracle_min(fixture::reference_instance(1, 1, "0.01"));
  EXPECT_EQ(report.diagnostics.at("assignments"), 720u);
  EXPECT_EQ(report.breakdown.total, money("261500"));
  EXPECT_EQ(report.plan.production, (std::vector<Units>{5000, 0, 0, 0, 0, 0}));
  EXPECT_EQ(report.algorithm, Algorithm::oracle_min);
}

TEST(OracleMin, SinglePeriod) {
  const auto inst = make_instance({9}, {money("1")}, {money("1")}, Money{}, {9});
  const auto report = oracle_min(inst);
  EXPECT_EQ(report.diagnostics.at("assignments"), 1u);
  EXPECT_EQ(report.plan.production, (std::vector<Units>{9}));
}

TEST(OracleMin, ThreePeriodExample) {
  const auto inst = make_instance({10, 20, 30}, std::vector<Money>(3, money("30")), std::vector<Money>(3, money("1")),
                                  Money{}, {60, 60, 60}, Money{});
  const auto report = oracle_min(inst);
  EXPECT_EQ(report.diagnostics.at("assignments"), 6u);
  EXPECT_EQ(report.breakdown.total, money("80"));
}

TEST(OracleMin, TooLarge) {
  const auto inst = make_instance(std::vector<Units>(9, 1), std::vector<Money>(9, money("1")),
                                  std::vector<Money>(9, money("1")), Money{}, std::vector<Units>(9, 9));
  EXPECT_THROW(oracle_min(inst), TooLargeError);
  EXPECT_NO_THROW(oracle_min(inst, 9));
}

TEST(OracleMin, InfeasibleWhenCapacityBlocksEverything) {
  const auto inst = make_instance({5, 10}, {money("1"), money("1")}, {money("1"), money("1")}, Money{}, {14, 9});
  EXPECT_THROW(oracle_min(inst), InfeasibleError);
}

TEST(OracleMin, TiesGoToSmallestPlan) {
  // (10, 0) and (5, 5) both cost 15; (5, 5) is lexicographically smaller.
  const auto inst =
      make_instance({5, 5}, {money("10"), money("5")}, {money("1"), money("1")}, Money{}, {10, 10}, Money{});
  EXPECT_EQ(oracle_min(inst).plan.production, (std::vector<Units>{5, 5}));
}

TEST(OracleGrid, AgreesWithNoSplitOracle) {
  const auto inst = make_instance({10, 20}, {money("5"), money("5")}, {money("1"), money("1")}, money("0.1"), {30, 30});
  const auto grid = oracle_grid(inst, {10, 1'000'000});
  EXPECT_EQ(grid.breakdown.total, oracle_min(inst).breakdown.total);
  EXPECT_EQ(grid.breakdown.total, money("2935"));
  EXPECT_EQ(grid.diagnostics.at("grid_points"), 4u);
}

TEST(OracleGrid, SinglePoint) {
  const auto inst = make_instance({10}, {money("5")}, {money("1")}, Money{}, {10});
  const auto report = oracle_grid(inst, {10, 100});
  EXPECT_EQ(report.plan.production, (std::vector<Units>{10}));
  EXPECT_EQ(report.diagnostics.at("grid_points"), 1u);
}

TEST(OracleGrid, ThreeWayAgreementWithoutDiscount) {
  std::mt19937_64 rng(41);
  fixture::RandomSpec spec;
  spec.min_n = 1;
  spec.max_n = 3;
  spec.max_demand = 60;
  spec.demand_step = 5;
  spec.discounts = {"0"};
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = fixture::random_instance(rng, spec);
    const Money grid = oracle_grid(inst, {5, 1'000'000}).breakdown.total;
    EXPECT_EQ(grid, oracle_min(inst).breakdown.total);
    EXPECT_EQ(grid, ww::solve_wagner_whitin(inst).breakdown.total);
  }
}

TEST(OracleGrid, Preconditions) {
  const auto four = make_instance({1, 1, 1, 1}, std::vector<Money>(4, money("1")), std::vector<Money>(4, money("1")),
                                  Money{}, {4, 4, 4, 4});
  EXPECT_THROW(oracle_grid(four, {1, 1000}), InvalidInputError);
  const auto odd = make_instance({10, 15}, {money("1"), money("1")}, {money("1"), money("1")}, Money{}, {25, 25});
  EXPECT_THROW(oracle_grid(odd, {10, 1000}), InvalidInputError);
  EXPECT_THROW(oracle_grid(odd, {0, 1000}), InvalidInputError);
  EXPECT_THROW(oracle_grid(odd, {5, 10}), TooLargeError);
}
