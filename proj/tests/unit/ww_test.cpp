#include <gtest/gtest.h>

#include <optional>
#include <random>

#include "lotsize/errors.hpp"
#include "lotsize/oracle.hpp"
#include "lotsize/ww.hpp"
#include "test_support.hpp"

using namespace lotsize;
using lotsize::fixture::money;

namespace {

// Independent reference: every subset of production periods, each lot
// covering demand up to the next production period.
Money best_over_regeneration_patterns(const Instance& inst, std::size_t* patterns = nullptr) {
  std::optional<Money> best;
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << inst.n); ++mask) {
    Plan plan{std::vector<Units>(inst.n, 0)};
    std::optional<std::size_t> open;
    bool ok = true;
    for (std::size_t i = 0; i < inst.n; ++i) {
      if (mask & (1u << i)) open = i;
      if (!open) {
        if (inst.demand[i] > 0) ok = false;
        continue;
      }
      plan.production[*open] += inst.demand[i];
    }
    if (!ok || !(mask & 1u)) continue;
    ++count;
    try {
      const Money total = evaluate_plan(inst, plan).total;
      if (!best || total < *best) best = total;
    } catch (const InfeasibleError&) {
    }
  }
  if (patterns) *patterns = count;
  return *best;
}

Instance small_example() {
  return make_instance({10, 20, 30}, std::vector<Money>(3, money("30")), std::vector<Money>(3, money("1")), Money{},
                       {60, 60, 60}, Money{});
}

}  // namespace

TEST(WagnerWhitin, ThreePeriodExample) {
  const auto inst = small_example();
  std::size_t patterns = 0;
  EXPECT_EQ(best_over_regeneration_patterns(inst, &patterns), money("80"));
  EXPECT_EQ(patterns, 4u);

  const auto report = ww::solve_wagner_whitin(inst);
  EXPECT_EQ(report.plan.production, (std::vector<Units>{30, 0, 30}));
  EXPECT_EQ(report.breakdown.total, money("80"));
  EXPECT_TRUE(report.optimal);
  EXPECT_FALSE(report.capacity_bound_caveat);
}

TEST(WagnerWhitin, SinglePeriodIsForced) {
  const auto inst = make_instance({42}, {money("17")}, {money("2")}, Money{}, {100}, money("3"));
  const auto report = ww::solve_wagner_whitin(inst);
  EXPECT_EQ(report.plan.production, (std::vector<Units>{42}));
  EXPECT_EQ(report.breakdown.total, money("143"));  // 17 + 42 * 3
}

TEST(WagnerWhitin, ReferenceInstanceMatchesOracle) {
  const auto inst = fixture::reference_instance(1, 1, "0");
  const auto report = ww::solve_wagner_whitin(inst);
  const auto oracle = oracle::oracle_min(inst);
  EXPECT_EQ(oracle.diagnostics.at("assignments"), 720u);
  EXPECT_EQ(report.breakdown.total, oracle.breakdown.total);
  EXPECT_EQ(report.breakdown.total, best_over_regeneration_patterns(inst));
}

TEST(WagnerWhitin, RejectsLearningDiscount) {
  try {
    ww::solve_wagner_whitin(fixture::reference_instance(1, 1, "0.01"));
    FAIL() << "expected WrongModelError";
  } catch (const WrongModelError& e) {
    EXPECT_NE(std::string(e.what()).find("learning"), std::string::npos);
  }
}

TEST(WagnerWhitin, ZeroDemandPeriodsPayNoSetup) {
  const auto inst = make_instance({0, 0, 5, 0}, std::vector<Money>(4, money("10")), std::vector<Money>(4, money("1")),
                                  Money{}, {5, 5, 5, 5});
  const auto report = ww::solve_wagner_whitin(inst);
  EXPECT_EQ(report.plan.production, (std::vector<Units>{0, 0, 5, 0}));
  EXPECT_EQ(report.breakdown.setup_total, money("10"));
}

TEST(WagnerWhitin, AllZeroDemand) {
  const auto inst =
      make_instance({0, 0, 0}, std::vector<Money>(3, money("10")), std::vector<Money>(3, money("1")), Money{}, {1, 1, 1});
  const auto report = ww::solve_wagner_whitin(inst);
  EXPECT_EQ(report.breakdown.total, Money{});
}

TEST(WagnerWhitin, TieBreaksToLatestLot) {
  // One lot of 10 costs 10 + 5 carried = 15; two lots cost 10 + 5 = 15.
  const auto inst =
      make_instance({5, 5}, {money("10"), money("5")}, {money("1"), money("1")}, Money{}, {10, 10}, Money{});
  const auto report = ww::solve_wagner_whitin(inst);
  EXPECT_EQ(report.breakdown.total, money("15"));
  EXPECT_EQ(report.plan.production, (std::vector<Units>{5, 5}));
}

TEST(WagnerWhitin, CapacitySkipsLongLotsAndFlagsIt) {
  auto inst = fixture::reference_instance(1, 1, "0");
  inst.capacity.assign(6, 3000);
  const auto report = ww::solve_wagner_whitin(inst);
  EXPECT_TRUE(report.capacity_bound_caveat);
  EXPECT_GT(report.diagnostics.at("arcs_skipped_capacity"), 0u);
  for (Units p : report.plan.production) EXPECT_LE(p, 3000);
}

TEST(WagnerWhitin, NoFeasibleChain) {
  // Period 2 cannot cover its own demand and period 1 cannot carry it.
  const auto inst = make_instance({5, 10}, {money("1"), money("1")}, {money("1"), money("1")}, Money{}, {14, 9});
  EXPECT_THROW(ww::solve_wagner_whitin(inst), InfeasibleError);
}

TEST(WagnerWhitin, PruningDoesNotChangeTheOptimum) {
  std::mt19937_64 rng(21);
  fixture::RandomSpec spec;
  spec.max_n = 10;
  spec.discounts = {"0"};
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = fixture::random_instance(rng, spec);
    const auto report = ww::solve_wagner_whitin(inst);
    EXPECT_EQ(report.breakdown.total, best_over_regeneration_patterns(inst));
    EXPECT_TRUE(fixture::is_zero_inventory_ordering(inst, report.plan));
    EXPECT_TRUE(fixture::lots_are_contiguous_demand_sums(inst, report.plan));
    EXPECT_EQ(fixture::sum(report.plan.production), fixture::sum(inst.demand));
  }
}

TEST(WagnerWhitin, MatchesOracleOnRandomInstances) {
  std::mt19937_64 rng(22);
  fixture::RandomSpec spec;
  spec.max_n = 8;
  spec.discounts = {"0"};
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = fixture::random_instance(rng, spec);
    EXPECT_EQ(ww::solve_wagner_whitin(inst).breakdown.total, oracle::oracle_min(inst).breakdown.total);
  }
}

TEST(WagnerWhitin, SetupCountWeaklyFallsAsSetupCostRises) {
  std::mt19937_64 rng(23);
  fixture::RandomSpec spec;
  spec.max_n = 8;
  spec.discounts = {"0"};
  int violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = fixture::random_instance(rng, spec);
    const auto before = ww::solve_wagner_whitin(inst);
    std::size_t setups_before = 0;
    for (bool y : derive_setups(before.plan)) setups_before += y;

    auto raised = inst;
    const Money bump = money("250");
    for (auto& a : raised.setup_cost) a += bump;

    // Same plan under raised setups costs exactly setups * bump more.
    EXPECT_EQ(evaluate_plan(raised, before.plan).total, before.breakdown.total + bump * setups_before);

    const auto after = ww::solve_wagner_whitin(raised);
    std::size_t setups_after = 0;
    for (bool y : derive_setups(after.plan)) setups_after += y;
    if (setups_after > setups_before) ++violations;
  }
  EXPECT_EQ(violations, 0);
}
