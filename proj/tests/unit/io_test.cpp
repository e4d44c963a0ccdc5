#include <gtest/gtest.h>

#include <random>

#include "lotsize/errors.hpp"
#include "lotsize/io.hpp"
#include "test_support.hpp"

using namespace lotsize;
using lotsize::fixture::money;

TEST(InstanceText, ParsesReferenceInstance) {
  const auto inst = io::parse_instance(R"(# reference instance, h1 A1 x1
n = 6
demand = 1500, 1500, 400, 200, 400, 1000
setup_cost = 2000
holding_cost = 1, 1, 1, 1, 1, 1   # per unit per period
discount = 0.01
capacity = 5000
)");
  EXPECT_EQ(inst, fixture::reference_instance(1, 1, "0.01"));
}

TEST(InstanceText, DefaultsAndOverrides) {
  const auto inst = io::parse_instance(
      "demand = 4, 0\nsetup_cost = 1\nholding_cost = 0\ncapacity = 10\nsetup_time = 2\nunit_time = 2, 1.5\n"
      "base_unit_cost = 12.25\n");
  EXPECT_EQ(inst.n, 2u);
  EXPECT_EQ(inst.base_unit_cost, money("12.25"));
  EXPECT_EQ(inst.discount, Money{});
  EXPECT_EQ(inst.unit_time[1], money("1.5"));
  EXPECT_EQ(max_lot(inst, 0), 4);
}

TEST(InstanceText, Errors) {
  const char* bad[] = {
      "demand = 1\nsetup_cost = 1\nholding_cost = 1\n",                                    // no capacity
      "demand = 1\nsetup_cost = 1\nholding_cost = 1\ncapacity = 1\ncolour = red\n",         // unknown key
      "demand = 1\ndemand = 2\n",                                                          // duplicate
      "demand 1\n",                                                                        // no '='
      "demand = 1, x\nsetup_cost = 1\nholding_cost = 1\ncapacity = 1\n",                    // not a number
      "demand = 1\nsetup_cost = 1.00001\nholding_cost = 1\ncapacity = 1\n",                 // 5 digits
      "n = 3\ndemand = 1, 2\nsetup_cost = 1\nholding_cost = 1\ncapacity = 1\n",             // length
      "n = 0\ndemand = 1\nsetup_cost = 1\nholding_cost = 1\ncapacity = 1\n",                // n < 1
      "demand = \n",                                                                       // empty value
  };
  for (const char* text : bad) EXPECT_THROW(io::parse_instance(text), ParseError) << text;
}

TEST(InstanceText, ParseErrorCarriesLine) {
  try {
    io::parse_instance("# header\n\ndemand = 1, oops\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(InstanceText, RoundTripProperty) {
  std::mt19937_64 rng(51);
  fixture::RandomSpec spec;
  spec.min_n = 1;
  spec.max_n = 12;
  std::uniform_int_distribution<std::int64_t> time(0, 50000);
  for (int i = 0; i < 300; ++i) {
    auto inst = fixture::random_instance(rng, spec);
    for (auto& t : inst.setup_time) t = Decimal::from_raw(time(rng));
    for (auto& b : inst.unit_time) b = Decimal::from_raw(time(rng) + 1);
    inst.base_unit_cost = Decimal::from_raw(time(rng) * 37);
    EXPECT_EQ(io::parse_instance(io::format_instance(inst)), inst);
  }
}

TEST(ScenarioText, ParsesGrid) {
  const auto batch = io::parse_scenario_batch(R"(
demand = 1500, 1500, 400, 200, 400, 1000
capacity = 5000
holding_cost.1 = 1
holding_cost.2 = 3
holding_cost.3 = 5
setup_cost.1 = 2000
setup_cost.2 = 1500, 1000, 2000, 3500, 1500, 2500
discount.1 = 0.01
discount.2 = 0.001
discount.3 = 0.0001
)");
  const auto reference = learning::reference_batch();
  EXPECT_EQ(batch.base, reference.base);
  EXPECT_EQ(batch.holding, reference.holding);
  EXPECT_EQ(batch.setup, reference.setup);
  EXPECT_EQ(batch.discount, reference.discount);
  EXPECT_EQ(batch.size(), 18u);
}

TEST(ScenarioText, VariantsSortNumerically) {
  const auto batch = io::parse_scenario_batch(
      "demand = 1\ncapacity = 1\ndiscount.10 = 0.5\ndiscount.2 = 0.25\nsetup_cost = 3\n");
  ASSERT_EQ(batch.discount.size(), 2u);
  EXPECT_EQ(batch.discount[0].label, "x2");
  EXPECT_EQ(batch.discount[1].label, "x10");
  ASSERT_EQ(batch.setup.size(), 1u);
  EXPECT_EQ(batch.setup[0].label, "A1");
  ASSERT_EQ(batch.holding.size(), 1u);
  EXPECT_EQ(batch.holding[0].value, std::vector<Money>{Money{}});
}

TEST(ScenarioText, EmptyFileIsEmptyBatch) {
  EXPECT_EQ(io::parse_scenario_batch("").size(), 0u);
  EXPECT_EQ(io::parse_scenario_batch("# nothing here\n\n").size(), 0u);
}

TEST(ScenarioText, Errors) {
  EXPECT_THROW(io::parse_scenario_batch("demand = 1\ncapacity = 1\nholding_cost = 1\nholding_cost.1 = 2\n"),
               ParseError);
  EXPECT_THROW(io::parse_scenario_batch("demand = 1\ncapacity = 1\ncapacity.2 = 1\n"), ParseError);
  EXPECT_THROW(io::parse_scenario_batch("demand = 1\ncapacity = 1\ndiscount.0 = 1\n"), ParseError);
  EXPECT_THROW(io::parse_scenario_batch("capacity = 1\ndiscount.1 = 1\n"), ParseError);
}
