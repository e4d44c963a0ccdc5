#include "lotsize/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "lotsize/errors.hpp"
#include "lotsize/learning.hpp"

namespace lotsize::learning {

Instance ScenarioBatch::scenario(std::size_t index) const {
  const std::size_t x = index % discount.size();
  const std::size_t a = (index / discount.size()) % setup.size();
  const std::size_t h = index / (discount.size() * setup.size());

  Instance inst = base;
  inst.holding_cost = holding.at(h).value;
  inst.setup_cost = setup.at(a).value;
  inst.discount = discount.at(x).value;
  return inst;
}

const char* to_string(ScenarioStatus status) {
  switch (status) {
    case ScenarioStatus::solved:
      return "solved";
    case ScenarioStatus::invalid:
      return "invalid";
    case ScenarioStatus::infeasible:
      return "infeasible";
  }
  return "unknown";
}

namespace {

ScenarioResult run_one(const ScenarioBatch& batch, std::size_t index) {
  const std::size_t x = index % batch.discount.size();
  const std::size_t a = (index / batch.discount.size()) % batch.setup.size();
  const std::size_t h = index / (batch.discount.size() * batch.setup.size());

  ScenarioResult result;
  result.row = index + 1;
  result.holding_label = batch.holding[h].label;
  result.setup_label = batch.setup[a].label;
  result.discount_label = batch.discount[x].label;
  try {
    result.report = solve_learning_exact(batch.scenario(index));
  } catch (const InfeasibleError& e) {
    result.status = ScenarioStatus::infeasible;
    result.error = e.what();
  } catch (const InvalidInputError& e) {
    result.status = ScenarioStatus::invalid;
    result.error = e.what();
  } catch (const std::overflow_error& e) {
    result.status = ScenarioStatus::invalid;
    result.error = e.what();
  }
  return result;
}

}  // namespace

std::vector<ScenarioResult> solve_scenario_batch(const ScenarioBatch& batch, unsigned threads) {
  const std::size_t count = batch.size();
  std::vector<ScenarioResult> results(count);
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = run_one(batch, i);
    return results;
  }

  // Each worker claims indices from a shared counter and writes only its
  // own slots.
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  const auto worker_count = std::min<std::size_t>(threads, count);
  workers.reserve(worker_count);
  for (std::size_t w = 0; w < worker_count; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) results[i] = run_one(batch, i);
    });
  }
  workers.clear();
  return results;
}

ScenarioBatch reference_batch() {
  const auto money = [](std::int64_t v) { return Money::from_units(v); };
  const auto flat = [&](std::int64_t v) { return std::vector<Money>(6, money(v)); };

  ScenarioBatch batch;
  batch.base = make_instance({1500, 1500, 400, 200, 400, 1000}, flat(0), flat(0), Money{},
                             std::vector<Units>(6, 5000));
  batch.holding = {{"h1", flat(1)}, {"h2", flat(3)}, {"h3", flat(5)}};
  batch.setup = {{"A1", flat(2000)},
                 {"A2", {money(1500), money(1000), money(2000), money(3500), money(1500), money(2500)}}};
  batch.discount = {{"x1", *Money::parse("0.01")}, {"x2", *Money::parse("0.001")}, {"x3", *Money::parse("0.0001")}};
  return batch;
}

}  // namespace lotsize::learning
