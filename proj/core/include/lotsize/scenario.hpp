#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lotsize/instance.hpp"
#include "lotsize/report.hpp"

namespace lotsize::learning {

template <typename T>
struct Variant {
  std::string label;
  T value;

  friend bool operator==(const Variant&, const Variant&) = default;
};

/// Cross-product experiment: every holding variant x setup variant x
/// discount variant applied to a shared base instance. The base instance's
/// own holding_cost, setup_cost and discount are ignored.
struct ScenarioBatch {
  Instance base;
  std::vector<Variant<std::vector<Money>>> holding;
  std::vector<Variant<std::vector<Money>>> setup;
  std::vector<Variant<Money>> discount;

  std::size_t size() const { return holding.size() * setup.size() * discount.size(); }

  /// Scenario `index` (0-based) in holding-outer, setup-middle,
  /// discount-inner order.
  Instance scenario(std::size_t index) const;
};

enum class ScenarioStatus { solved, invalid, infeasible };

const char* to_string(ScenarioStatus status);

struct ScenarioResult {
  std::size_t row = 0;  // 1-based
  std::string holding_label;
  std::string setup_label;
  std::string discount_label;
  ScenarioStatus status = ScenarioStatus::solved;
  std::optional<SolveReport> report;
  std::string error;
};

/// Solves every scenario with solve_learning_exact. A failing scenario is
/// recorded in its result and does not stop the batch. With threads > 1 the
/// scenarios are spread over worker threads; output is identical to the
/// serial run.
std::vector<ScenarioResult> solve_scenario_batch(const ScenarioBatch& batch, unsigned threads = 1);

/// The 6-period, 18-scenario reference experiment: demand
/// (1500, 1500, 400, 200, 400, 1000), capacity 5000, holding 1/3/5, setup
/// constant 2000 or (1500, 1000, 2000, 3500, 1500, 2500), discount
/// 0.01/0.001/0.0001.
ScenarioBatch reference_batch();

}  // namespace lotsize::learning
