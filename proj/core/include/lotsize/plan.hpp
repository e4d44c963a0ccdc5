#pragma once

#include <vector>

#include "lotsize/decimal.hpp"
#include "lotsize/instance.hpp"

namespace lotsize {

/// Per-period production quantities. Setup indicators are always derived
/// from positivity and never stored.
struct Plan {
  std::vector<Units> production;

  friend bool operator==(const Plan&, const Plan&) = default;
  friend auto operator<=>(const Plan&, const Plan&) = default;
};

std::vector<bool> derive_setups(const Plan& plan);

struct CostBreakdown {
  std::vector<Units> inventory;  // end of period
  std::vector<Money> unit_cost;
  Money setup_total;
  Money holding_total;
  Money production_total;
  Money total;

  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

/// Exact cost of `plan` on `inst`.
///
/// Inventory follows I_i = I_{i-1} + p_i - D_i from I_0 = 0, and each
/// period is charged A_i if it produces, h_i * I_i for carried stock, and
/// (base - x * p_i) * p_i for production. Leftover stock after the last
/// period is allowed and charged.
///
/// Throws InfeasibleError on a stockout or a lot over the period's capacity,
/// and std::invalid_argument if the plan length differs from `inst.n`.
CostBreakdown evaluate_plan(const Instance& inst, const Plan& plan);

}  // namespace lotsize
