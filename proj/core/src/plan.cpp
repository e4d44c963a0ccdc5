#include "lotsize/plan.hpp"

#include <stdexcept>
#include <string>

#include "lotsize/errors.hpp"

namespace lotsize {

std::vector<bool> derive_setups(const Plan& plan) {
  std::vector<bool> setups(plan.production.size());
  for (std::size_t i = 0; i < plan.production.size(); ++i) setups[i] = plan.production[i] > 0;
  return setups;
}

CostBreakdown evaluate_plan(const Instance& inst, const Plan& plan) {
  if (plan.production.size() != inst.n) {
    throw std::invalid_argument("plan has " + std::to_string(plan.production.size()) + " periods, instance has " +
                                std::to_string(inst.n));
  }

  CostBreakdown out;
  out.inventory.resize(inst.n);
  out.unit_cost.resize(inst.n);

  Units stock = 0;
  for (std::size_t i = 0; i < inst.n; ++i) {
    const Units p = plan.production[i];
    if (p < 0) throw std::invalid_argument("negative production in period " + std::to_string(i + 1));
    if (p > 0 && p > max_lot(inst, i)) {
      throw InfeasibleError(i + 1, InfeasibilityReason::capacity_exceeded,
                            "lot " + std::to_string(p) + " exceeds " + std::to_string(max_lot(inst, i)));
    }

    stock += p - inst.demand[i];
    if (stock < 0) throw InfeasibleError(i + 1, InfeasibilityReason::negative_inventory);
    out.inventory[i] = stock;

    out.unit_cost[i] = inst.base_unit_cost - inst.discount * p;
    if (p > 0) out.setup_total += inst.setup_cost[i];
    out.holding_total += inst.holding_cost[i] * stock;
    out.production_total += out.unit_cost[i] * p;
  }
  out.total = out.setup_total + out.holding_total + out.production_total;
  return out;
}

}  // namespace lotsize
