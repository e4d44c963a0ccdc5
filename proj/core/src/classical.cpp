#include "lotsize/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lotsize/errors.hpp"

namespace lotsize::classical {

namespace {

void check_params(const EoqParams& p) {
  if (!(std::isfinite(p.demand_rate) && p.demand_rate > 0)) throw InvalidInputError("EOQ demand rate must be > 0");
  if (p.setup_cost.raw() <= 0) throw InvalidInputError("EOQ setup cost must be > 0");
  if (p.holding_cost.raw() <= 0) throw InvalidInputError("EOQ holding cost must be > 0");
  if (p.unit_cost.is_negative()) throw InvalidInputError("EOQ unit cost must be >= 0");
}

}  // namespace

double eoq_quantity(const EoqParams& p) {
  check_params(p);
  const long double a = p.setup_cost.to_long_double();
  const long double h = p.holding_cost.to_long_double();
  return static_cast<double>(std::sqrt(2.0L * a * static_cast<long double>(p.demand_rate) / h));
}

Money eoq_total_cost(const EoqParams& p) {
  check_params(p);
  const long double a = p.setup_cost.to_long_double();
  const long double h = p.holding_cost.to_long_double();
  const long double d = p.demand_rate;
  return Money::from_double(std::sqrt(2.0L * a * d * h) + p.unit_cost.to_long_double() * d);
}

EoqCostTerms eoq_cost_terms(const EoqParams& p, double q) {
  check_params(p);
  if (!(std::isfinite(q) && q > 0)) throw InvalidInputError("lot size must be > 0");
  const long double a = p.setup_cost.to_long_double();
  const long double h = p.holding_cost.to_long_double();
  const long double d = p.demand_rate;
  const long double lot = q;
  const long double setup = a * d / lot;
  const long double holding = lot * h / 2.0L;
  return {Money::from_double(setup), Money::from_double(holding),
          Money::from_double(setup + holding + p.unit_cost.to_long_double() * d)};
}

Money eoq_cost_curve(const EoqParams& p, double q) { return eoq_cost_terms(p, q).total; }

SolveReport lot_for_lot(const Instance& inst) {
  require_valid(inst);
  auto report = make_report(inst, Plan{inst.demand}, Algorithm::lot_for_lot, false);
  report.diagnostics["lots"] = static_cast<std::uint64_t>(
      std::count_if(inst.demand.begin(), inst.demand.end(), [](Units d) { return d > 0; }));
  return report;
}

SolveReport fixed_order_quantity(const Instance& inst, Units q) {
  require_valid(inst);
  if (q <= 0) throw InvalidInputError("order quantity must be positive");
  Units smallest = std::numeric_limits<Units>::max();
  for (std::size_t i = 0; i < inst.n; ++i) smallest = std::min(smallest, max_lot(inst, i));
  if (q > smallest) {
    throw InvalidInputError("order quantity " + std::to_string(q) + " exceeds smallest period capacity " +
                            std::to_string(smallest));
  }

  Plan plan{std::vector<Units>(inst.n, 0)};
  Units stock = 0;
  std::uint64_t lots = 0;
  for (std::size_t i = 0; i < inst.n; ++i) {
    if (stock - inst.demand[i] < 0) {
      plan.production[i] = q;
      stock += q;
      ++lots;
      if (stock - inst.demand[i] < 0) {
        throw InfeasibleError(i + 1, InfeasibilityReason::negative_inventory,
                              "one lot of " + std::to_string(q) + " cannot cover demand");
      }
    }
    stock -= inst.demand[i];
  }

  auto report = make_report(inst, std::move(plan), Algorithm::foq, false);
  report.diagnostics["lots"] = lots;
  return report;
}

EoqParams eoq_params_from(const Instance& inst) {
  require_valid(inst);
  const auto n = static_cast<long double>(inst.n);
  long double setup = 0;
  long double holding = 0;
  for (std::size_t i = 0; i < inst.n; ++i) {
    setup += inst.setup_cost[i].to_long_double();
    holding += inst.holding_cost[i].to_long_double();
  }
  EoqParams p;
  p.demand_rate = static_cast<double>(static_cast<long double>(total_demand(inst)) / n);
  p.setup_cost = Money::from_double(setup / n);
  p.holding_cost = Money::from_double(holding / n);
  p.unit_cost = inst.base_unit_cost;
  return p;
}

SolveReport eoq_lot_policy(const Instance& inst) {
  const EoqParams p = eoq_params_from(inst);
  if (total_demand(inst) == 0) {
    auto report = make_report(inst, Plan{std::vector<Units>(inst.n, 0)}, Algorithm::eoq, false);
    report.diagnostics["lots"] = 0;
    return report;
  }

  Units smallest = std::numeric_limits<Units>::max();
  for (std::size_t i = 0; i < inst.n; ++i) smallest = std::min(smallest, max_lot(inst, i));
  const auto q = std::clamp<Units>(static_cast<Units>(std::ceil(eoq_quantity(p))), 1, smallest);

  auto report = fixed_order_quantity(inst, q);
  report.algorithm = Algorithm::eoq;
  report.diagnostics["lot_size"] = static_cast<std::uint64_t>(q);
  return report;
}

}  // namespace lotsize::classical
