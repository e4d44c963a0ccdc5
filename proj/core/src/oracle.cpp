#include "lotsize/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

#include "lotsize/errors.hpp"

namespace lotsize::oracle {

namespace {

struct Incumbent {
  std::optional<Plan> plan;
  std::optional<CostBreakdown> breakdown;
  std::uint64_t candidates = 0;
  std::uint64_t feasible = 0;

  void offer(const Instance& inst, const Plan& plan_in) {
    ++candidates;
    CostBreakdown cost;
    try {
      cost = evaluate_plan(inst, plan_in);
    } catch (const InfeasibleError&) {
      return;
    }
    ++feasible;
    if (!breakdown || cost.total < breakdown->total ||
        (cost.total == breakdown->total && plan_in < *plan)) {
      plan = plan_in;
      breakdown = std::move(cost);
    }
  }
};

void assign(const Instance& inst, std::size_t period, Plan& plan, Incumbent& best) {
  if (period == inst.n) {
    best.offer(inst, plan);
    return;
  }
  for (std::size_t source = 0; source <= period; ++source) {
    plan.production[source] += inst.demand[period];
    assign(inst, period + 1, plan, best);
    plan.production[source] -= inst.demand[period];
  }
}

SolveReport finish(Incumbent& best, Algorithm algorithm, const char* counter) {
  if (!best.plan) throw InfeasibleError(0, InfeasibilityReason::no_feasible_chain, "no enumerated plan is feasible");
  SolveReport report;
  report.plan = std::move(*best.plan);
  report.breakdown = std::move(*best.breakdown);
  report.algorithm = algorithm;
  report.optimal = true;
  report.diagnostics[counter] = best.candidates;
  report.diagnostics["feasible"] = best.feasible;
  return report;
}

}  // namespace

SolveReport oracle_min(const Instance& inst, std::size_t max_n) {
  require_valid(inst);
  if (inst.n > max_n) {
    throw TooLargeError("oracle enumeration limited to " + std::to_string(max_n) + " periods, instance has " +
                        std::to_string(inst.n));
  }
  Incumbent best;
  Plan plan{std::vector<Units>(inst.n, 0)};
  assign(inst, 0, plan, best);
  return finish(best, Algorithm::oracle_min, "assignments");
}

SolveReport oracle_grid(const Instance& inst, const GridOptions& options) {
  require_valid(inst);
  if (inst.n > 3) throw InvalidInputError("grid oracle supports at most 3 periods");
  if (options.step <= 0) throw InvalidInputError("grid step must be positive");
  for (std::size_t i = 0; i < inst.n; ++i) {
    if (inst.demand[i] % options.step != 0) {
      throw InvalidInputError("grid step " + std::to_string(options.step) + " does not divide demand of period " +
                              std::to_string(i + 1));
    }
  }

  const Units levels = total_demand(inst) / options.step + 1;
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < inst.n; ++i) {
    points *= static_cast<std::uint64_t>(levels);
    if (points > options.budget) {
      throw TooLargeError("grid of " + std::to_string(levels) + "^" + std::to_string(inst.n) +
                          " points exceeds budget " + std::to_string(options.budget));
    }
  }

  // The last period takes whatever closes the horizon at zero stock.
  Incumbent best;
  Plan plan{std::vector<Units>(inst.n, 0)};
  const Units demand = total_demand(inst);
  std::vector<Units> level(inst.n - 1, 0);
  while (true) {
    Units used = 0;
    for (std::size_t i = 0; i + 1 < inst.n; ++i) {
      plan.production[i] = level[i] * options.step;
      used += plan.production[i];
    }
    if (used <= demand) {
      plan.production[inst.n - 1] = demand - used;
      best.offer(inst, plan);
    }

    std::size_t digit = 0;
    while (digit < level.size() && ++level[digit] == levels) level[digit++] = 0;
    if (digit == level.size()) break;
  }
  return finish(best, Algorithm::oracle_grid, "grid_points");
}

}  // namespace lotsize::oracle
