#include "lotsize/learning.hpp"

#include <algorithm>
#include <optional>

#include "lotsize/errors.hpp"

namespace lotsize::learning {

BigM compute_big_m(const Instance& inst) {
  const Units demand = total_demand(inst);
  BigM bound;
  bound.m.resize(inst.n);
  for (std::size_t i = 0; i < inst.n; ++i) bound.m[i] = std::min(max_lot(inst, i), demand);
  return bound;
}

SolveReport solve_learning_exact(const Instance& inst) {
  require_valid(inst);

  const std::size_t n = inst.n;
  const BigM bound = compute_big_m(inst);

  std::vector<std::optional<Money>> best(n + 1);
  std::vector<std::size_t> start(n + 1, 0);
  best[0] = Money{};

  std::uint64_t evaluated = 0;
  std::uint64_t skipped = 0;

  for (std::size_t j = 1; j <= n; ++j) {
    // Lot produced in period k covering demands k..j, grown backwards from
    // k = j so lot size and holding update in O(1) per candidate.
    Units lot = 0;
    Money holding;
    for (std::size_t k = j; k >= 1; --k) {
      holding += inst.holding_cost[k - 1] * lot;
      lot += inst.demand[k - 1];
      ++evaluated;

      if (lot > bound.m[k - 1]) {
        ++skipped;
        continue;
      }
      if (!best[k - 1]) continue;

      Money cost = *best[k - 1] + holding + (inst.base_unit_cost - inst.discount * lot) * lot;
      if (lot > 0) cost += inst.setup_cost[k - 1];
      // Strict improvement keeps the latest start among ties.
      if (!best[j] || cost < *best[j]) {
        best[j] = cost;
        start[j] = k;
      }
    }
  }

  if (!best[n]) throw InfeasibleError(0, InfeasibilityReason::no_feasible_chain, "capacity too small for any lot chain");

  Plan plan{std::vector<Units>(n, 0)};
  for (std::size_t j = n; j > 0;) {
    const std::size_t k = start[j];
    for (std::size_t t = k; t <= j; ++t) plan.production[k - 1] += inst.demand[t - 1];
    j = k - 1;
  }

  auto report = make_report(inst, std::move(plan), Algorithm::learning_exact, true);
  report.capacity_bound_caveat = skipped > 0;
  report.diagnostics["arcs_evaluated"] = evaluated;
  report.diagnostics["arcs_skipped_capacity"] = skipped;
  return report;
}

}  // namespace lotsize::learning
