#include "lotsize/ww.hpp"

#include <optional>
#include <vector>

#include "lotsize/errors.hpp"

namespace lotsize::ww {

namespace {

bool uniform_capacity(const Instance& inst) {
  for (std::size_t i = 1; i < inst.n; ++i) {
    if (inst.capacity[i] != inst.capacity[0] || inst.setup_time[i] != inst.setup_time[0] ||
        inst.unit_time[i] != inst.unit_time[0]) {
      return false;
    }
  }
  return true;
}

}  // namespace

SolveReport solve_wagner_whitin(const Instance& inst) {
  require_valid(inst);
  if (!inst.discount.is_zero()) {
    throw WrongModelError("Wagner-Whitin assumes a constant unit cost but discount is " + inst.discount.to_string() +
                          "; use the learning model (solve_learning_exact) instead");
  }

  const std::size_t n = inst.n;
  const bool prune = uniform_capacity(inst);

  // best[j]: cheapest cost covering periods 1..j. last[j]: 1-based period
  // of the final lot in that chain.
  std::vector<std::optional<Money>> best(n + 1);
  std::vector<std::size_t> last(n + 1, 0);
  best[0] = Money{};

  std::uint64_t evaluated = 0;
  std::uint64_t pruned = 0;
  std::uint64_t skipped = 0;
  std::size_t first_candidate = 1;

  for (std::size_t j = 1; j <= n; ++j) {
    Units lot = 0;
    Money carrying;
    std::optional<Money> best_here;
    std::size_t best_k = 0;

    for (std::size_t k = j; k >= first_candidate; --k) {
      // Extending the lot back from k+1 to k carries everything it already
      // covered one more period.
      if (k < j) carrying += inst.holding_cost[k - 1] * lot;
      lot += inst.demand[k - 1];
      ++evaluated;

      if (lot > 0 && lot > max_lot(inst, k - 1)) {
        ++skipped;
        continue;
      }
      if (!best[k - 1]) continue;

      Money cost = *best[k - 1] + carrying + inst.base_unit_cost * lot;
      if (lot > 0) cost += inst.setup_cost[k - 1];
      if (!best_here || cost < *best_here) {
        best_here = cost;
        best_k = k;
      }
    }
    pruned += first_candidate - 1;

    best[j] = best_here;
    last[j] = best_k;

    // The rule relies on the chosen lot paying its setup at every longer
    // horizon, so zero lots do not move the bound.
    if (prune && best_here) {
      Units chosen = 0;
      for (std::size_t k = best_k; k <= j; ++k) chosen += inst.demand[k - 1];
      if (chosen > 0) first_candidate = best_k;
    }
  }

  if (!best[n]) throw InfeasibleError(0, InfeasibilityReason::no_feasible_chain, "capacity too small for any lot chain");

  Plan plan{std::vector<Units>(n, 0)};
  for (std::size_t j = n; j > 0;) {
    const std::size_t k = last[j];
    Units lot = 0;
    for (std::size_t t = k; t <= j; ++t) lot += inst.demand[t - 1];
    plan.production[k - 1] = lot;
    j = k - 1;
  }

  auto report = make_report(inst, std::move(plan), Algorithm::wagner_whitin, true);
  report.capacity_bound_caveat = skipped > 0;
  report.diagnostics["arcs_evaluated"] = evaluated;
  report.diagnostics["arcs_pruned"] = pruned;
  report.diagnostics["arcs_skipped_capacity"] = skipped;
  return report;
}

}  // namespace lotsize::ww
