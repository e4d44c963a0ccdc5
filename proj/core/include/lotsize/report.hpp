#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "lotsize/plan.hpp"

namespace lotsize {

enum class Algorithm { eoq, lot_for_lot, foq, wagner_whitin, learning_exact, oracle_min, oracle_grid };

const char* to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct SolveReport {
  Plan plan;
  CostBreakdown breakdown;  // always evaluate_plan(instance, plan)
  Algorithm algorithm = Algorithm::lot_for_lot;
  bool optimal = false;
  // Set when capacity forced the solver to drop candidate lots, in which
  // case optimality only holds among zero-inventory-ordering plans.
  bool capacity_bound_caveat = false;
  std::map<std::string, std::uint64_t> diagnostics;
};

/// Evaluates `plan` and wraps it in a report.
SolveReport make_report(const Instance& inst, Plan plan, Algorithm algorithm, bool optimal);

}  // namespace lotsize
