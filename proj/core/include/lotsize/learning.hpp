#pragma once

#include <vector>

#include "lotsize/instance.hpp"
#include "lotsize/report.hpp"

namespace lotsize::learning {

/// Per-period production bound M_i = min((C_i - t_Ai) / b_i, total demand),
/// the tightest value linking a lot to its setup indicator.
struct BigM {
  std::vector<Units> m;
};

BigM compute_big_m(const Instance& inst);

/// Exact minimiser of setup + holding + (base - x * p) * p.
///
/// Production cost is concave in the lot size and holding is linear, so an
/// uncapacitated optimum exists among zero-inventory-ordering plans: every
/// lot covers a contiguous run of demands. The solver runs the O(n^2)
/// regeneration-interval recursion over those runs. Runs larger than the
/// period's BigM bound are dropped and flagged with capacity_bound_caveat,
/// since zero-inventory ordering need not be optimal once capacity binds.
///
/// Ties go to the latest possible last lot.
SolveReport solve_learning_exact(const Instance& inst);

}  // namespace lotsize::learning
