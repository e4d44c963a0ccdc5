#pragma once

#include "lotsize/instance.hpp"
#include "lotsize/report.hpp"

namespace lotsize::ww {

/// Wagner-Whitin forward recursion for constant unit cost (discount = 0).
///
/// Every lot covers a contiguous run of demands and is placed only when
/// stock has run out. Candidate lot periods are pruned with the planning
/// horizon rule: once period k is the best last lot for some horizon, no
/// longer horizon needs a last lot before k. Pruning is only applied when
/// every period has the same capacity.
///
/// Lots that would exceed a period's capacity are dropped; when that
/// happens the report sets capacity_bound_caveat.
///
/// Ties go to the latest possible last lot.
///
/// Throws WrongModelError for a non-zero discount, InvalidInputError for an
/// invalid instance, InfeasibleError if capacity leaves no feasible chain.
SolveReport solve_wagner_whitin(const Instance& inst);

}  // namespace lotsize::ww
