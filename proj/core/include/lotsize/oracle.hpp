#pragma once

#include <cstdint>

#include "lotsize/instance.hpp"
#include "lotsize/report.hpp"

namespace lotsize::oracle {

/// Brute-force minimum over every no-split assignment: each period's demand
/// is produced, whole, in one period at or before it. There are n! such
/// assignments. Ties go to the lexicographically smallest plan.
///
/// Throws TooLargeError when n > max_n and InfeasibleError when no
/// assignment respects capacity.
SolveReport oracle_min(const Instance& inst, std::size_t max_n = 8);

struct GridOptions {
  Units step = 1;
  std::uint64_t budget = 20'000'000;  // grid points
};

/// Exhaustive search over every production vector whose entries are
/// multiples of `step` and whose final inventory is zero. Makes no
/// structural assumption about optimal plans, so it can certify oracle_min.
///
/// Requires n <= 3 and a step dividing every demand; throws
/// InvalidInputError otherwise and TooLargeError when the grid exceeds the
/// budget.
SolveReport oracle_grid(const Instance& inst, const GridOptions& options);

}  // namespace lotsize::oracle
