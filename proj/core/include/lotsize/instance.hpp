#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lotsize/decimal.hpp"

namespace lotsize {

/// Single-item, single-machine lot sizing instance.
///
/// Unit production cost in period i is `base_unit_cost - discount * p_i`,
/// so a larger lot is cheaper per unit. Capacity is a time budget: a period
/// that produces `p` units consumes `setup_time + unit_time * p` of it. With
/// the default times (0 and 1) it is simply a bound on units.
struct Instance {
  std::size_t n = 0;
  std::vector<Units> demand;
  std::vector<Money> setup_cost;
  std::vector<Money> holding_cost;
  Money base_unit_cost = Money::from_units(100);
  Money discount;
  std::vector<Units> capacity;
  std::vector<Decimal> setup_time;
  std::vector<Decimal> unit_time;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Builds an instance with default setup/unit times (0 and 1).
Instance make_instance(std::vector<Units> demand, std::vector<Money> setup_cost, std::vector<Money> holding_cost,
                       Money discount, std::vector<Units> capacity,
                       Money base_unit_cost = Money::from_units(100));

Units total_demand(const Instance& inst);

/// Largest lot period `period` (0-based) can produce within its time budget,
/// floor((C - t_A) / b). Zero when the setup alone exceeds the budget.
Units max_lot(const Instance& inst, std::size_t period);

struct Violation {
  std::string field;
  std::string message;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  /// All messages joined with "; ".
  std::string summary() const;
};

ValidationResult validate_instance(const Instance& inst);

/// Throws InvalidInputError carrying the summary when validation fails.
void require_valid(const Instance& inst);

}  // namespace lotsize
