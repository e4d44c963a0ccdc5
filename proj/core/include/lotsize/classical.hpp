#pragma once

#include "lotsize/decimal.hpp"
#include "lotsize/instance.hpp"
#include "lotsize/report.hpp"

namespace lotsize::classical {

/// Static EOQ setting: constant demand rate D, setup cost A, holding cost h
/// per unit per period, unit cost c.
struct EoqParams {
  double demand_rate = 0;
  Money setup_cost;
  Money holding_cost;
  Money unit_cost;
};

struct EoqCostTerms {
  Money setup_term;    // A * D / q
  Money holding_term;  // q * h / 2
  Money total;         // setup + holding + c * D
};

/// sqrt(2AD/h). Throws InvalidInputError unless A, D, h > 0 and c >= 0.
double eoq_quantity(const EoqParams& p);

/// sqrt(2ADh) + cD, the cost at the optimal lot size.
Money eoq_total_cost(const EoqParams& p);

/// AD/q + cD + qh/2. Throws InvalidInputError for q <= 0.
Money eoq_cost_curve(const EoqParams& p, double q);

EoqCostTerms eoq_cost_terms(const EoqParams& p, double q);

/// Produces exactly each period's demand. Never carries stock.
SolveReport lot_for_lot(const Instance& inst);

/// Orders a fixed lot `q` whenever the period would otherwise stock out, at
/// most one lot per period. Leftover stock at the horizon is charged.
/// Throws InfeasibleError when one lot cannot cover the period, and
/// InvalidInputError when q is not in (0, smallest period capacity].
SolveReport fixed_order_quantity(const Instance& inst, Units q);

/// Fixed-order-quantity rule with q = ceil(EOQ) computed from the
/// instance's average demand, setup and holding costs, capped at the
/// smallest period capacity.
SolveReport eoq_lot_policy(const Instance& inst);

/// EOQ parameters averaged over the instance's horizon.
EoqParams eoq_params_from(const Instance& inst);

}  // namespace lotsize::classical
