#include "lotsize/instance.hpp"

#include <algorithm>
#include <numeric>

#include "lotsize/errors.hpp"

namespace lotsize {

Instance make_instance(std::vector<Units> demand, std::vector<Money> setup_cost, std::vector<Money> holding_cost,
                       Money discount, std::vector<Units> capacity, Money base_unit_cost) {
  Instance inst;
  inst.n = demand.size();
  inst.demand = std::move(demand);
  inst.setup_cost = std::move(setup_cost);
  inst.holding_cost = std::move(holding_cost);
  inst.base_unit_cost = base_unit_cost;
  inst.discount = discount;
  inst.capacity = std::move(capacity);
  inst.setup_time.assign(inst.n, Decimal{});
  inst.unit_time.assign(inst.n, Decimal::from_units(1));
  return inst;
}

Units total_demand(const Instance& inst) { return std::accumulate(inst.demand.begin(), inst.demand.end(), Units{0}); }

Units max_lot(const Instance& inst, std::size_t period) {
  const Decimal budget = Decimal::from_units(inst.capacity[period]) - inst.setup_time[period];
  if (budget.is_negative()) return 0;
  return budget.raw() / inst.unit_time[period].raw();
}

std::string ValidationResult::summary() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.field + ": " + v.message;
  }
  return out;
}

namespace {

template <typename T>
void check_length(ValidationResult& result, const char* field, const std::vector<T>& values, std::size_t n) {
  if (values.size() != n) {
    result.violations.push_back(
        {field, "length " + std::to_string(values.size()) + " does not match n = " + std::to_string(n)});
  }
}

template <typename T, typename Pred>
void check_each(ValidationResult& result, const char* field, const std::vector<T>& values, Pred bad,
                const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (bad(values[i])) {
      result.violations.push_back({field, std::string(what) + " in period " + std::to_string(i + 1)});
    }
  }
}

}  // namespace

ValidationResult validate_instance(const Instance& inst) {
  ValidationResult result;
  if (inst.n < 1) result.violations.push_back({"n", "horizon must contain at least one period"});

  check_length(result, "demand", inst.demand, inst.n);
  check_length(result, "setup_cost", inst.setup_cost, inst.n);
  check_length(result, "holding_cost", inst.holding_cost, inst.n);
  check_length(result, "capacity", inst.capacity, inst.n);
  check_length(result, "setup_time", inst.setup_time, inst.n);
  check_length(result, "unit_time", inst.unit_time, inst.n);

  check_each(result, "demand", inst.demand, [](Units d) { return d < 0; }, "negative demand");
  check_each(result, "setup_cost", inst.setup_cost, [](Money m) { return m.is_negative(); }, "negative setup cost");
  check_each(result, "holding_cost", inst.holding_cost, [](Money m) { return m.is_negative(); },
             "negative holding cost");
  check_each(result, "capacity", inst.capacity, [](Units c) { return c <= 0; }, "capacity must be positive");
  check_each(result, "setup_time", inst.setup_time, [](Decimal t) { return t.is_negative(); },
             "negative setup time");
  check_each(result, "unit_time", inst.unit_time, [](Decimal b) { return b.raw() <= 0; },
             "unit time must be positive");
  if (inst.base_unit_cost.is_negative()) result.violations.push_back({"base_unit_cost", "must be non-negative"});
  if (inst.discount.is_negative()) result.violations.push_back({"discount", "must be non-negative"});

  // The remaining checks need well-formed arrays.
  if (!result.ok()) return result;

  const Units demand_sum = total_demand(inst);
  Units largest_lot = 0;
  Units capacity_sum = 0;
  for (std::size_t i = 0; i < inst.n; ++i) {
    largest_lot = std::max(largest_lot, max_lot(inst, i));
    capacity_sum += max_lot(inst, i);
  }

  const Units worst_lot = std::min(largest_lot, demand_sum);
  if (inst.discount * worst_lot > inst.base_unit_cost) {
    result.violations.push_back(
        {"discount", "negative unit cost possible: " + inst.discount.to_string() + " x " + std::to_string(worst_lot) +
                         " units = " + (inst.discount * worst_lot).to_string() + " exceeds base unit cost " +
                         inst.base_unit_cost.to_string()});
  }
  if (capacity_sum < demand_sum) {
    result.violations.push_back({"capacity", "total capacity " + std::to_string(capacity_sum) +
                                                 " is below total demand " + std::to_string(demand_sum)});
  }
  return result;
}

void require_valid(const Instance& inst) {
  const auto result = validate_instance(inst);
  if (!result.ok()) throw InvalidInputError("invalid instance: " + result.summary());
}

}  // namespace lotsize
