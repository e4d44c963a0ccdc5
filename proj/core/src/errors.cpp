#include "lotsize/errors.hpp"

namespace lotsize {

const char* to_string(InfeasibilityReason reason) {
  switch (reason) {
    case InfeasibilityReason::negative_inventory:
      return "negative_inventory";
    case InfeasibilityReason::capacity_exceeded:
      return "capacity_exceeded";
    case InfeasibilityReason::no_feasible_chain:
      return "no_feasible_chain";
  }
  return "unknown";
}

namespace {

std::string infeasible_message(std::size_t period, InfeasibilityReason reason, const std::string& detail) {
  std::string msg = "infeasible: ";
  msg += to_string(reason);
  if (period > 0) msg += " in period " + std::to_string(period);
  if (!detail.empty()) msg += " (" + detail + ")";
  return msg;
}

}  // namespace

InfeasibleError::InfeasibleError(std::size_t period, InfeasibilityReason reason, const std::string& detail)
    : Error(infeasible_message(period, reason, detail)), period_(period), reason_(reason) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : InvalidInputError(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

}  // namespace lotsize
