#include "lotsize/report.hpp"

#include <array>
#include <utility>

namespace lotsize {

namespace {

constexpr std::array<std::pair<Algorithm, const char*>, 7> kNames{{
    {Algorithm::eoq, "eoq"},
    {Algorithm::lot_for_lot, "lot_for_lot"},
    {Algorithm::foq, "foq"},
    {Algorithm::wagner_whitin, "wagner_whitin"},
    {Algorithm::learning_exact, "learning_exact"},
    {Algorithm::oracle_min, "oracle_min"},
    {Algorithm::oracle_grid, "oracle_grid"},
}};

}  // namespace

const char* to_string(Algorithm algorithm) {
  for (const auto& [a, name] : kNames) {
    if (a == algorithm) return name;
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [a, n] : kNames) {
    if (name == n) return a;
  }
  return std::nullopt;
}

SolveReport make_report(const Instance& inst, Plan plan, Algorithm algorithm, bool optimal) {
  SolveReport report;
  report.breakdown = evaluate_plan(inst, plan);
  report.plan = std::move(plan);
  report.algorithm = algorithm;
  report.optimal = optimal;
  return report;
}

}  // namespace lotsize
