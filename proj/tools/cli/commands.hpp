#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lotsize/report.hpp"
#include "lotsize/scenario.hpp"

namespace lotsize::cli {

enum ExitCode : int {
  kOk = 0,
  kInfeasible = 2,
  kInvalidInput = 3,
  kWrongModel = 4,
  kWorseThanExpected = 5,
  kOracleMismatch = 6,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class Format { text, json, csv };

void write_report(std::ostream& out, const Instance& inst, const SolveReport& report, Format format);

/// Expected totals keyed by 1-based row, read from `row,expected_total` CSV.
std::vector<std::pair<std::size_t, Money>> parse_expected_totals(const std::string& text);

/// Batch table; `expected` may be empty. Returns the exit code the batch
/// command uses for these results.
int write_batch(std::ostream& out, const std::vector<learning::ScenarioResult>& results,
                const std::vector<std::pair<std::size_t, Money>>& expected, Format format);

}  // namespace lotsize::cli
