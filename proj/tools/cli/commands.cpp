#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "lotsize/classical.hpp"
#include "lotsize/errors.hpp"
#include "lotsize/io.hpp"
#include "lotsize/learning.hpp"
#include "lotsize/oracle.hpp"
#include "lotsize/ww.hpp"

namespace lotsize::cli {

namespace {

using nlohmann::ordered_json;

const std::map<std::string, Format> kFormats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

Money parse_money_arg(const std::string& text, const char* flag) {
  const auto m = Money::parse(text);
  if (!m) throw InvalidInputError(std::string(flag) + ": expected a decimal with at most 4 fractional digits");
  return *m;
}

std::string join_production(const Plan& plan, char sep) {
  std::string s;
  for (std::size_t i = 0; i < plan.production.size(); ++i) {
    if (i > 0) s += sep;
    s += std::to_string(plan.production[i]);
  }
  return s;
}

ordered_json report_json(const Instance& inst, const SolveReport& report) {
  ordered_json j;
  j["algorithm"] = to_string(report.algorithm);
  j["optimal"] = report.optimal;
  j["capacity_bound_caveat"] = report.capacity_bound_caveat;
  ordered_json periods = ordered_json::array();
  for (std::size_t i = 0; i < report.plan.production.size(); ++i) {
    const Units p = report.plan.production[i];
    periods.push_back({{"period", i + 1},
                       {"production", p},
                       {"setup", p > 0},
                       {"inventory", report.breakdown.inventory[i]},
                       {"unit_cost", report.breakdown.unit_cost[i].to_string()},
                       {"setup_cost", (p > 0 ? inst.setup_cost[i] : Money{}).to_string()},
                       {"holding_cost", (inst.holding_cost[i] * report.breakdown.inventory[i]).to_string()},
                       {"production_cost", (report.breakdown.unit_cost[i] * p).to_string()}});
  }
  j["periods"] = periods;
  j["setup_total"] = report.breakdown.setup_total.to_string();
  j["holding_total"] = report.breakdown.holding_total.to_string();
  j["production_total"] = report.breakdown.production_total.to_string();
  j["total"] = report.breakdown.total.to_string();
  j["diagnostics"] = report.diagnostics;
  return j;
}

// Maps library exceptions to exit codes; everything else propagates.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const WrongModelError& e) {
    err << "error: " << e.what() << '\n';
    return kWrongModel;
  } catch (const InvalidInputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const TooLargeError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

struct EoqFlags {
  std::optional<double> demand_rate;
  std::string setup;
  std::string holding;
  std::string unit_cost = "0";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--demand-rate", demand_rate, "Constant demand per period");
    cmd->add_option("--setup", setup, "Setup cost per order");
    cmd->add_option("--holding", holding, "Holding cost per unit per period");
    cmd->add_option("--unit-cost", unit_cost, "Unit production cost")->capture_default_str();
  }

  classical::EoqParams params() const {
    if (!demand_rate || setup.empty() || holding.empty()) {
      throw InvalidInputError("EOQ needs --demand-rate, --setup and --holding");
    }
    return {*demand_rate, parse_money_arg(setup, "--setup"), parse_money_arg(holding, "--holding"),
            parse_money_arg(unit_cost, "--unit-cost")};
  }
};

}  // namespace

void write_report(std::ostream& out, const Instance& inst, const SolveReport& report, Format format) {
  if (format == Format::json) {
    out << report_json(inst, report).dump(2) << '\n';
    return;
  }
  if (format == Format::csv) {
    out << "period,production,setup,inventory,unit_cost,setup_cost,holding_cost,production_cost,period_total\n";
    for (std::size_t i = 0; i < report.plan.production.size(); ++i) {
      const Units p = report.plan.production[i];
      const Money setup = p > 0 ? inst.setup_cost[i] : Money{};
      const Money holding = inst.holding_cost[i] * report.breakdown.inventory[i];
      const Money production = report.breakdown.unit_cost[i] * p;
      out << i + 1 << ',' << p << ',' << (p > 0 ? 1 : 0) << ',' << report.breakdown.inventory[i] << ','
          << report.breakdown.unit_cost[i].to_string() << ',' << setup.to_string() << ',' << holding.to_string()
          << ',' << production.to_string() << ',' << (setup + holding + production).to_string() << '\n';
    }
    const auto& b = report.breakdown;
    out << "total," << join_production(report.plan, ';') << ",,,," << b.setup_total.to_string() << ','
        << b.holding_total.to_string() << ',' << b.production_total.to_string() << ',' << b.total.to_string()
        << '\n';
    return;
  }

  out << "algorithm: " << to_string(report.algorithm) << '\n'
      << "optimal: " << (report.optimal ? "true" : "false") << '\n'
      << "capacity_bound_caveat: " << (report.capacity_bound_caveat ? "true" : "false") << '\n';
  char line[160];
  std::snprintf(line, sizeof line, "%6s %12s %5s %12s %12s\n", "period", "production", "setup", "inventory",
                "unit_cost");
  out << line;
  for (std::size_t i = 0; i < report.plan.production.size(); ++i) {
    const Units p = report.plan.production[i];
    std::snprintf(line, sizeof line, "%6zu %12lld %5d %12lld %12s\n", i + 1, static_cast<long long>(p), p > 0 ? 1 : 0,
                  static_cast<long long>(report.breakdown.inventory[i]),
                  report.breakdown.unit_cost[i].to_string().c_str());
    out << line;
  }
  out << "setup_total: " << report.breakdown.setup_total.to_string() << '\n'
      << "holding_total: " << report.breakdown.holding_total.to_string() << '\n'
      << "production_total: " << report.breakdown.production_total.to_string() << '\n'
      << "total: " << report.breakdown.total.to_string() << '\n';
  if (!report.diagnostics.empty()) {
    out << "diagnostics:";
    for (const auto& [key, value] : report.diagnostics) out << ' ' << key << '=' << value;
    out << '\n';
  }
}

std::vector<std::pair<std::size_t, Money>> parse_expected_totals(const std::string& text) {
  std::vector<std::pair<std::size_t, Money>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line.erase(std::remove_if(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r'; }),
               line.end());
    if (line.empty() || line == "row,expected_total") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError(line_no, "expected 'row,expected_total'");
    std::size_t row = 0;
    try {
      row = std::stoul(line.substr(0, comma));
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad row number");
    }
    const auto total = Money::parse(line.substr(comma + 1));
    if (row == 0 || !total) throw ParseError(line_no, "bad expected total");
    rows.emplace_back(row, *total);
  }
  return rows;
}

int write_batch(std::ostream& out, const std::vector<learning::ScenarioResult>& results,
                const std::vector<std::pair<std::size_t, Money>>& expected, Format format) {
  const bool compare = !expected.empty();
  const auto expected_for = [&](std::size_t row) -> std::optional<Money> {
    for (const auto& [r, total] : expected) {
      if (r == row) return total;
    }
    return std::nullopt;
  };

  bool any_invalid = false;
  bool any_infeasible = false;
  bool any_worse = false;

  ordered_json rows = ordered_json::array();
  if (format != Format::json) {
    out << "row,holding,setup,discount,outcome,production,total";
    if (compare) out << ",expected_total,delta,status";
    out << '\n';
  }

  for (const auto& r : results) {
    any_invalid |= r.status == learning::ScenarioStatus::invalid;
    any_infeasible |= r.status == learning::ScenarioStatus::infeasible;

    std::string production;
    std::string total;
    std::string expected_text;
    std::string delta;
    std::string status;
    if (r.report) {
      production = join_production(r.report->plan, ';');
      total = r.report->breakdown.total.to_string();
    }
    if (const auto want = expected_for(r.row); compare && want) {
      expected_text = want->to_string();
      if (r.report) {
        const Money diff = r.report->breakdown.total - *want;
        delta = diff.to_string();
        status = diff.is_zero() ? "match" : diff.is_negative() ? "better" : "worse";
        any_worse |= status == "worse";
      }
    }

    if (format == Format::json) {
      ordered_json j{{"row", r.row},
                     {"holding", r.holding_label},
                     {"setup", r.setup_label},
                     {"discount", r.discount_label},
                     {"outcome", to_string(r.status)}};
      if (r.report) {
        j["production"] = r.report->plan.production;
        j["total"] = total;
      } else {
        j["error"] = r.error;
      }
      if (compare) {
        j["expected_total"] = expected_text;
        j["delta"] = delta;
        j["status"] = status;
      }
      rows.push_back(std::move(j));
    } else {
      out << r.row << ',' << r.holding_label << ',' << r.setup_label << ',' << r.discount_label << ','
          << to_string(r.status) << ',' << production << ',' << total;
      if (compare) out << ',' << expected_text << ',' << delta << ',' << status;
      out << '\n';
    }
  }
  if (format == Format::json) out << rows.dump(2) << '\n';

  if (any_invalid) return kInvalidInput;
  if (any_infeasible) return kInfeasible;
  if (any_worse) return kWorseThanExpected;
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dynamic lot sizing with learning discounts"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Solve one instance");
  std::string model;
  std::string instance_path;
  std::optional<Units> foq_lot;
  std::string format_name = "text";
  EoqFlags eoq;
  solve->add_option("--model", model, "eoq | lot4lot | foq | ww | learning")
      ->required()
      ->check(CLI::IsMember({"eoq", "lot4lot", "foq", "ww", "learning"}));
  solve->add_option("--instance", instance_path, "Instance file");
  solve->add_option("--q", foq_lot, "Fixed order quantity (foq)");
  solve->add_option("--out", format_name, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
  eoq.add_to(solve);

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Cost a given production plan");
  std::string plan_text;
  evaluate->add_option("--instance", instance_path, "Instance file")->required();
  evaluate->add_option("--plan", plan_text, "Comma-separated production per period")->required();
  evaluate->add_option("--out", format_name, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));

  // batch
  auto* batch = app.add_subcommand("batch", "Solve a scenario grid with the learning model");
  std::string scenarios_path;
  std::string compare_path;
  std::string batch_format = "csv";
  unsigned threads = 1;
  batch->add_option("--scenarios", scenarios_path, "Scenario grid file")->required();
  batch->add_option("--compare", compare_path, "CSV of row,expected_total");
  batch->add_option("--out", batch_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  batch->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  // eoq-curve
  auto* curve = app.add_subcommand("eoq-curve", "Sample the EOQ cost curve as CSV");
  EoqFlags curve_eoq;
  double q_min = 0;
  double q_max = 0;
  int points = 0;
  curve_eoq.add_to(curve);
  curve->add_option("--q-min", q_min, "Smallest lot size")->required();
  curve->add_option("--q-max", q_max, "Largest lot size")->required();
  curve->add_option("--points", points, "Number of samples")->required();

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference minimum");
  std::size_t max_periods = 8;
  std::optional<Units> grid_step;
  std::uint64_t grid_budget = oracle::GridOptions{}.budget;
  std::string check_path;
  oracle_cmd->add_option("--instance", instance_path, "Instance file")->required();
  oracle_cmd->add_option("--max-periods", max_periods, "Enumeration limit")->capture_default_str();
  oracle_cmd->add_option("--grid-step", grid_step, "Also run the grid oracle with this step");
  oracle_cmd->add_option("--grid-budget", grid_budget, "Grid point limit")->capture_default_str();
  oracle_cmd->add_option("--check", check_path, "Solver JSON report to compare against");
  oracle_cmd->add_option("--out", format_name, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  return guarded(err, [&]() -> int {
    const auto load_instance = [&] {
      if (instance_path.empty()) throw InvalidInputError("--instance is required");
      return io::parse_instance(io::read_file(instance_path));
    };

    if (*solve) {
      const Format format = kFormats.at(format_name);
      if (model == "eoq" && instance_path.empty()) {
        const auto p = eoq.params();
        const double q = classical::eoq_quantity(p);
        const Money cost = classical::eoq_total_cost(p);
        if (format == Format::json) {
          out << ordered_json{{"algorithm", "eoq"}, {"q_star", fixed4(q)}, {"total", cost.to_string()}}.dump(2)
              << '\n';
        } else if (format == Format::csv) {
          out << "q_star,total\n" << fixed4(q) << ',' << cost.to_string() << '\n';
        } else {
          out << "algorithm: eoq\nq_star: " << fixed4(q) << "\ntotal: " << cost.to_string() << '\n';
        }
        return kOk;
      }

      const Instance inst = load_instance();
      SolveReport report;
      if (model == "eoq") {
        report = classical::eoq_lot_policy(inst);
      } else if (model == "lot4lot") {
        report = classical::lot_for_lot(inst);
      } else if (model == "foq") {
        if (!foq_lot) throw InvalidInputError("foq needs --q");
        report = classical::fixed_order_quantity(inst, *foq_lot);
      } else if (model == "ww") {
        report = ww::solve_wagner_whitin(inst);
      } else {
        report = learning::solve_learning_exact(inst);
      }
      write_report(out, inst, report, format);
      return kOk;
    }

    if (*evaluate) {
      const Instance inst = load_instance();
      require_valid(inst);
      Plan plan;
      std::stringstream items(plan_text);
      std::string item;
      while (std::getline(items, item, ',')) {
        try {
          std::size_t used = 0;
          plan.production.push_back(std::stoll(item, &used));
          if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          throw InvalidInputError("--plan: bad quantity '" + item + "'");
        }
      }
      if (plan.production.size() != inst.n) throw InvalidInputError("--plan must list one quantity per period");
      if (std::any_of(plan.production.begin(), plan.production.end(), [](Units p) { return p < 0; })) {
        throw InvalidInputError("--plan quantities must be non-negative");
      }
      write_report(out, inst, make_report(inst, plan, Algorithm::lot_for_lot, false), kFormats.at(format_name));
      return kOk;
    }

    if (*batch) {
      const auto grid = io::parse_scenario_batch(io::read_file(scenarios_path));
      std::vector<std::pair<std::size_t, Money>> expected;
      if (!compare_path.empty()) expected = parse_expected_totals(io::read_file(compare_path));
      const auto results = learning::solve_scenario_batch(grid, threads);
      for (const auto& r : results) {
        if (!r.error.empty()) err << "row " << r.row << ": " << r.error << '\n';
      }
      return write_batch(out, results, expected, kFormats.at(batch_format));
    }

    if (*curve) {
      const auto p = curve_eoq.params();
      if (!(q_min > 0)) throw InvalidInputError("--q-min must be > 0");
      if (!(q_max >= q_min)) throw InvalidInputError("--q-max must be >= --q-min");
      if (points < 1) throw InvalidInputError("--points must be >= 1");
      out << "kind,q,setup_term,holding_term,total\n";
      for (int k = 0; k < points; ++k) {
        const double q = points == 1 ? q_min : q_min + (q_max - q_min) * k / (points - 1);
        const auto t = classical::eoq_cost_terms(p, q);
        out << "sample," << fixed4(q) << ',' << t.setup_term.to_string() << ',' << t.holding_term.to_string() << ','
            << t.total.to_string() << '\n';
      }
      const double q_star = classical::eoq_quantity(p);
      const auto t = classical::eoq_cost_terms(p, q_star);
      out << "optimum," << fixed4(q_star) << ',' << t.setup_term.to_string() << ',' << t.holding_term.to_string()
          << ',' << classical::eoq_total_cost(p).to_string() << '\n';
      return kOk;
    }

    // oracle
    const Instance inst = load_instance();
    const auto report = oracle::oracle_min(inst, max_periods);
    write_report(out, inst, report, kFormats.at(format_name));

    int code = kOk;
    if (grid_step) {
      const auto grid = oracle::oracle_grid(inst, {*grid_step, grid_budget});
      const bool equal = grid.breakdown.total == report.breakdown.total;
      out << "oracle_min total: " << report.breakdown.total.to_string() << '\n'
          << "oracle_grid total: " << grid.breakdown.total.to_string() << '\n'
          << "oracles: " << (equal ? "equal" : "unequal") << '\n';
      if (!equal) code = kOracleMismatch;
    }
    if (!check_path.empty()) {
      std::optional<Money> claimed;
      try {
        const auto j = nlohmann::json::parse(io::read_file(check_path));
        claimed = Money::parse(j.at("total").get<std::string>());
      } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError("--check: " + std::string(e.what()));
      }
      if (!claimed) throw InvalidInputError("--check: total is not a decimal");
      const bool equal = *claimed == report.breakdown.total;
      out << "check: " << (equal ? "equal" : "unequal") << " (solver " << claimed->to_string() << ", oracle "
          << report.breakdown.total.to_string() << ")\n";
      if (!equal) code = kOracleMismatch;
    }
    return code;
  });
}

}  // namespace lotsize::cli
