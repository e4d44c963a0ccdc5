#include "lotsize/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "lotsize/errors.hpp"

namespace lotsize::io {

namespace {

struct Entry {
  std::string value;
  std::size_t line = 0;
};

using Entries = std::map<std::string, Entry>;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Entries tokenize(std::string_view text) {
  Entries entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ParseError(line_no, "missing key");
    if (value.empty()) throw ParseError(line_no, "missing value for '" + key + "'");
    if (!entries.emplace(key, Entry{value, line_no}).second) throw ParseError(line_no, "duplicate key '" + key + "'");
  }
  return entries;
}

std::vector<std::string_view> split_list(std::string_view value) {
  std::vector<std::string_view> items;
  while (true) {
    const auto comma = value.find(',');
    items.push_back(trim(value.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return items;
}

Units parse_units(std::string_view token, const std::string& key, std::size_t line) {
  Units v = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError(line, "'" + key + "': expected an integer, got '" + std::string(token) + "'");
  }
  return v;
}

Decimal parse_decimal(std::string_view token, const std::string& key, std::size_t line) {
  const auto d = Decimal::parse(token);
  if (!d) {
    throw ParseError(line, "'" + key + "': expected a decimal with at most 4 fractional digits, got '" +
                               std::string(token) + "'");
  }
  return *d;
}

template <typename T, typename Parse>
std::vector<T> parse_list(const Entry& e, const std::string& key, std::size_t n, Parse parse) {
  std::vector<T> out;
  for (auto token : split_list(e.value)) out.push_back(parse(token, key, e.line));
  if (out.size() == 1 && n > 1) out.assign(n, out.front());
  if (out.size() != n) {
    throw ParseError(e.line, "'" + key + "' has " + std::to_string(out.size()) + " values, expected " +
                                 std::to_string(n));
  }
  return out;
}

const Entry& required(const Entries& entries, const std::string& key) {
  const auto it = entries.find(key);
  if (it == entries.end()) throw ParseError(0, "missing required key '" + key + "'");
  return it->second;
}

/// Parses the plain instance keys. `skip_costs` leaves holding/setup/discount
/// optional for scenario grids.
Instance build_instance(const Entries& entries, bool skip_costs) {
  static const std::vector<std::string> kKnown = {"n",        "demand",     "setup_cost", "holding_cost",
                                                  "capacity", "setup_time", "unit_time",  "base_unit_cost",
                                                  "discount"};
  for (const auto& [key, entry] : entries) {
    if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) {
      throw ParseError(entry.line, "unknown key '" + key + "'");
    }
  }

  const Entry& demand = required(entries, "demand");
  std::size_t n = split_list(demand.value).size();
  if (const auto it = entries.find("n"); it != entries.end()) {
    const Units declared = parse_units(it->second.value, "n", it->second.line);
    if (declared < 1) throw ParseError(it->second.line, "'n' must be at least 1");
    n = static_cast<std::size_t>(declared);
  }

  const auto units = [](std::string_view t, const std::string& k, std::size_t l) { return parse_units(t, k, l); };
  const auto decimal = [](std::string_view t, const std::string& k, std::size_t l) { return parse_decimal(t, k, l); };
  const auto decimal_list = [&](const std::string& key, std::optional<Decimal> fallback) {
    const auto it = entries.find(key);
    if (it == entries.end()) {
      if (!fallback) throw ParseError(0, "missing required key '" + key + "'");
      return std::vector<Decimal>(n, *fallback);
    }
    return parse_list<Decimal>(it->second, key, n, decimal);
  };
  const auto scalar = [&](const std::string& key, Decimal fallback) {
    const auto it = entries.find(key);
    return it == entries.end() ? fallback : parse_decimal(it->second.value, key, it->second.line);
  };

  Instance inst;
  inst.n = n;
  inst.demand = parse_list<Units>(demand, "demand", n, units);
  inst.capacity = parse_list<Units>(required(entries, "capacity"), "capacity", n, units);
  inst.setup_cost = decimal_list("setup_cost", skip_costs ? std::optional<Decimal>(Decimal{}) : std::nullopt);
  inst.holding_cost = decimal_list("holding_cost", skip_costs ? std::optional<Decimal>(Decimal{}) : std::nullopt);
  inst.setup_time = decimal_list("setup_time", Decimal{});
  inst.unit_time = decimal_list("unit_time", Decimal::from_units(1));
  inst.base_unit_cost = scalar("base_unit_cost", Money::from_units(100));
  inst.discount = scalar("discount", Money{});
  return inst;
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    if constexpr (std::is_same_v<T, Decimal>) {
      out += values[i].to_string();
    } else {
      out += std::to_string(values[i]);
    }
  }
  return out;
}

}  // namespace

Instance parse_instance(std::string_view text) { return build_instance(tokenize(text), false); }

std::string format_instance(const Instance& inst) {
  std::ostringstream out;
  out << "n = " << inst.n << '\n';
  out << "demand = " << join(inst.demand) << '\n';
  out << "setup_cost = " << join(inst.setup_cost) << '\n';
  out << "holding_cost = " << join(inst.holding_cost) << '\n';
  out << "base_unit_cost = " << inst.base_unit_cost.to_string() << '\n';
  out << "discount = " << inst.discount.to_string() << '\n';
  out << "capacity = " << join(inst.capacity) << '\n';
  out << "setup_time = " << join(inst.setup_time) << '\n';
  out << "unit_time = " << join(inst.unit_time) << '\n';
  return out.str();
}

learning::ScenarioBatch parse_scenario_batch(std::string_view text) {
  Entries entries = tokenize(text);

  // Pull out numbered variant keys; what remains is an instance.
  std::map<std::string, std::map<Units, Entry>> numbered;
  for (auto it = entries.begin(); it != entries.end();) {
    const auto dot = it->first.find('.');
    if (dot == std::string::npos) {
      ++it;
      continue;
    }
    const std::string family = it->first.substr(0, dot);
    if (family != "holding_cost" && family != "setup_cost" && family != "discount") {
      throw ParseError(it->second.line, "unknown key '" + it->first + "'");
    }
    const Units index = parse_units(std::string_view(it->first).substr(dot + 1), it->first, it->second.line);
    if (index < 1) throw ParseError(it->second.line, "variant numbers start at 1");
    numbered[family].emplace(index, it->second);
    it = entries.erase(it);
  }

  for (const auto& family : {"holding_cost", "setup_cost", "discount"}) {
    const auto plain = entries.find(family);
    if (plain == entries.end()) continue;
    if (numbered.count(family) > 0) {
      throw ParseError(plain->second.line, std::string("'") + family + "' given both plain and numbered");
    }
    numbered[family].emplace(1, plain->second);
    entries.erase(plain);
  }

  learning::ScenarioBatch batch;
  if (numbered.empty()) return batch;

  batch.base = build_instance(entries, true);
  const std::size_t n = batch.base.n;
  const auto decimal = [](std::string_view t, const std::string& k, std::size_t l) { return parse_decimal(t, k, l); };

  // Families left out entirely contribute one all-zero variant.
  if (numbered["holding_cost"].empty()) batch.holding.push_back({"h1", std::vector<Money>(n, Money{})});
  if (numbered["setup_cost"].empty()) batch.setup.push_back({"A1", std::vector<Money>(n, Money{})});
  if (numbered["discount"].empty()) batch.discount.push_back({"x1", Money{}});

  for (const auto& [index, entry] : numbered["holding_cost"]) {
    const std::string key = "holding_cost." + std::to_string(index);
    batch.holding.push_back({"h" + std::to_string(index), parse_list<Decimal>(entry, key, n, decimal)});
  }
  for (const auto& [index, entry] : numbered["setup_cost"]) {
    const std::string key = "setup_cost." + std::to_string(index);
    batch.setup.push_back({"A" + std::to_string(index), parse_list<Decimal>(entry, key, n, decimal)});
  }
  for (const auto& [index, entry] : numbered["discount"]) {
    const std::string key = "discount." + std::to_string(index);
    batch.discount.push_back({"x" + std::to_string(index), parse_decimal(entry.value, key, entry.line)});
  }
  return batch;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace lotsize::io
