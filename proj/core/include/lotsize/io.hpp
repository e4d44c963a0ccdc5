#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "lotsize/instance.hpp"
#include "lotsize/scenario.hpp"

namespace lotsize::io {

/// Line-oriented `key = value` text. Recognised keys: n, demand,
/// setup_cost, holding_cost, base_unit_cost, discount, capacity,
/// setup_time, unit_time. Lists are comma separated; a single value is
/// repeated for every period. '#' starts a comment. Money and times take at
/// most four fractional digits.
///
/// Required: demand, setup_cost, holding_cost, capacity. Defaults: n from
/// demand, base_unit_cost 100, discount 0, setup_time 0, unit_time 1.
///
/// Throws ParseError. The result is not validated.
Instance parse_instance(std::string_view text);

/// Inverse of parse_instance; parse_instance(format_instance(i)) == i.
std::string format_instance(const Instance& inst);

/// Instance format plus numbered variant keys `holding_cost.N`,
/// `setup_cost.N`, `discount.N`, labelled hN, AN, xN. A family without
/// numbered keys uses its plain key as the single variant N = 1, or a
/// single all-zero variant when the plain key is absent too. A file without
/// any cost keys at all is an empty batch.
learning::ScenarioBatch parse_scenario_batch(std::string_view text);

std::string read_file(const std::filesystem::path& path);

}  // namespace lotsize::io
