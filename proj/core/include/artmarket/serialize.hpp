#pragma once

#include <iosfwd>
#include <span>

#include <nlohmann/json.hpp>

#include "artmarket/analytics.hpp"
#include "artmarket/order_book.hpp"
#include "artmarket/simulator.hpp"

namespace artmarket {

// Field names shared by config files, run records and report headers.
void to_json(nlohmann::json& j, const StrategyWindows& w);
void to_json(nlohmann::json& j, const SimConfig& c);
void to_json(nlohmann::json& j, const RunDiagnostics& d);
void to_json(nlohmann::json& j, const RunMetrics& m);

/// Reads a flat config object over `base`. Missing keys keep their base
/// value; unknown keys or ill-typed values throw std::invalid_argument naming
/// the key.
[[nodiscard]] SimConfig sim_config_from_json(const nlohmann::json& j, SimConfig base = {});

/// Config echo, summary scalars and diagnostics for one run.
[[nodiscard]] nlohmann::json run_summary_json(const RunResult& run, const RunMetrics& metrics);

/// CSV header then one row per trade: tick,price,buy_agent,sell_agent,aggressor
void write_trade_log_csv(std::ostream& out, std::span<const Trade> trades, const PriceGrid& grid);

}  // namespace artmarket
