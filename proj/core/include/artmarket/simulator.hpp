#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artmarket/agents.hpp"
#include "artmarket/order_book.hpp"
#include "artmarket/price.hpp"

namespace artmarket {

/// real: trades against the book. shadow: records virtual fills at the best
/// quote and leaves the book untouched. absent: does nothing.
enum class AgentMode : std::uint8_t { kReal, kShadow, kAbsent };

[[nodiscard]] std::string_view to_string(AgentMode mode) noexcept;
/// Throws std::invalid_argument for anything but "real", "shadow", "absent".
[[nodiscard]] AgentMode parse_agent_mode(std::string_view text);

struct SimConfig {
  std::int64_t agents = 1000;
  WeightCaps weight_caps{};
  std::int64_t tau_max = 10000;
  double noise_scale = 0.03;
  double price_dispersion = 1000.0;
  /// Order lifetime, which is also the warm-up length.
  std::int64_t order_lifetime = 10000;
  double price_increment = 0.01;
  double fundamental_price = 10000.0;
  std::int64_t end_tick = 1000000;
  StrategyWindows windows{};
  AgentMode ctaa = AgentMode::kShadow;
  AgentMode strta = AgentMode::kShadow;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct RunOptions {
  bool keep_trades = true;
  /// Stores the scaled noise draw of every tick in RunResult::noise.
  bool record_noise = false;
};

struct RunDiagnostics {
  std::uint64_t na_orders = 0;
  std::uint64_t skipped_orders = 0;
  std::uint64_t na_trades = 0;
  std::uint64_t expired_orders = 0;
  std::uint64_t strategy_orders = 0;
  std::uint64_t empty_side_market_orders = 0;
  std::uint64_t one_sided_ticks = 0;
  std::uint64_t final_book_size = 0;
};

struct RunResult {
  SimConfig config;
  /// Real trades only; virtual fills never appear here.
  std::vector<Trade> trades;
  /// mids[t] is the mid-price recorded at tick t; mids[0] is the fundamental price.
  std::vector<double> mids;
  std::vector<double> noise;
  Ledger ctaa;
  Ledger strta;
  double final_mid = 0.0;
  RunDiagnostics diagnostics;
};

[[nodiscard]] constexpr AgentId ctaa_agent_id(std::int64_t agents) noexcept {
  return static_cast<AgentId>(agents);
}
[[nodiscard]] constexpr AgentId strta_agent_id(std::int64_t agents) noexcept {
  return static_cast<AgentId>(agents + 1);
}

/// Records a virtual fill at the best opposite quote without modifying the
/// book. Nullopt if that side is empty.
std::optional<Fill> shadow_execute(const OrderBook& book, const PriceGrid& grid, Side side,
                                   Tick tick, Ledger& ledger);

/// Runs ticks 1..end_tick. Each tick: expire stale orders, let the scheduled
/// normal agent order, record the mid, then let a strategy agent act if the
/// tick is on its cycle. Identical configs give identical results.
[[nodiscard]] RunResult run_simulation(const SimConfig& config, const RunOptions& options = {});

}  // namespace artmarket
