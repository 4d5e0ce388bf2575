#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "artmarket/price.hpp"
#include "artmarket/rng.hpp"

namespace artmarket {

// ---------------------------------------------------------------------------
// Normal agents
// ---------------------------------------------------------------------------

/// Per-agent weights and chartist lookback, fixed for the whole run.
struct NaParams {
  double w_fundamental = 0.0;
  double w_chartist = 0.0;
  double w_noise = 0.0;
  std::int64_t tau = 1;
};

struct WeightCaps {
  double fundamental = 1.0;
  double chartist = 10.0;
  double noise = 1.0;
};

/// Weights uniform on (0, cap), tau uniform integer on [1, tau_max].
[[nodiscard]] NaParams draw_na_params(const RngStreams& rng, std::uint64_t agent,
                                      const WeightCaps& caps, std::int64_t tau_max);

struct ExpectationInputs {
  double fundamental = 0.0;
  /// Latest mid-price.
  double mid_now = 0.0;
  /// Mid-price tau ticks before `mid_now`; ignored when the chartist term is inactive.
  double mid_lagged = 0.0;
  /// Noise already scaled to its standard deviation.
  double noise = 0.0;
  /// False while there is not yet tau ticks of history.
  bool chartist_active = true;
};

/// Weighted blend of a fundamental pull, a historical trend and noise, in log
/// return units. Throws std::invalid_argument on a nonpositive price or a
/// zero weight sum.
[[nodiscard]] double na_expected_return(const NaParams& params, const ExpectationInputs& in);

[[nodiscard]] double na_expected_price(double mid_now, double expected_return);

struct OrderIntent {
  Side side = Side::kBuy;
  double raw_price = 0.0;
};

/// Scatters the order price uniformly over expected +/- dispersion and picks
/// the side by comparing against the reference price: the expected price
/// normally, the fundamental price during warm-up. Nullopt if the scattered
/// price is not positive.
[[nodiscard]] std::optional<OrderIntent> na_generate_order(double expected_price,
                                                           double uniform_draw, bool warmup,
                                                           double dispersion,
                                                           double fundamental);

// ---------------------------------------------------------------------------
// Rolling extremes
// ---------------------------------------------------------------------------

enum class ExtremeMode : std::uint8_t { kMax, kMin };

/// True iff `current` is >= (kMax) or <= (kMin) every one of the last
/// `lookback` entries of `window`, whose final entry is the current tick.
/// Ties count as reaching the extreme. False if the window is too short.
[[nodiscard]] bool rolling_is_extreme(std::span<const double> window, double current,
                                      std::size_t lookback, ExtremeMode mode);

/// Sliding max and min over the last `lookback` pushed values, O(1) amortized.
class RollingExtrema {
 public:
  explicit RollingExtrema(std::size_t lookback);

  void push(double value);

  [[nodiscard]] std::size_t lookback() const noexcept { return lookback_; }
  [[nodiscard]] bool full() const noexcept { return pushed_ >= lookback_; }
  [[nodiscard]] double max() const { return max_.front().second; }
  [[nodiscard]] double min() const { return min_.front().second; }

  /// Same semantics as rolling_is_extreme over the values pushed so far.
  [[nodiscard]] bool is_extreme(double current, ExtremeMode mode) const;

 private:
  std::size_t lookback_;
  std::uint64_t pushed_ = 0;
  std::deque<std::pair<std::uint64_t, double>> max_;
  std::deque<std::pair<std::uint64_t, double>> min_;
};

// ---------------------------------------------------------------------------
// Strategy agents
// ---------------------------------------------------------------------------

struct StrategyWindows {
  std::int64_t dt = 200;
  std::int64_t dt1 = 2000;
  std::int64_t dt2 = 500;
  std::int64_t dt3 = 100;

  /// Throws std::invalid_argument unless all are positive and dt is even.
  void validate() const;
};

struct Fill {
  Tick tick = 0;
  Side side = Side::kBuy;
  double price = 0.0;

  friend bool operator==(const Fill&, const Fill&) = default;
};

/// Cash and position bookkeeping for a one-share-limited agent.
struct Ledger {
  std::vector<Fill> fills;
  double cash = 0.0;
  int position = 0;

  void record(const Fill& fill);
};

enum class StrategyKind : std::uint8_t { kTrendFollower, kReversal };

struct StrategyAgentState {
  StrategyKind kind = StrategyKind::kTrendFollower;
  Ledger ledger;
  /// Virtual execution: fills are recorded but the book is never touched.
  bool shadow = false;
};

/// Which of the three lookbacks the current mid sits at the top or bottom of.
struct WindowSignals {
  bool max1 = false, min1 = false;
  bool max2 = false, min2 = false;
  bool max3 = false, min3 = false;
};

/// Computes signals for a mid history whose last entry is the current tick.
[[nodiscard]] WindowSignals window_signals(std::span<const double> history,
                                           const StrategyWindows& windows);

/// Trend follower: enter with a new dt1 high (low), exit a long (short) on a
/// new dt2 low (high). A flat window where the mid is both high and low is
/// not an entry signal.
[[nodiscard]] std::optional<Side> ctaa_decide(int position, const WindowSignals& signals);

/// Short-term reversal: enter long (short) on a new dt2 low (high), exit a
/// long (short) on a new dt3 high (low).
[[nodiscard]] std::optional<Side> strta_decide(int position, const WindowSignals& signals);

[[nodiscard]] std::optional<Side> ctaa_decide(const StrategyAgentState& state,
                                              std::span<const double> history,
                                              const StrategyWindows& windows);
[[nodiscard]] std::optional<Side> strta_decide(const StrategyAgentState& state,
                                               std::span<const double> history,
                                               const StrategyWindows& windows);

}  // namespace artmarket
