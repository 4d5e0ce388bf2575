#include "artmarket/agents.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace artmarket {

NaParams draw_na_params(const RngStreams& rng, std::uint64_t agent, const WeightCaps& caps,
                        std::int64_t tau_max) {
  NaParams p;
  p.w_fundamental = caps.fundamental * rng.agent_param_uniform(agent, 0);
  p.w_chartist = caps.chartist * rng.agent_param_uniform(agent, 1);
  p.w_noise = caps.noise * rng.agent_param_uniform(agent, 2);
  const double u = rng.agent_param_uniform(agent, 3);
  p.tau = 1 + std::min<std::int64_t>(tau_max - 1,
                                     static_cast<std::int64_t>(u * static_cast<double>(tau_max)));
  return p;
}

double na_expected_return(const NaParams& params, const ExpectationInputs& in) {
  const double weight_sum = params.w_fundamental + params.w_chartist + params.w_noise;
  if (!(weight_sum > 0.0)) {
    throw std::invalid_argument("normal agent weights must have a positive sum");
  }
  if (!(in.fundamental > 0.0) || !(in.mid_now > 0.0)) {
    throw std::invalid_argument("prices must be positive");
  }
  double chartist = 0.0;
  if (in.chartist_active) {
    if (!(in.mid_lagged > 0.0)) {
      throw std::invalid_argument("prices must be positive");
    }
    chartist = std::log(in.mid_now / in.mid_lagged);
  }
  const double fundamental = std::log(in.fundamental / in.mid_now);
  return (params.w_fundamental * fundamental + params.w_chartist * chartist +
          params.w_noise * in.noise) /
         weight_sum;
}

double na_expected_price(double mid_now, double expected_return) {
  return mid_now * std::exp(expected_return);
}

std::optional<OrderIntent> na_generate_order(double expected_price, double uniform_draw,
                                             bool warmup, double dispersion,
                                             double fundamental) {
  const double order_price = expected_price - dispersion + 2.0 * dispersion * uniform_draw;
  if (!(order_price > 0.0)) return std::nullopt;
  const double reference = warmup ? fundamental : expected_price;
  return OrderIntent{reference > order_price ? Side::kBuy : Side::kSell, order_price};
}

bool rolling_is_extreme(std::span<const double> window, double current, std::size_t lookback,
                        ExtremeMode mode) {
  if (lookback == 0) throw std::invalid_argument("lookback must be at least 1");
  if (window.size() < lookback) return false;
  const auto recent = window.last(lookback);
  if (mode == ExtremeMode::kMax) {
    return std::all_of(recent.begin(), recent.end(), [&](double v) { return current >= v; });
  }
  return std::all_of(recent.begin(), recent.end(), [&](double v) { return current <= v; });
}

RollingExtrema::RollingExtrema(std::size_t lookback) : lookback_(lookback) {
  if (lookback == 0) throw std::invalid_argument("lookback must be at least 1");
}

void RollingExtrema::push(double value) {
  const std::uint64_t index = pushed_++;
  while (!max_.empty() && max_.back().second <= value) max_.pop_back();
  max_.emplace_back(index, value);
  while (!min_.empty() && min_.back().second >= value) min_.pop_back();
  min_.emplace_back(index, value);
  // Oldest index still inside the window is pushed_ - lookback_.
  if (pushed_ > lookback_) {
    const std::uint64_t oldest = pushed_ - lookback_;
    while (max_.front().first < oldest) max_.pop_front();
    while (min_.front().first < oldest) min_.pop_front();
  }
}

bool RollingExtrema::is_extreme(double current, ExtremeMode mode) const {
  if (!full()) return false;
  return mode == ExtremeMode::kMax ? current >= max() : current <= min();
}

void StrategyWindows::validate() const {
  if (dt <= 0 || dt1 <= 0 || dt2 <= 0 || dt3 <= 0) {
    throw std::invalid_argument("strategy windows must be positive");
  }
  if (dt % 2 != 0) {
    throw std::invalid_argument("dt must be even so the reversal agent's offset dt/2 is a whole tick");
  }
}

void Ledger::record(const Fill& fill) {
  const int next = position + (fill.side == Side::kBuy ? 1 : -1);
  if (next < -1 || next > 1) {
    throw std::logic_error("strategy agent position limit of one share breached");
  }
  position = next;
  cash += fill.side == Side::kBuy ? -fill.price : fill.price;
  fills.push_back(fill);
}

WindowSignals window_signals(std::span<const double> history, const StrategyWindows& windows) {
  WindowSignals s;
  if (history.empty()) return s;
  const double current = history.back();
  auto check = [&](std::int64_t lookback, ExtremeMode mode) {
    return rolling_is_extreme(history, current, static_cast<std::size_t>(lookback), mode);
  };
  s.max1 = check(windows.dt1, ExtremeMode::kMax);
  s.min1 = check(windows.dt1, ExtremeMode::kMin);
  s.max2 = check(windows.dt2, ExtremeMode::kMax);
  s.min2 = check(windows.dt2, ExtremeMode::kMin);
  s.max3 = check(windows.dt3, ExtremeMode::kMax);
  s.min3 = check(windows.dt3, ExtremeMode::kMin);
  return s;
}

std::optional<Side> ctaa_decide(int position, const WindowSignals& s) {
  if (position == 0) {
    if (s.max1 && s.min1) return std::nullopt;
    if (s.max1) return Side::kBuy;
    if (s.min1) return Side::kSell;
    return std::nullopt;
  }
  if (position > 0) return s.min2 ? std::optional<Side>(Side::kSell) : std::nullopt;
  return s.max2 ? std::optional<Side>(Side::kBuy) : std::nullopt;
}

std::optional<Side> strta_decide(int position, const WindowSignals& s) {
  if (position == 0) {
    if (s.max2 && s.min2) return std::nullopt;
    if (s.min2) return Side::kBuy;
    if (s.max2) return Side::kSell;
    return std::nullopt;
  }
  if (position > 0) return s.max3 ? std::optional<Side>(Side::kSell) : std::nullopt;
  return s.min3 ? std::optional<Side>(Side::kBuy) : std::nullopt;
}

std::optional<Side> ctaa_decide(const StrategyAgentState& state, std::span<const double> history,
                                const StrategyWindows& windows) {
  return ctaa_decide(state.ledger.position, window_signals(history, windows));
}

std::optional<Side> strta_decide(const StrategyAgentState& state,
                                 std::span<const double> history,
                                 const StrategyWindows& windows) {
  return strta_decide(state.ledger.position, window_signals(history, windows));
}

}  // namespace artmarket
