#include "artmarket/simulator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "artmarket/rng.hpp"

namespace artmarket {

std::string_view to_string(AgentMode mode) noexcept {
  switch (mode) {
    case AgentMode::kReal:
      return "real";
    case AgentMode::kShadow:
      return "shadow";
    case AgentMode::kAbsent:
      return "absent";
  }
  return "unknown";
}

AgentMode parse_agent_mode(std::string_view text) {
  if (text == "real") return AgentMode::kReal;
  if (text == "shadow") return AgentMode::kShadow;
  if (text == "absent") return AgentMode::kAbsent;
  throw std::invalid_argument("agent mode must be real, shadow or absent, got '" +
                              std::string(text) + "'");
}

void SimConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  require(agents > 0, "agents must be positive");
  require(weight_caps.fundamental > 0.0 && weight_caps.chartist > 0.0 && weight_caps.noise > 0.0,
          "weight caps must be positive");
  require(tau_max >= 1, "tau_max must be at least 1");
  require(noise_scale > 0.0 && std::isfinite(noise_scale), "noise_scale must be positive");
  require(price_dispersion > 0.0 && std::isfinite(price_dispersion),
          "price_dispersion must be positive");
  require(order_lifetime > 0, "order_lifetime must be positive");
  require(price_increment > 0.0 && std::isfinite(price_increment),
          "price_increment must be positive");
  require(fundamental_price > 0.0 && std::isfinite(fundamental_price),
          "fundamental_price must be positive");
  require(end_tick > order_lifetime, "end_tick must exceed order_lifetime");
  windows.validate();
}

std::optional<Fill> shadow_execute(const OrderBook& book, const PriceGrid& grid, Side side,
                                   Tick tick, Ledger& ledger) {
  const Order* quote = book.peek_best(side);
  if (quote == nullptr) return std::nullopt;
  const Fill fill{tick, side, grid.to_currency(quote->price)};
  ledger.record(fill);
  return fill;
}

namespace {

class Simulation {
 public:
  Simulation(const SimConfig& config, const RunOptions& options)
      : config_(config),
        options_(options),
        grid_(config.price_increment),
        rng_(config.seed),
        trend_entry_(static_cast<std::size_t>(config.windows.dt1)),
        trend_exit_(static_cast<std::size_t>(config.windows.dt2)),
        reversal_exit_(static_cast<std::size_t>(config.windows.dt3)) {
    params_.reserve(static_cast<std::size_t>(config.agents));
    for (std::int64_t j = 0; j < config.agents; ++j) {
      params_.push_back(draw_na_params(rng_, static_cast<std::uint64_t>(j), config.weight_caps,
                                       config.tau_max));
    }
    result_.config = config;
    result_.mids.assign(static_cast<std::size_t>(config.end_tick) + 1, 0.0);
    if (options.record_noise) {
      result_.noise.assign(static_cast<std::size_t>(config.end_tick) + 1, 0.0);
    }
    last_mid_ = config.fundamental_price;
    record_mid(0, config.fundamental_price);
  }

  RunResult run() && {
    const Tick end = config_.end_tick;
    const Tick half_cycle = config_.windows.dt / 2;
    for (Tick t = 1; t <= end; ++t) {
      result_.diagnostics.expired_orders += book_.expire_orders(t, config_.order_lifetime);
      normal_agent_turn(t);

      const auto mid = book_.mid_ticks();
      if (mid) {
        last_mid_ = *mid * grid_.increment();
      } else {
        ++result_.diagnostics.one_sided_ticks;
      }
      record_mid(t, last_mid_);

      if (t < config_.order_lifetime) continue;
      const Tick phase = t % config_.windows.dt;
      if (phase == 0 && config_.ctaa != AgentMode::kAbsent) {
        strategy_turn(t, StrategyKind::kTrendFollower);
      } else if (phase == half_cycle && config_.strta != AgentMode::kAbsent) {
        strategy_turn(t, StrategyKind::kReversal);
      }
    }
    result_.final_mid = result_.mids.back();
    result_.diagnostics.final_book_size = book_.size();
    return std::move(result_);
  }

 private:
  void record_mid(Tick t, double mid) {
    result_.mids[static_cast<std::size_t>(t)] = mid;
    trend_entry_.push(mid);
    trend_exit_.push(mid);
    reversal_exit_.push(mid);
  }

  void normal_agent_turn(Tick t) {
    const auto agent = static_cast<std::size_t>((t - 1) % config_.agents);
    const NaParams& params = params_[agent];
    const double noise = config_.noise_scale * rng_.tick_noise(t);
    const double uniform = rng_.tick_order_uniform(t);
    if (options_.record_noise) result_.noise[static_cast<std::size_t>(t)] = noise;

    ExpectationInputs in;
    in.fundamental = config_.fundamental_price;
    in.mid_now = result_.mids[static_cast<std::size_t>(t - 1)];
    in.noise = noise;
    in.chartist_active = t - params.tau - 1 >= 0;
    if (in.chartist_active) {
      in.mid_lagged = result_.mids[static_cast<std::size_t>(t - params.tau - 1)];
    }
    const double expected = na_expected_price(in.mid_now, na_expected_return(params, in));
    const auto intent = na_generate_order(expected, uniform, t < config_.order_lifetime,
                                          config_.price_dispersion, config_.fundamental_price);
    if (!intent) {
      ++result_.diagnostics.skipped_orders;
      return;
    }
    const PriceTick price = grid_.round_order_price(intent->raw_price, intent->side);
    if (price.value <= 0) {
      ++result_.diagnostics.skipped_orders;
      return;
    }
    ++result_.diagnostics.na_orders;
    const SubmitResult submitted =
        book_.submit_limit(intent->side, price, static_cast<AgentId>(agent), t);
    if (submitted.trade) {
      ++result_.diagnostics.na_trades;
      if (options_.keep_trades) result_.trades.push_back(*submitted.trade);
    }
  }

  void strategy_turn(Tick t, StrategyKind kind) {
    const double current = result_.mids[static_cast<std::size_t>(t)];
    WindowSignals signals;
    signals.max1 = trend_entry_.is_extreme(current, ExtremeMode::kMax);
    signals.min1 = trend_entry_.is_extreme(current, ExtremeMode::kMin);
    signals.max2 = trend_exit_.is_extreme(current, ExtremeMode::kMax);
    signals.min2 = trend_exit_.is_extreme(current, ExtremeMode::kMin);
    signals.max3 = reversal_exit_.is_extreme(current, ExtremeMode::kMax);
    signals.min3 = reversal_exit_.is_extreme(current, ExtremeMode::kMin);

    const bool trend = kind == StrategyKind::kTrendFollower;
    Ledger& ledger = trend ? result_.ctaa : result_.strta;
    const AgentMode mode = trend ? config_.ctaa : config_.strta;
    const auto side =
        trend ? ctaa_decide(ledger.position, signals) : strta_decide(ledger.position, signals);
    if (!side) return;
    ++result_.diagnostics.strategy_orders;

    if (mode == AgentMode::kShadow) {
      if (!shadow_execute(book_, grid_, *side, t, ledger)) {
        ++result_.diagnostics.empty_side_market_orders;
      }
      return;
    }
    const AgentId id =
        trend ? ctaa_agent_id(config_.agents) : strta_agent_id(config_.agents);
    const auto trade = book_.submit_market(*side, id, t);
    if (!trade) {
      ++result_.diagnostics.empty_side_market_orders;
      return;
    }
    ledger.record(Fill{t, *side, grid_.to_currency(trade->price)});
    if (options_.keep_trades) result_.trades.push_back(*trade);
  }

  const SimConfig& config_;
  RunOptions options_;
  PriceGrid grid_;
  RngStreams rng_;
  OrderBook book_;
  std::vector<NaParams> params_;
  RollingExtrema trend_entry_;
  RollingExtrema trend_exit_;
  RollingExtrema reversal_exit_;
  double last_mid_ = 0.0;
  RunResult result_;
};

}  // namespace

RunResult run_simulation(const SimConfig& config, const RunOptions& options) {
  config.validate();
  return Simulation(config, options).run();
}

}  // namespace artmarket
