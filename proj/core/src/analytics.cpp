#include "artmarket/analytics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "artmarket/simulator.hpp"

namespace artmarket {

double final_return_pct(const Ledger& ledger, double final_mid, double fundamental) {
  if (!(fundamental > 0.0)) throw std::invalid_argument("fundamental price must be positive");
  return 100.0 * (ledger.cash + static_cast<double>(ledger.position) * final_mid) / fundamental;
}

std::size_t trading_volume(const Ledger& ledger) noexcept { return ledger.fills.size(); }

std::vector<double> interval_log_returns(std::span<const double> mids, Tick start, Tick end,
                                         Tick interval) {
  if (interval <= 0) throw std::invalid_argument("return interval must be positive");
  if (start < 0 || end < start || static_cast<std::size_t>(end) >= mids.size()) {
    throw std::invalid_argument("return range lies outside the price series");
  }
  const Tick count = (end - start) / interval;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Tick k = 1; k <= count; ++k) {
    const double now = mids[static_cast<std::size_t>(start + k * interval)];
    const double before = mids[static_cast<std::size_t>(start + (k - 1) * interval)];
    out.push_back(std::log(now / before));
  }
  return out;
}

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean of an empty series");
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

double population_stdev(std::span<const double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("standard deviation needs at least two values");
  const double mu = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - mu) * (x - mu);
  return std::sqrt(ss / static_cast<double>(xs.size()));
}

double stdev_returns_pct(std::span<const double> returns) {
  return 100.0 * population_stdev(returns);
}

double excess_kurtosis(std::span<const double> xs) {
  if (xs.size() < 4) throw std::invalid_argument("kurtosis needs at least four values");
  const double mu = mean(xs);
  double m2 = 0.0;
  double m4 = 0.0;
  for (double x : xs) {
    const double d2 = (x - mu) * (x - mu);
    m2 += d2;
    m4 += d2 * d2;
  }
  const auto n = static_cast<double>(xs.size());
  m2 /= n;
  m4 /= n;
  if (!(m2 > 0.0)) throw std::invalid_argument("kurtosis of a constant series");
  return m4 / (m2 * m2) - 3.0;
}

double autocorrelation(std::span<const double> xs, std::size_t lag) {
  if (xs.size() <= lag + 1) throw std::invalid_argument("series too short for the lag");
  const double mu = mean(xs);
  double denom = 0.0;
  for (double x : xs) denom += (x - mu) * (x - mu);
  if (!(denom > 0.0)) throw std::invalid_argument("autocorrelation of a constant series");
  double num = 0.0;
  for (std::size_t i = 0; i + lag < xs.size(); ++i) num += (xs[i] - mu) * (xs[i + lag] - mu);
  return num / denom;
}

std::vector<double> squared_return_autocorr(std::span<const double> returns,
                                            std::size_t max_lag) {
  std::vector<double> squares;
  squares.reserve(returns.size());
  for (double r : returns) squares.push_back(r * r);
  std::vector<double> out;
  out.reserve(max_lag);
  for (std::size_t lag = 1; lag <= max_lag; ++lag) out.push_back(autocorrelation(squares, lag));
  return out;
}

namespace {

template <typename F>
double or_nan(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

RunMetrics compute_run_metrics(const RunResult& run, std::string case_label,
                               const MetricsOptions& options) {
  const SimConfig& cfg = run.config;
  RunMetrics m;
  m.case_label = std::move(case_label);
  m.seed = cfg.seed;
  m.ctaa_return_pct = final_return_pct(run.ctaa, run.final_mid, cfg.fundamental_price);
  m.ctaa_volume = trading_volume(run.ctaa);
  m.strta_return_pct = final_return_pct(run.strta, run.final_mid, cfg.fundamental_price);
  m.strta_volume = trading_volume(run.strta);

  const auto short_returns =
      interval_log_returns(run.mids, cfg.order_lifetime, cfg.end_tick, options.short_interval);
  const auto long_returns =
      interval_log_returns(run.mids, cfg.order_lifetime, cfg.end_tick, options.long_interval);
  m.stdev_short_pct = or_nan([&] { return stdev_returns_pct(short_returns); });
  m.stdev_long_pct = or_nan([&] { return stdev_returns_pct(long_returns); });
  m.excess_kurtosis_short = or_nan([&] { return excess_kurtosis(short_returns); });
  std::vector<double> squares;
  squares.reserve(short_returns.size());
  for (double r : short_returns) squares.push_back(r * r);
  for (std::size_t lag = 1; lag <= kAcfLags; ++lag) {
    m.acf_sq[lag - 1] = or_nan([&] { return autocorrelation(squares, lag); });
  }
  return m;
}

}  // namespace artmarket
