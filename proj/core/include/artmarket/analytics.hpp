#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "artmarket/agents.hpp"
#include "artmarket/price.hpp"

namespace artmarket {

struct RunResult;

/// Earnings per fundamental price, in percent. Open positions are marked to
/// `final_mid`.
[[nodiscard]] double final_return_pct(const Ledger& ledger, double final_mid, double fundamental);

/// Shares traded; every fill is one share.
[[nodiscard]] std::size_t trading_volume(const Ledger& ledger) noexcept;

/// Non-overlapping log returns ln(P[s + k*interval] / P[s + (k-1)*interval])
/// for k = 1 .. floor((end - start) / interval).
[[nodiscard]] std::vector<double> interval_log_returns(std::span<const double> mids, Tick start,
                                                       Tick end, Tick interval);

[[nodiscard]] double mean(std::span<const double> xs);

/// Population standard deviation. Throws std::invalid_argument for fewer than
/// two values.
[[nodiscard]] double population_stdev(std::span<const double> xs);

/// population_stdev in percent.
[[nodiscard]] double stdev_returns_pct(std::span<const double> returns);

/// m4 / m2^2 - 3 with population central moments, so a normal sample maps to
/// about zero. Throws std::invalid_argument for fewer than four values or
/// zero variance.
[[nodiscard]] double excess_kurtosis(std::span<const double> xs);

/// Sample autocorrelation at `lag`, normalized by the lag-0 sum of squares.
/// Throws std::invalid_argument if the series is constant or too short.
[[nodiscard]] double autocorrelation(std::span<const double> xs, std::size_t lag);

/// Autocorrelation of the squared series at lags 1..max_lag.
[[nodiscard]] std::vector<double> squared_return_autocorr(std::span<const double> returns,
                                                          std::size_t max_lag);

inline constexpr std::size_t kAcfLags = 5;

struct MetricsOptions {
  Tick short_interval = 100;
  Tick long_interval = 20000;
};

/// The per-run record. Statistics that cannot be formed from a short run are NaN.
struct RunMetrics {
  std::string case_label;
  std::uint64_t seed = 0;
  double ctaa_return_pct = 0.0;
  std::uint64_t ctaa_volume = 0;
  double strta_return_pct = 0.0;
  std::uint64_t strta_volume = 0;
  double stdev_short_pct = 0.0;
  double stdev_long_pct = 0.0;
  double excess_kurtosis_short = 0.0;
  std::array<double, kAcfLags> acf_sq{};
};

/// Returns are measured from the end of warm-up to the last tick.
[[nodiscard]] RunMetrics compute_run_metrics(const RunResult& run, std::string case_label,
                                             const MetricsOptions& options = {});

}  // namespace artmarket
