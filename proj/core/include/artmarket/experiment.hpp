#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "artmarket/analytics.hpp"
#include "artmarket/simulator.hpp"

namespace artmarket {

/// One cell of the 2x2 existence design. A non-existent agent still runs in
/// shadow mode so its would-be returns can be reported.
struct FactorialCase {
  bool ctaa_exists = true;
  bool strta_exists = true;
};

/// Table order: rows CTAA exist / not exist, columns STRTA exist / not exist.
inline constexpr std::array<FactorialCase, 4> kFactorialCases{{
    {true, true},
    {true, false},
    {false, true},
    {false, false},
}};

[[nodiscard]] std::string_view case_label(FactorialCase c) noexcept;
[[nodiscard]] std::size_t case_index(std::string_view label);

/// The base config with modes set from `c` and the given seed.
[[nodiscard]] SimConfig case_config(const SimConfig& base, FactorialCase c, std::uint64_t seed);

/// Inclusive seed range.
[[nodiscard]] std::vector<std::uint64_t> seed_range(std::uint64_t first, std::uint64_t last);

struct FactorialSpec {
  SimConfig base{};
  std::vector<std::uint64_t> seeds = seed_range(0, 99);
  std::size_t workers = 1;
  MetricsOptions metrics{};
  /// When set, every run writes trades_{case}_{seed}.csv here.
  std::optional<std::filesystem::path> trade_log_dir;
  /// Called after each run completes with (finished, total). May be called
  /// from worker threads, but never concurrently.
  std::function<void(std::size_t, std::size_t)> progress;
};

struct CellStat {
  double mean = 0.0;
  /// Standard error of the mean across seeds; NaN for a single seed.
  double std_error = 0.0;
  std::size_t count = 0;
};

[[nodiscard]] CellStat summarize(std::span<const double> values);

enum class TableId : std::uint8_t {
  kCtaaReturn,
  kCtaaVolume,
  kStrtaReturn,
  kStrtaVolume,
  kStdevShort,
  kStdevLong,
};
inline constexpr std::size_t kTableCount = 6;

/// Indexed by position in kFactorialCases.
using CaseTable = std::array<CellStat, 4>;

struct StylizedFacts {
  CaseTable kurtosis{};
  std::array<CaseTable, kAcfLags> acf_sq{};
};

struct FactorialReport {
  SimConfig base{};
  std::vector<std::uint64_t> seeds;
  MetricsOptions metrics{};
  std::array<CaseTable, kTableCount> tables{};
  StylizedFacts stylized{};
  /// Sorted by (case, seed).
  std::vector<RunMetrics> runs;

  [[nodiscard]] const CaseTable& table(TableId id) const {
    return tables[static_cast<std::size_t>(id)];
  }
};

class RunFailure : public std::runtime_error {
 public:
  RunFailure(std::string case_label, std::uint64_t seed, const std::string& what);

  [[nodiscard]] const std::string& case_label() const noexcept { return case_label_; }
  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::string case_label_;
  std::uint64_t seed_;
};

/// Runs all four cases for every seed and aggregates. The result does not
/// depend on the worker count. Throws RunFailure for the first failing run in
/// (case, seed) order.
[[nodiscard]] FactorialReport run_factorial(const FactorialSpec& spec);

/// Builds the tables from per-run records; order of `runs` is irrelevant.
[[nodiscard]] FactorialReport aggregate(const SimConfig& base, std::vector<std::uint64_t> seeds,
                                        const MetricsOptions& metrics,
                                        std::vector<RunMetrics> runs);

}  // namespace artmarket
