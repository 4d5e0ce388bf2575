#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "artmarket/report.hpp"
#include "artmarket/simulator.hpp"

namespace artmarket::cli {

/// Bad configuration; maps to exit status 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  SimConfig sim{};
  std::vector<std::uint64_t> seeds = seed_range(0, 99);
  std::size_t workers = 1;
  std::filesystem::path output_dir = "out";
  std::vector<ReportFormat> formats{ReportFormat::kCsv, ReportFormat::kJson, ReportFormat::kText};
  bool trade_log = false;
};

/// "0..99" (inclusive), "3,5,8", or a single integer.
[[nodiscard]] std::vector<std::uint64_t> parse_seed_list(std::string_view text);

/// Every key is optional and defaults to the published parameter set; unknown
/// keys are rejected. The result is validated. Throws ConfigError.
[[nodiscard]] CliConfig cli_config_from_json(const nlohmann::json& j);

/// Parses a config file. Throws ConfigError.
[[nodiscard]] nlohmann::json read_config_file(const std::filesystem::path& path);

/// File values with flag values patched over them.
[[nodiscard]] nlohmann::json merge_config(nlohmann::json file, const nlohmann::json& flags);

/// Parameter table printed by --version.
[[nodiscard]] std::string default_parameter_table();

}  // namespace artmarket::cli
