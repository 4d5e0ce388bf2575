#pragma once

#include <filesystem>
#include <vector>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "artmarket/experiment.hpp"

namespace artmarket {

enum class ReportFormat : std::uint8_t { kCsv, kJson, kText };

/// Throws std::invalid_argument for anything but "csv", "json", "text".
[[nodiscard]] ReportFormat parse_report_format(std::string_view text);

[[nodiscard]] std::string_view table_title(TableId id) noexcept;

/// One-line parameter summary, windows included, used as every report header.
[[nodiscard]] std::string parameter_line(const FactorialReport& report);

[[nodiscard]] std::string table_csv(const FactorialReport& report, TableId id);
[[nodiscard]] std::string stylized_facts_csv(const FactorialReport& report);
[[nodiscard]] nlohmann::json report_json(const FactorialReport& report);
/// 2x2 grids laid out CTAA rows by STRTA columns.
[[nodiscard]] std::string render_text(const FactorialReport& report);
/// One JSON object per line, in (case, seed) order.
[[nodiscard]] std::string metrics_jsonl(const FactorialReport& report);

/// Writes runs/metrics.jsonl and, per format, report/table{1..6}.csv with
/// report/stylized_facts.csv, report/report.json, or report/report.txt.
/// Throws std::runtime_error if a file cannot be written.
void write_report(const FactorialReport& report, const std::filesystem::path& out_dir,
                  const std::vector<ReportFormat>& formats);

}  // namespace artmarket
