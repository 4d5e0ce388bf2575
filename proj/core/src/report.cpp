#include "artmarket/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "artmarket/serialize.hpp"

namespace artmarket {

namespace {

std::string format(const char* fmt, double v) {
  if (!std::isfinite(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

std::string csv_number(double v) { return format("%.10g", v); }

nlohmann::json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

nlohmann::json cell_json(const CellStat& cell) {
  return nlohmann::json{
      {"mean", json_number(cell.mean)}, {"se", json_number(cell.std_error)}, {"n", cell.count}};
}

nlohmann::json case_table_json(const CaseTable& table) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t c = 0; c < kFactorialCases.size(); ++c) {
    j[std::string(case_label(kFactorialCases[c]))] = cell_json(table[c]);
  }
  return j;
}

std::string_view table_key(TableId id) noexcept {
  switch (id) {
    case TableId::kCtaaReturn:
      return "ctaa_return_pct";
    case TableId::kCtaaVolume:
      return "ctaa_volume";
    case TableId::kStrtaReturn:
      return "strta_return_pct";
    case TableId::kStrtaVolume:
      return "strta_volume";
    case TableId::kStdevShort:
      return "stdev_short_pct";
    case TableId::kStdevLong:
      return "stdev_long_pct";
  }
  return "unknown";
}

// printf format for a cell mean in the text rendering.
const char* text_format(TableId id) noexcept {
  switch (id) {
    case TableId::kCtaaReturn:
    case TableId::kStrtaReturn:
      return "%.0f%%";
    case TableId::kCtaaVolume:
    case TableId::kStrtaVolume:
      return "%.0f";
    case TableId::kStdevShort:
      return "%.3f%%";
    case TableId::kStdevLong:
      return "%.2f%%";
  }
  return "%g";
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

ReportFormat parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "json") return ReportFormat::kJson;
  if (text == "text") return ReportFormat::kText;
  throw std::invalid_argument("report format must be csv, json or text, got '" +
                              std::string(text) + "'");
}

std::string_view table_title(TableId id) noexcept {
  switch (id) {
    case TableId::kCtaaReturn:
      return "Returns of CTAA";
    case TableId::kCtaaVolume:
      return "Trading volume of CTAA";
    case TableId::kStrtaReturn:
      return "Returns of STRTA";
    case TableId::kStrtaVolume:
      return "Trading volume of STRTA";
    case TableId::kStdevShort:
      return "Standard deviation of short-interval returns";
    case TableId::kStdevLong:
      return "Standard deviation of long-interval returns";
  }
  return "";
}

std::string parameter_line(const FactorialReport& report) {
  const SimConfig& c = report.base;
  std::ostringstream out;
  out << "n=" << c.agents << " w1_max=" << c.weight_caps.fundamental
      << " w2_max=" << c.weight_caps.chartist << " w3_max=" << c.weight_caps.noise
      << " tau_max=" << c.tau_max << " sigma_eps=" << c.noise_scale
      << " p_d=" << c.price_dispersion << " t_c=" << c.order_lifetime
      << " delta_p=" << c.price_increment << " p_f=" << c.fundamental_price
      << " t_end=" << c.end_tick << " dt=" << c.windows.dt << " dt1=" << c.windows.dt1
      << " dt2=" << c.windows.dt2 << " dt3=" << c.windows.dt3
      << " short_interval=" << report.metrics.short_interval
      << " long_interval=" << report.metrics.long_interval << " seeds=" << report.seeds.size();
  return out.str();
}

std::string table_csv(const FactorialReport& report, TableId id) {
  const CaseTable& t = report.table(id);
  std::ostringstream out;
  out << "# " << parameter_line(report) << '\n';
  out << "ctaa,strta_exist_mean,strta_exist_se,strta_not_exist_mean,strta_not_exist_se,n\n";
  out << "exist," << csv_number(t[0].mean) << ',' << csv_number(t[0].std_error) << ','
      << csv_number(t[1].mean) << ',' << csv_number(t[1].std_error) << ',' << t[0].count << '\n';
  out << "not_exist," << csv_number(t[2].mean) << ',' << csv_number(t[2].std_error) << ','
      << csv_number(t[3].mean) << ',' << csv_number(t[3].std_error) << ',' << t[2].count << '\n';
  return out.str();
}

std::string stylized_facts_csv(const FactorialReport& report) {
  std::ostringstream out;
  out << "# " << parameter_line(report) << '\n';
  out << "statistic";
  for (const auto& c : kFactorialCases) {
    out << ',' << case_label(c) << "_mean," << case_label(c) << "_se";
  }
  out << '\n';
  auto row = [&](std::string_view name, const CaseTable& t) {
    out << name;
    for (const CellStat& cell : t) out << ',' << csv_number(cell.mean) << ',' << csv_number(cell.std_error);
    out << '\n';
  };
  row("excess_kurtosis", report.stylized.kurtosis);
  for (std::size_t lag = 0; lag < kAcfLags; ++lag) {
    row("acf_sq_lag" + std::to_string(lag + 1), report.stylized.acf_sq[lag]);
  }
  return out.str();
}

nlohmann::json report_json(const FactorialReport& report) {
  nlohmann::json params = report.base;
  params.erase("ctaa");
  params.erase("strta");
  params.erase("seed");

  nlohmann::json tables = nlohmann::json::object();
  for (std::size_t i = 0; i < kTableCount; ++i) {
    const auto id = static_cast<TableId>(i);
    tables["table" + std::to_string(i + 1) + "_" + std::string(table_key(id))] =
        case_table_json(report.table(id));
  }
  nlohmann::json acf = nlohmann::json::array();
  for (const CaseTable& lag : report.stylized.acf_sq) acf.push_back(case_table_json(lag));

  return nlohmann::json{
      {"parameters", params},
      {"intervals",
       {{"short", report.metrics.short_interval}, {"long", report.metrics.long_interval}}},
      {"seeds", report.seeds},
      {"tables", tables},
      {"stylized_facts",
       {{"excess_kurtosis", case_table_json(report.stylized.kurtosis)}, {"acf_sq", acf}}},
  };
}

std::string render_text(const FactorialReport& report) {
  std::ostringstream out;
  out << "# " << parameter_line(report) << "\n\n";
  auto cell = [](const char* fmt, const CellStat& c) {
    std::string s = format(fmt, c.mean);
    if (std::isfinite(c.std_error)) s += " (" + format("%.2g", c.std_error) + ")";
    return s;
  };
  char line[256];
  for (std::size_t i = 0; i < kTableCount; ++i) {
    const auto id = static_cast<TableId>(i);
    const CaseTable& t = report.table(id);
    const char* fmt = text_format(id);
    out << "Table " << (i + 1) << ". " << table_title(id);
    if (id == TableId::kStdevShort) out << " (" << report.metrics.short_interval << " ticks)";
    if (id == TableId::kStdevLong) out << " (" << report.metrics.long_interval << " ticks)";
    out << '\n';
    std::snprintf(line, sizeof(line), "%-18s| %-20s %-20s\n", "", "STRTA exist", "STRTA not exist");
    out << line;
    std::snprintf(line, sizeof(line), "%-18s| %-20s %-20s\n", "CTAA exist",
                  cell(fmt, t[0]).c_str(), cell(fmt, t[1]).c_str());
    out << line;
    std::snprintf(line, sizeof(line), "%-18s| %-20s %-20s\n", "CTAA not exist",
                  cell(fmt, t[2]).c_str(), cell(fmt, t[3]).c_str());
    out << line << '\n';
  }

  out << "Stylized facts (" << report.metrics.short_interval << "-tick returns)\n";
  std::snprintf(line, sizeof(line), "%-22s| %-14s %-14s %-14s %-14s\n", "", "both", "ctaa_only",
                "strta_only", "neither");
  out << line;
  auto stat_row = [&](const std::string& name, const CaseTable& t, const char* fmt) {
    std::snprintf(line, sizeof(line), "%-22s| %-14s %-14s %-14s %-14s\n", name.c_str(),
                  format(fmt, t[0].mean).c_str(), format(fmt, t[1].mean).c_str(),
                  format(fmt, t[2].mean).c_str(), format(fmt, t[3].mean).c_str());
    out << line;
  };
  stat_row("excess kurtosis", report.stylized.kurtosis, "%.2f");
  for (std::size_t lag = 0; lag < kAcfLags; ++lag) {
    stat_row("acf(r^2) lag " + std::to_string(lag + 1), report.stylized.acf_sq[lag], "%.3f");
  }
  return out.str();
}

std::string metrics_jsonl(const FactorialReport& report) {
  std::string out;
  for (const RunMetrics& m : report.runs) {
    out += nlohmann::json(m).dump();
    out += '\n';
  }
  return out;
}

void write_report(const FactorialReport& report, const std::filesystem::path& out_dir,
                  const std::vector<ReportFormat>& formats) {
  const auto report_dir = out_dir / "report";
  const auto runs_dir = out_dir / "runs";
  std::error_code ec;
  std::filesystem::create_directories(report_dir, ec);
  if (ec) throw std::runtime_error("cannot create " + report_dir.string() + ": " + ec.message());
  std::filesystem::create_directories(runs_dir, ec);
  if (ec) throw std::runtime_error("cannot create " + runs_dir.string() + ": " + ec.message());

  write_file(runs_dir / "metrics.jsonl", metrics_jsonl(report));
  for (ReportFormat f : formats) {
    switch (f) {
      case ReportFormat::kCsv:
        for (std::size_t i = 0; i < kTableCount; ++i) {
          write_file(report_dir / ("table" + std::to_string(i + 1) + ".csv"),
                     table_csv(report, static_cast<TableId>(i)));
        }
        write_file(report_dir / "stylized_facts.csv", stylized_facts_csv(report));
        break;
      case ReportFormat::kJson:
        write_file(report_dir / "report.json", report_json(report).dump(2) + "\n");
        break;
      case ReportFormat::kText:
        write_file(report_dir / "report.txt", render_text(report));
        break;
    }
  }
}

}  // namespace artmarket
