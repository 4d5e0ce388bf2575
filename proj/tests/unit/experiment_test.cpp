#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "artmarket/experiment.hpp"
#include "artmarket/report.hpp"

namespace artmarket {
namespace {

SimConfig tiny_base() {
  SimConfig c;
  c.agents = 100;
  c.tau_max = 1000;
  c.order_lifetime = 1000;
  c.end_tick = 12000;
  c.windows = {20, 200, 50, 10};
  return c;
}

FactorialSpec tiny_spec(std::vector<std::uint64_t> seeds) {
  FactorialSpec spec;
  spec.base = tiny_base();
  spec.seeds = std::move(seeds);
  spec.metrics = {100, 2000};
  return spec;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Summarize, MeanAndStandardError) {
  const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
  const CellStat s = summarize(xs);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_DOUBLE_EQ(s.std_error, std::sqrt(5.0 / 3.0) / 2.0);
  EXPECT_EQ(s.count, 4U);
  EXPECT_TRUE(std::isnan(summarize(std::vector<double>{7.0}).std_error));
}

TEST(Cases, LabelsAndConfigs) {
  EXPECT_EQ(case_label(kFactorialCases[0]), "both");
  EXPECT_EQ(case_label(kFactorialCases[3]), "neither");
  EXPECT_EQ(case_index("strta_only"), 2U);
  EXPECT_THROW((void)case_index("none"), std::invalid_argument);
  const SimConfig c = case_config(tiny_base(), kFactorialCases[1], 42);
  EXPECT_EQ(c.ctaa, AgentMode::kReal);
  EXPECT_EQ(c.strta, AgentMode::kShadow);
  EXPECT_EQ(c.seed, 42U);
  EXPECT_EQ(seed_range(3, 5), (std::vector<std::uint64_t>{3, 4, 5}));
  EXPECT_TRUE(seed_range(5, 3).empty());
}

TEST(Factorial, SingleSeedHasFourRuns) {
  const auto report = run_factorial(tiny_spec({11}));
  ASSERT_EQ(report.runs.size(), 4U);
  for (std::size_t c = 0; c < 4; ++c) {
    EXPECT_EQ(report.runs[c].case_label, case_label(kFactorialCases[c]));
    EXPECT_EQ(report.table(TableId::kCtaaReturn)[c].count, 1U);
    EXPECT_TRUE(std::isnan(report.table(TableId::kCtaaReturn)[c].std_error));
  }
}

TEST(Factorial, TablesAreMeansOfRuns) {
  const auto report = run_factorial(tiny_spec({1, 2, 3}));
  ASSERT_EQ(report.runs.size(), 12U);
  for (std::size_t c = 0; c < 4; ++c) {
    double sum = 0.0;
    for (std::size_t s = 0; s < 3; ++s) sum += report.runs[c * 3 + s].strta_return_pct;
    EXPECT_NEAR(report.table(TableId::kStrtaReturn)[c].mean, sum / 3.0, 1e-12);
    EXPECT_EQ(report.runs[c * 3].seed, 1U);
  }
}

TEST(Factorial, AggregateIgnoresInputOrder) {
  const auto report = run_factorial(tiny_spec({1, 2}));
  auto shuffled = report.runs;
  std::reverse(shuffled.begin(), shuffled.end());
  const auto again = aggregate(report.base, report.seeds, report.metrics, shuffled);
  EXPECT_EQ(render_text(again), render_text(report));
  shuffled.pop_back();
  EXPECT_THROW((void)aggregate(report.base, report.seeds, report.metrics, shuffled),
               std::invalid_argument);
}

TEST(Factorial, WorkerCountDoesNotChangeReport) {
  auto spec = tiny_spec({4, 5, 6});
  const auto serial = run_factorial(spec);
  spec.workers = 3;
  const auto parallel = run_factorial(spec);
  EXPECT_EQ(metrics_jsonl(serial), metrics_jsonl(parallel));
  EXPECT_EQ(report_json(serial).dump(), report_json(parallel).dump());
  for (std::size_t t = 0; t < kTableCount; ++t) {
    const auto id = static_cast<TableId>(t);
    EXPECT_EQ(table_csv(serial, id), table_csv(parallel, id));
  }
}

TEST(Factorial, ReportFilesAreByteIdentical) {
  const auto root = std::filesystem::temp_directory_path() / "artmarket_experiment_test";
  std::filesystem::remove_all(root);
  auto spec = tiny_spec({2, 3});
  const std::vector<ReportFormat> all{ReportFormat::kCsv, ReportFormat::kJson, ReportFormat::kText};
  write_report(run_factorial(spec), root / "a", all);
  spec.workers = 2;
  write_report(run_factorial(spec), root / "b", all);
  for (const char* f : {"report/table1.csv", "report/table6.csv", "report/stylized_facts.csv",
                        "report/report.json", "report/report.txt", "runs/metrics.jsonl"}) {
    const auto a = slurp(root / "a" / f);
    EXPECT_FALSE(a.empty()) << f;
    EXPECT_EQ(a, slurp(root / "b" / f)) << f;
  }
  std::filesystem::remove_all(root);
}

TEST(Factorial, FailureNamesCaseAndSeed) {
  const auto dir = std::filesystem::temp_directory_path() / "artmarket_failure_test";
  std::filesystem::remove_all(dir);
  // A directory where the trade log file should go makes that one run fail.
  std::filesystem::create_directories(dir / "trades_strta_only_7.csv");
  auto spec = tiny_spec({6, 7});
  spec.trade_log_dir = dir;
  try {
    (void)run_factorial(spec);
    FAIL() << "expected RunFailure";
  } catch (const RunFailure& e) {
    EXPECT_EQ(e.case_label(), "strta_only");
    EXPECT_EQ(e.seed(), 7U);
  }
  EXPECT_TRUE(std::filesystem::exists(dir / "trades_both_6.csv"));
  std::filesystem::remove_all(dir);
}

TEST(Factorial, RejectsEmptySeeds) {
  EXPECT_THROW((void)run_factorial(tiny_spec({})), std::invalid_argument);
}

TEST(Factorial, ProgressReportsEveryRun) {
  auto spec = tiny_spec({1});
  std::size_t calls = 0;
  spec.progress = [&](std::size_t done, std::size_t total) {
    ++calls;
    EXPECT_EQ(total, 4U);
    EXPECT_EQ(done, calls);
  };
  (void)run_factorial(spec);
  EXPECT_EQ(calls, 4U);
}

TEST(Report, TextAndCsvLayout) {
  const auto report = run_factorial(tiny_spec({1, 2}));
  const std::string text = render_text(report);
  EXPECT_NE(text.find("dt=20"), std::string::npos);
  EXPECT_NE(text.find("CTAA"), std::string::npos);
  const std::string csv = table_csv(report, TableId::kCtaaVolume);
  EXPECT_EQ(csv.rfind("# ", 0), 0U);
  EXPECT_NE(csv.find("ctaa,strta_exist_mean,strta_exist_se,strta_not_exist_mean,strta_not_exist_se,n"),
            std::string::npos);
  EXPECT_NE(csv.find("\nexist,"), std::string::npos);
  EXPECT_NE(csv.find("\nnot_exist,"), std::string::npos);
  EXPECT_EQ(parse_report_format("json"), ReportFormat::kJson);
  EXPECT_THROW((void)parse_report_format("xml"), std::invalid_argument);
}

}  // namespace
}  // namespace artmarket
