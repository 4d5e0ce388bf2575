#include "artmarket/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <thread>

#include "artmarket/serialize.hpp"

namespace artmarket {

std::string_view case_label(FactorialCase c) noexcept {
  if (c.ctaa_exists) return c.strta_exists ? "both" : "ctaa_only";
  return c.strta_exists ? "strta_only" : "neither";
}

std::size_t case_index(std::string_view label) {
  for (std::size_t i = 0; i < kFactorialCases.size(); ++i) {
    if (case_label(kFactorialCases[i]) == label) return i;
  }
  throw std::invalid_argument("unknown factorial case '" + std::string(label) + "'");
}

SimConfig case_config(const SimConfig& base, FactorialCase c, std::uint64_t seed) {
  SimConfig cfg = base;
  cfg.ctaa = c.ctaa_exists ? AgentMode::kReal : AgentMode::kShadow;
  cfg.strta = c.strta_exists ? AgentMode::kReal : AgentMode::kShadow;
  cfg.seed = seed;
  return cfg;
}

std::vector<std::uint64_t> seed_range(std::uint64_t first, std::uint64_t last) {
  std::vector<std::uint64_t> seeds;
  if (last < first) return seeds;
  seeds.reserve(last - first + 1);
  for (std::uint64_t s = first; s <= last; ++s) {
    seeds.push_back(s);
    if (s == std::numeric_limits<std::uint64_t>::max()) break;
  }
  return seeds;
}

CellStat summarize(std::span<const double> values) {
  CellStat cell;
  cell.count = values.size();
  if (values.empty()) {
    cell.mean = std::numeric_limits<double>::quiet_NaN();
    cell.std_error = cell.mean;
    return cell;
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  const auto n = static_cast<double>(values.size());
  cell.mean = sum / n;
  if (values.size() < 2) {
    cell.std_error = std::numeric_limits<double>::quiet_NaN();
    return cell;
  }
  double ss = 0.0;
  for (double v : values) ss += (v - cell.mean) * (v - cell.mean);
  cell.std_error = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  return cell;
}

RunFailure::RunFailure(std::string case_label, std::uint64_t seed, const std::string& what)
    : std::runtime_error("run failed for case " + case_label + ", seed " + std::to_string(seed) +
                         ": " + what),
      case_label_(std::move(case_label)),
      seed_(seed) {}

FactorialReport aggregate(const SimConfig& base, std::vector<std::uint64_t> seeds,
                          const MetricsOptions& metrics, std::vector<RunMetrics> runs) {
  std::sort(runs.begin(), runs.end(), [](const RunMetrics& a, const RunMetrics& b) {
    const auto ca = case_index(a.case_label);
    const auto cb = case_index(b.case_label);
    return ca != cb ? ca < cb : a.seed < b.seed;
  });

  FactorialReport report;
  report.base = base;
  report.seeds = std::move(seeds);
  report.metrics = metrics;

  std::array<std::vector<const RunMetrics*>, 4> by_case;
  for (const RunMetrics& m : runs) by_case[case_index(m.case_label)].push_back(&m);
  for (const auto& group : by_case) {
    if (group.size() != report.seeds.size()) {
      throw std::invalid_argument("every factorial case needs exactly one run per seed");
    }
  }

  auto column = [&](std::size_t c, auto field) {
    std::vector<double> values;
    values.reserve(by_case[c].size());
    for (const RunMetrics* m : by_case[c]) values.push_back(field(*m));
    return summarize(values);
  };
  for (std::size_t c = 0; c < 4; ++c) {
    auto& t = report.tables;
    t[0][c] = column(c, [](const RunMetrics& m) { return m.ctaa_return_pct; });
    t[1][c] = column(c, [](const RunMetrics& m) { return static_cast<double>(m.ctaa_volume); });
    t[2][c] = column(c, [](const RunMetrics& m) { return m.strta_return_pct; });
    t[3][c] = column(c, [](const RunMetrics& m) { return static_cast<double>(m.strta_volume); });
    t[4][c] = column(c, [](const RunMetrics& m) { return m.stdev_short_pct; });
    t[5][c] = column(c, [](const RunMetrics& m) { return m.stdev_long_pct; });
    report.stylized.kurtosis[c] =
        column(c, [](const RunMetrics& m) { return m.excess_kurtosis_short; });
    for (std::size_t lag = 0; lag < kAcfLags; ++lag) {
      report.stylized.acf_sq[lag][c] =
          column(c, [lag](const RunMetrics& m) { return m.acf_sq[lag]; });
    }
  }
  report.runs = std::move(runs);
  return report;
}

FactorialReport run_factorial(const FactorialSpec& spec) {
  spec.base.validate();
  if (spec.seeds.empty()) throw std::invalid_argument("factorial needs at least one seed");

  struct Job {
    FactorialCase c;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (const FactorialCase& c : kFactorialCases) {
    for (std::uint64_t seed : spec.seeds) jobs.push_back({c, seed});
  }

  std::vector<RunMetrics> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  std::size_t finished = 0;
  std::mutex progress_mutex;
  if (spec.trade_log_dir) std::filesystem::create_directories(*spec.trade_log_dir);

  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) {
      const Job& job = jobs[i];
      const std::string label(case_label(job.c));
      try {
        const SimConfig cfg = case_config(spec.base, job.c, job.seed);
        RunOptions options;
        options.keep_trades = spec.trade_log_dir.has_value();
        const RunResult run = run_simulation(cfg, options);
        results[i] = compute_run_metrics(run, label, spec.metrics);
        if (spec.trade_log_dir) {
          const auto path = *spec.trade_log_dir /
                            ("trades_" + label + "_" + std::to_string(job.seed) + ".csv");
          std::ofstream out(path);
          if (!out) throw std::runtime_error("cannot write " + path.string());
          write_trade_log_csv(out, run.trades, PriceGrid(cfg.price_increment));
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
      if (spec.progress) {
        std::lock_guard lock(progress_mutex);
        spec.progress(++finished, jobs.size());
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(spec.workers, 1, jobs.size());
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!errors[i]) continue;
    const std::string label(case_label(jobs[i].c));
    try {
      std::rethrow_exception(errors[i]);
    } catch (const std::exception& e) {
      throw RunFailure(label, jobs[i].seed, e.what());
    } catch (...) {
      throw RunFailure(label, jobs[i].seed, "unknown error");
    }
  }
  return aggregate(spec.base, spec.seeds, spec.metrics, std::move(results));
}

}  // namespace artmarket
