#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "artmarket/analytics.hpp"
#include "artmarket/experiment.hpp"
#include "artmarket/report.hpp"
#include "artmarket/serialize.hpp"
#include "artmarket/simulator.hpp"
#include "cli_config.hpp"

namespace {

using artmarket::cli::CliConfig;
using artmarket::cli::ConfigError;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRun = 2;

// Flags shared by both subcommands. Only flags the user actually passed end
// up in the override object.
struct Overrides {
  std::string config_path;
  std::optional<std::int64_t> t_end, dt, dt1, dt2, dt3, agents;
  std::optional<std::string> out;
  bool trades = false;

  void attach(CLI::App& cmd) {
    cmd.add_option("-c,--config", config_path, "JSON config file");
    cmd.add_option("--t-end", t_end, "Last tick of each run");
    cmd.add_option("--dt", dt, "Strategy order cycle in ticks (even)");
    cmd.add_option("--dt1", dt1, "Trend follower entry lookback");
    cmd.add_option("--dt2", dt2, "Trend exit / reversal entry lookback");
    cmd.add_option("--dt3", dt3, "Reversal exit lookback");
    cmd.add_option("--agents", agents, "Number of normal agents");
    cmd.add_option("-o,--out", out, "Output directory");
    cmd.add_flag("--trades", trades, "Write trade log CSVs");
  }

  void apply(nlohmann::json& j) const {
    auto put = [&](const char* key, const auto& v) {
      if (v) j[key] = *v;
    };
    put("t_end", t_end);
    put("dt", dt);
    put("dt1", dt1);
    put("dt2", dt2);
    put("dt3", dt3);
    put("n", agents);
    put("output_dir", out);
    if (trades) j["trade_log"] = true;
  }
};

CliConfig resolve(const Overrides& common, const nlohmann::json& extra) {
  nlohmann::json file = nlohmann::json::object();
  if (!common.config_path.empty()) file = artmarket::cli::read_config_file(common.config_path);
  nlohmann::json flags = extra;
  common.apply(flags);
  return artmarket::cli::cli_config_from_json(artmarket::cli::merge_config(file, flags));
}

void print_version() {
  std::printf("market_sim %s (C++%ld, %s build)\n", ARTMARKET_VERSION, __cplusplus / 100 % 100,
#ifdef NDEBUG
              "release"
#else
              "debug"
#endif
  );
  std::fputs(artmarket::cli::default_parameter_table().c_str(), stdout);
}

int cmd_run(const CliConfig& cfg) {
  using namespace artmarket;
  RunOptions options;
  options.keep_trades = cfg.trade_log;
  const RunResult run = run_simulation(cfg.sim, options);
  const std::string label = std::string(to_string(cfg.sim.ctaa)) + "_" +
                            std::string(to_string(cfg.sim.strta));
  const RunMetrics metrics = compute_run_metrics(run, label);

  const auto runs_dir = cfg.output_dir / "runs";
  std::filesystem::create_directories(runs_dir);
  const std::string stem = "run_" + label + "_" + std::to_string(cfg.sim.seed);
  {
    std::ofstream out(runs_dir / (stem + ".json"));
    if (!out) throw std::runtime_error("cannot write " + (runs_dir / (stem + ".json")).string());
    out << run_summary_json(run, metrics).dump(2) << '\n';
  }
  if (cfg.trade_log) {
    std::ofstream out(runs_dir / ("trades_" + label + "_" + std::to_string(cfg.sim.seed) + ".csv"));
    if (!out) throw std::runtime_error("cannot write trade log");
    write_trade_log_csv(out, run.trades, PriceGrid(cfg.sim.price_increment));
  }

  std::printf("seed %llu  ctaa=%s strta=%s  ticks=%lld  final mid %.2f\n",
              static_cast<unsigned long long>(cfg.sim.seed), std::string(to_string(cfg.sim.ctaa)).c_str(),
              std::string(to_string(cfg.sim.strta)).c_str(), static_cast<long long>(cfg.sim.end_tick),
              run.final_mid);
  std::printf("  CTAA  return %8.2f%%  volume %llu\n", metrics.ctaa_return_pct,
              static_cast<unsigned long long>(metrics.ctaa_volume));
  std::printf("  STRTA return %8.2f%%  volume %llu\n", metrics.strta_return_pct,
              static_cast<unsigned long long>(metrics.strta_volume));
  std::printf("  stdev %lld-tick %.4f%%  %lld-tick %.4f%%  excess kurtosis %.3f\n",
              100LL, metrics.stdev_short_pct, 20000LL, metrics.stdev_long_pct,
              metrics.excess_kurtosis_short);
  std::printf("  NA trades %llu  skipped orders %llu  empty-side market orders %llu\n",
              static_cast<unsigned long long>(run.diagnostics.na_trades),
              static_cast<unsigned long long>(run.diagnostics.skipped_orders),
              static_cast<unsigned long long>(run.diagnostics.empty_side_market_orders));
  std::printf("  wrote %s\n", (runs_dir / (stem + ".json")).string().c_str());
  return kExitOk;
}

int cmd_factorial(const CliConfig& cfg, bool quiet) {
  using namespace artmarket;
  FactorialSpec spec;
  spec.base = cfg.sim;
  spec.seeds = cfg.seeds;
  spec.workers = cfg.workers;
  if (cfg.trade_log) spec.trade_log_dir = cfg.output_dir / "runs";
  if (!quiet) {
    spec.progress = [](std::size_t done, std::size_t total) {
      std::fprintf(stderr, "\r%zu/%zu runs", done, total);
      if (done == total) std::fputc('\n', stderr);
    };
  }
  const FactorialReport report = run_factorial(spec);
  write_report(report, cfg.output_dir, cfg.formats);
  std::fputs(render_text(report).c_str(), stdout);
  std::printf("\nreport written to %s\n", (cfg.output_dir / "report").string().c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artificial market with trend-following and short-term reversal agents"};
  app.require_subcommand(0, 1);
  bool version = false;
  app.add_flag("--version", version, "Print build info and the default parameter table");

  Overrides run_common;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> ctaa, strta;
  auto* run = app.add_subcommand("run", "Run a single simulation");
  run_common.attach(*run);
  run->add_option("--seed", seed, "Random seed");
  run->add_option("--ctaa", ctaa, "Trend follower mode: real, shadow, absent");
  run->add_option("--strta", strta, "Reversal trader mode: real, shadow, absent");

  Overrides fact_common;
  std::optional<std::string> seeds;
  std::optional<std::size_t> workers;
  std::optional<std::vector<std::string>> formats;
  bool quiet = false;
  auto* factorial = app.add_subcommand("factorial", "Run the 2x2 existence experiment over many seeds");
  fact_common.attach(*factorial);
  factorial->add_option("--seeds", seeds, "Seed list: 0..99 or 1,2,3");
  factorial->add_option("--workers", workers, "Parallel runs");
  factorial->add_option("--format", formats, "Report formats: csv json text (repeatable)");
  factorial->add_flag("-q,--quiet", quiet, "No progress output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (version) {
    print_version();
    return kExitOk;
  }

  try {
    if (run->parsed()) {
      nlohmann::json extra = nlohmann::json::object();
      if (seed) extra["seed"] = *seed;
      if (ctaa) extra["ctaa"] = *ctaa;
      if (strta) extra["strta"] = *strta;
      CliConfig cfg;
      try {
        cfg = resolve(run_common, extra);
      } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
      }
      return cmd_run(cfg);
    }
    if (factorial->parsed()) {
      nlohmann::json extra = nlohmann::json::object();
      if (seeds) extra["seeds"] = *seeds;
      if (workers) extra["workers"] = *workers;
      if (formats) extra["formats"] = *formats;
      CliConfig cfg;
      try {
        cfg = resolve(fact_common, extra);
      } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
      }
      return cmd_factorial(cfg, quiet);
    }
  } catch (const artmarket::RunFailure& e) {
    std::fprintf(stderr, "run failure: %s\n", e.what());
    return kExitRun;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRun;
  }

  std::fputs(app.help().c_str(), stdout);
  return kExitOk;
}
