#include "artmarket/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace artmarket {

namespace {

nlohmann::json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

template <typename T>
T read_field(const nlohmann::json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument("config field '" + key + "' has the wrong type");
  }
}

}  // namespace

void to_json(nlohmann::json& j, const StrategyWindows& w) {
  j = nlohmann::json{{"dt", w.dt}, {"dt1", w.dt1}, {"dt2", w.dt2}, {"dt3", w.dt3}};
}

void to_json(nlohmann::json& j, const SimConfig& c) {
  j = nlohmann::json{
      {"n", c.agents},
      {"w1_max", c.weight_caps.fundamental},
      {"w2_max", c.weight_caps.chartist},
      {"w3_max", c.weight_caps.noise},
      {"tau_max", c.tau_max},
      {"sigma_eps", c.noise_scale},
      {"p_d", c.price_dispersion},
      {"t_c", c.order_lifetime},
      {"delta_p", c.price_increment},
      {"p_f", c.fundamental_price},
      {"t_end", c.end_tick},
      {"dt", c.windows.dt},
      {"dt1", c.windows.dt1},
      {"dt2", c.windows.dt2},
      {"dt3", c.windows.dt3},
      {"ctaa", std::string(to_string(c.ctaa))},
      {"strta", std::string(to_string(c.strta))},
      {"seed", c.seed},
  };
}

void to_json(nlohmann::json& j, const RunDiagnostics& d) {
  j = nlohmann::json{
      {"na_orders", d.na_orders},
      {"skipped_orders", d.skipped_orders},
      {"na_trades", d.na_trades},
      {"expired_orders", d.expired_orders},
      {"strategy_orders", d.strategy_orders},
      {"empty_side_market_orders", d.empty_side_market_orders},
      {"one_sided_ticks", d.one_sided_ticks},
      {"final_book_size", d.final_book_size},
  };
}

void to_json(nlohmann::json& j, const RunMetrics& m) {
  nlohmann::json acf = nlohmann::json::array();
  for (double v : m.acf_sq) acf.push_back(number_or_null(v));
  j = nlohmann::json{
      {"case", m.case_label},
      {"seed", m.seed},
      {"ctaa_return_pct", number_or_null(m.ctaa_return_pct)},
      {"ctaa_volume", m.ctaa_volume},
      {"strta_return_pct", number_or_null(m.strta_return_pct)},
      {"strta_volume", m.strta_volume},
      {"stdev_100", number_or_null(m.stdev_short_pct)},
      {"stdev_20000", number_or_null(m.stdev_long_pct)},
      {"excess_kurtosis_100", number_or_null(m.excess_kurtosis_short)},
      {"acf_sq", acf},
  };
}

SimConfig sim_config_from_json(const nlohmann::json& j, SimConfig base) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "n") {
      base.agents = read_field<std::int64_t>(value, key);
    } else if (key == "w1_max") {
      base.weight_caps.fundamental = read_field<double>(value, key);
    } else if (key == "w2_max") {
      base.weight_caps.chartist = read_field<double>(value, key);
    } else if (key == "w3_max") {
      base.weight_caps.noise = read_field<double>(value, key);
    } else if (key == "tau_max") {
      base.tau_max = read_field<std::int64_t>(value, key);
    } else if (key == "sigma_eps") {
      base.noise_scale = read_field<double>(value, key);
    } else if (key == "p_d") {
      base.price_dispersion = read_field<double>(value, key);
    } else if (key == "t_c") {
      base.order_lifetime = read_field<std::int64_t>(value, key);
    } else if (key == "delta_p") {
      base.price_increment = read_field<double>(value, key);
    } else if (key == "p_f") {
      base.fundamental_price = read_field<double>(value, key);
    } else if (key == "t_end") {
      base.end_tick = read_field<std::int64_t>(value, key);
    } else if (key == "dt") {
      base.windows.dt = read_field<std::int64_t>(value, key);
    } else if (key == "dt1") {
      base.windows.dt1 = read_field<std::int64_t>(value, key);
    } else if (key == "dt2") {
      base.windows.dt2 = read_field<std::int64_t>(value, key);
    } else if (key == "dt3") {
      base.windows.dt3 = read_field<std::int64_t>(value, key);
    } else if (key == "ctaa") {
      base.ctaa = parse_agent_mode(read_field<std::string>(value, key));
    } else if (key == "strta") {
      base.strta = parse_agent_mode(read_field<std::string>(value, key));
    } else if (key == "seed") {
      base.seed = read_field<std::uint64_t>(value, key);
    } else {
      throw std::invalid_argument("unknown config field '" + key + "'");
    }
  }
  return base;
}

nlohmann::json run_summary_json(const RunResult& run, const RunMetrics& metrics) {
  nlohmann::json j;
  j["config"] = run.config;
  j["metrics"] = metrics;
  j["final_mid"] = run.final_mid;
  j["ctaa_position"] = run.ctaa.position;
  j["strta_position"] = run.strta.position;
  j["trade_log_entries"] = run.trades.size();
  j["diagnostics"] = run.diagnostics;
  return j;
}

void write_trade_log_csv(std::ostream& out, std::span<const Trade> trades, const PriceGrid& grid) {
  out << "tick,price,buy_agent,sell_agent,aggressor\n";
  char price[64];
  for (const Trade& t : trades) {
    std::snprintf(price, sizeof(price), "%.2f", grid.to_currency(t.price));
    out << t.tick << ',' << price << ',' << t.buy_agent << ',' << t.sell_agent << ','
        << to_string(t.aggressor) << '\n';
  }
}

}  // namespace artmarket
