#include "cli_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "artmarket/experiment.hpp"
#include "artmarket/serialize.hpp"

namespace artmarket::cli {

namespace {

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ConfigError("invalid seed '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const auto first = parse_u64(text.substr(0, dots));
    const auto last = parse_u64(text.substr(dots + 2));
    if (last < first) throw ConfigError("seed range '" + std::string(text) + "' is empty");
    return seed_range(first, last);
  }
  std::vector<std::uint64_t> seeds;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    seeds.push_back(parse_u64(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return seeds;
}

CliConfig cli_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  CliConfig cfg;
  nlohmann::json sim_fields = nlohmann::json::object();
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "seeds") {
        if (value.is_string()) {
          cfg.seeds = parse_seed_list(value.get<std::string>());
        } else if (value.is_array()) {
          cfg.seeds = value.get<std::vector<std::uint64_t>>();
        } else {
          throw ConfigError("config field 'seeds' must be a range string or an array");
        }
        if (cfg.seeds.empty()) throw ConfigError("config field 'seeds' is empty");
      } else if (key == "workers") {
        cfg.workers = value.get<std::size_t>();
        if (cfg.workers == 0) throw ConfigError("config field 'workers' must be at least 1");
      } else if (key == "output_dir") {
        cfg.output_dir = value.get<std::string>();
      } else if (key == "formats") {
        cfg.formats.clear();
        for (const auto& f : value) cfg.formats.push_back(parse_report_format(f.get<std::string>()));
      } else if (key == "trade_log") {
        cfg.trade_log = value.get<bool>();
      } else {
        sim_fields[key] = value;
      }
    }
    cfg.sim = sim_config_from_json(sim_fields);
    cfg.sim.validate();
  } catch (const ConfigError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config has a field of the wrong type: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

nlohmann::json read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file " + path.string() + " is not valid JSON: " + e.what());
  }
}

nlohmann::json merge_config(nlohmann::json file, const nlohmann::json& flags) {
  if (file.is_null()) file = nlohmann::json::object();
  file.merge_patch(flags);
  return file;
}

std::string default_parameter_table() {
  const nlohmann::json defaults = SimConfig{};
  std::ostringstream out;
  out << "default parameters:\n";
  for (const auto& [key, value] : defaults.items()) {
    out << "  " << key;
    for (std::size_t pad = key.size(); pad < 12; ++pad) out << ' ';
    out << value.dump() << '\n';
  }
  out << "  seeds       \"0..99\"\n";
  return out.str();
}

}  // namespace artmarket::cli
