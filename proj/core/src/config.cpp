#include "hriot/config.hpp"

#include <cctype>
#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace hriot {

std::string protocol_name(Protocol p) {
  switch (p) {
    case Protocol::HRIOT: return "HRIOT";
    case Protocol::DIRECT: return "DIRECT";
    case Protocol::EECRP_LIKE: return "EECRP_LIKE";
    case Protocol::ERGID_LIKE: return "ERGID_LIKE";
  }
  return "?";
}

Protocol parse_protocol(const std::string& name) {
  if (name == "HRIOT") return Protocol::HRIOT;
  if (name == "DIRECT") return Protocol::DIRECT;
  if (name == "EECRP_LIKE") return Protocol::EECRP_LIKE;
  if (name == "ERGID_LIKE") return Protocol::ERGID_LIKE;
  throw ConfigError("unknown protocol '" + name +
                    "' (expected HRIOT, DIRECT, EECRP_LIKE or ERGID_LIKE)");
}

RadioModel ScenarioConfig::radio() const {
  RadioModel m;
  m.e_elec = e_elec_nj * 1e-9;
  m.eps_fs = eps_fs_pj * 1e-12;
  m.eps_mp = eps_mp_pj * 1e-12;
  m.tx_power_dbm = tx_power_dbm;
  m.pl0_db = pl0_db;
  m.path_loss_exponent = path_loss_exponent;
  m.rx_sensitivity_dbm = rx_sensitivity_dbm;
  m.bandwidth_bps = bandwidth_bps;
  return m;
}

namespace {

[[noreturn]] void bad_key(const std::string& key, const std::string& why) {
  throw ConfigError("key '" + key + "': " + why);
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, int line, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(line) + ": key '" + key +
                      "': expected a number, got '" + value + "'");
  }
}

std::uint64_t parse_uint(const std::string& key, int line, const std::string& value) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError("line " + std::to_string(line) + ": key '" + key +
                      "': expected a non-negative integer, got '" + value + "'");
  }
  return v;
}

bool parse_bool(const std::string& key, int line, const std::string& value) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw ConfigError("line " + std::to_string(line) + ": key '" + key +
                    "': expected true or false, got '" + value + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  return parts;
}

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void ScenarioConfig::validate() {
  if (area_width <= 0.0) bad_key("area_width", "must be strictly positive");
  if (area_height <= 0.0) bad_key("area_height", "must be strictly positive");
  if (!fog_positions.empty() && fog_positions.size() != fog_count) {
    bad_key("fog_count", "does not match the number of explicit fog_positions");
  }
  if (cloud_x < 0.0) cloud_x = area_width / 2.0;
  if (cloud_y < 0.0) cloud_y = area_height / 2.0;
  if (round_duration_s <= 0.0) bad_key("round_duration_s", "must be strictly positive");
  if (e_elec_nj <= 0.0) bad_key("e_elec_nj", "must be strictly positive");
  if (eps_fs_pj <= 0.0) bad_key("eps_fs_pj", "must be strictly positive");
  if (eps_mp_pj <= 0.0) bad_key("eps_mp_pj", "must be strictly positive");
  if (bandwidth_bps <= 0.0) bad_key("bandwidth_bps", "must be strictly positive");
  if (initial_energy_j < 0.0) bad_key("initial_energy_j", "must be >= 0");
  if (device_radius_m <= 0.0) bad_key("device_radius_m", "must be strictly positive");
  if (fog_radius_m <= 0.0) bad_key("fog_radius_m", "must be strictly positive");
  if (max_noise_db < 0.0) bad_key("max_noise_db", "must be >= 0");
  if (packet_bits < 0.0) bad_key("packet_bits", "must be >= 0");
  if (traffic_rate < 0.0) bad_key("traffic_rate", "must be >= 0");
  if (!(rho > 0.0) || rho > 1.0) bad_key("rho", "must lie in (0, 1]");
  if (weights.size() != 6) bad_key("weights", "expected exactly 6 values");
  double wsum = 0.0;
  for (double w : weights) {
    if (w < 0.0) bad_key("weights", "every weight must be >= 0");
    wsum += w;
  }
  if (wsum <= 0.0) bad_key("weights", "weights must have a positive sum");
  if (reelection_period < 1) bad_key("reelection_period", "must be >= 1");
  if (branching < 1) bad_key("branching", "must be >= 1");
  if (!(aggregation_ratio > 0.0) || aggregation_ratio > 1.0) {
    bad_key("aggregation_ratio", "must lie in (0, 1]");
  }
  if (header_bits < 0.0) bad_key("header_bits", "must be >= 0");
  if (base_loss < 0.0 || base_loss > 1.0) bad_key("base_loss", "must lie in [0, 1]");
  if (let_cap_s <= 0.0) bad_key("let_cap_s", "must be strictly positive");
  if (proc_delay_s < 0.0) bad_key("proc_delay_s", "must be >= 0");
  if (cloud_proc_s < 0.0) bad_key("cloud_proc_s", "must be >= 0");
  if (max_speed_mps < 0.0) bad_key("max_speed_mps", "must be >= 0");
}

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value, got '" +
                        trim(raw) + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "area_width") cfg.area_width = parse_double(key, lineno, value);
    else if (key == "area_height") cfg.area_height = parse_double(key, lineno, value);
    else if (key == "device_count") cfg.device_count = static_cast<std::uint32_t>(parse_uint(key, lineno, value));
    else if (key == "fog_count") cfg.fog_count = static_cast<std::uint32_t>(parse_uint(key, lineno, value));
    else if (key == "fog_positions") {
      cfg.fog_positions.clear();
      if (!value.empty()) {
        for (const std::string& pair : split(value, ';')) {
          if (pair.empty()) continue;
          const auto parts = split(pair, ':');
          if (parts.size() != 2) {
            throw ConfigError("line " + std::to_string(lineno) +
                              ": key 'fog_positions': expected x:y pairs separated by ';'");
          }
          cfg.fog_positions.push_back({parse_double(key, lineno, parts[0]),
                                       parse_double(key, lineno, parts[1])});
        }
      }
    }
    else if (key == "cloud_x") cfg.cloud_x = parse_double(key, lineno, value);
    else if (key == "cloud_y") cfg.cloud_y = parse_double(key, lineno, value);
    else if (key == "rounds") cfg.rounds = static_cast<std::uint32_t>(parse_uint(key, lineno, value));
    else if (key == "round_duration_s") cfg.round_duration_s = parse_double(key, lineno, value);
    else if (key == "seed") cfg.seed = parse_uint(key, lineno, value);
    else if (key == "e_elec_nj") cfg.e_elec_nj = parse_double(key, lineno, value);
    else if (key == "eps_fs_pj") cfg.eps_fs_pj = parse_double(key, lineno, value);
    else if (key == "eps_mp_pj") cfg.eps_mp_pj = parse_double(key, lineno, value);
    else if (key == "tx_power_dbm") cfg.tx_power_dbm = parse_double(key, lineno, value);
    else if (key == "pl0_db") cfg.pl0_db = parse_double(key, lineno, value);
    else if (key == "path_loss_exponent") cfg.path_loss_exponent = parse_double(key, lineno, value);
    else if (key == "rx_sensitivity_dbm") cfg.rx_sensitivity_dbm = parse_double(key, lineno, value);
    else if (key == "bandwidth_bps") cfg.bandwidth_bps = parse_double(key, lineno, value);
    else if (key == "initial_energy_j") cfg.initial_energy_j = parse_double(key, lineno, value);
    else if (key == "device_radius_m") cfg.device_radius_m = parse_double(key, lineno, value);
    else if (key == "fog_radius_m") cfg.fog_radius_m = parse_double(key, lineno, value);
    else if (key == "max_noise_db") cfg.max_noise_db = parse_double(key, lineno, value);
    else if (key == "packet_bits") cfg.packet_bits = parse_double(key, lineno, value);
    else if (key == "traffic_model") {
      if (value == "constant") cfg.traffic_model = TrafficModel::Constant;
      else if (value == "poisson") cfg.traffic_model = TrafficModel::Poisson;
      else throw ConfigError("line " + std::to_string(lineno) +
                             ": key 'traffic_model': expected constant or poisson");
    }
    else if (key == "traffic_rate") cfg.traffic_rate = parse_double(key, lineno, value);
    else if (key == "rho") cfg.rho = parse_double(key, lineno, value);
    else if (key == "weights") {
      cfg.weights.clear();
      for (const std::string& w : split(value, ',')) {
        cfg.weights.push_back(parse_double(key, lineno, w));
      }
    }
    else if (key == "reelection_period") cfg.reelection_period = static_cast<std::uint32_t>(parse_uint(key, lineno, value));
    else if (key == "branching") cfg.branching = static_cast<std::uint32_t>(parse_uint(key, lineno, value));
    else if (key == "aggregation_ratio") cfg.aggregation_ratio = parse_double(key, lineno, value);
    else if (key == "header_bits") cfg.header_bits = parse_double(key, lineno, value);
    else if (key == "base_loss") cfg.base_loss = parse_double(key, lineno, value);
    else if (key == "duplicate_to_all_overlaps") cfg.duplicate_to_all_overlaps = parse_bool(key, lineno, value);
    else if (key == "let_cap_s") cfg.let_cap_s = parse_double(key, lineno, value);
    else if (key == "proc_delay_s") cfg.proc_delay_s = parse_double(key, lineno, value);
    else if (key == "cloud_proc_s") cfg.cloud_proc_s = parse_double(key, lineno, value);
    else if (key == "max_speed_mps") cfg.max_speed_mps = parse_double(key, lineno, value);
    else {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }

  cfg.validate();
  return cfg;
}

std::string serialize_config(const ScenarioConfig& config) {
  std::ostringstream out;
  out << "area_width = " << fmt_g(config.area_width) << "\n";
  out << "area_height = " << fmt_g(config.area_height) << "\n";
  out << "device_count = " << config.device_count << "\n";
  out << "fog_count = " << config.fog_count << "\n";
  out << "fog_positions = ";
  for (std::size_t i = 0; i < config.fog_positions.size(); ++i) {
    if (i) out << ";";
    out << fmt_g(config.fog_positions[i].x) << ":" << fmt_g(config.fog_positions[i].y);
  }
  out << "\n";
  out << "cloud_x = " << fmt_g(config.cloud_x) << "\n";
  out << "cloud_y = " << fmt_g(config.cloud_y) << "\n";
  out << "rounds = " << config.rounds << "\n";
  out << "round_duration_s = " << fmt_g(config.round_duration_s) << "\n";
  out << "seed = " << config.seed << "\n";
  out << "e_elec_nj = " << fmt_g(config.e_elec_nj) << "\n";
  out << "eps_fs_pj = " << fmt_g(config.eps_fs_pj) << "\n";
  out << "eps_mp_pj = " << fmt_g(config.eps_mp_pj) << "\n";
  out << "tx_power_dbm = " << fmt_g(config.tx_power_dbm) << "\n";
  out << "pl0_db = " << fmt_g(config.pl0_db) << "\n";
  out << "path_loss_exponent = " << fmt_g(config.path_loss_exponent) << "\n";
  out << "rx_sensitivity_dbm = " << fmt_g(config.rx_sensitivity_dbm) << "\n";
  out << "bandwidth_bps = " << fmt_g(config.bandwidth_bps) << "\n";
  out << "initial_energy_j = " << fmt_g(config.initial_energy_j) << "\n";
  out << "device_radius_m = " << fmt_g(config.device_radius_m) << "\n";
  out << "fog_radius_m = " << fmt_g(config.fog_radius_m) << "\n";
  out << "max_noise_db = " << fmt_g(config.max_noise_db) << "\n";
  out << "packet_bits = " << fmt_g(config.packet_bits) << "\n";
  out << "traffic_model = "
      << (config.traffic_model == TrafficModel::Constant ? "constant" : "poisson") << "\n";
  out << "traffic_rate = " << fmt_g(config.traffic_rate) << "\n";
  out << "rho = " << fmt_g(config.rho) << "\n";
  out << "weights = ";
  for (std::size_t i = 0; i < config.weights.size(); ++i) {
    if (i) out << ",";
    out << fmt_g(config.weights[i]);
  }
  out << "\n";
  out << "reelection_period = " << config.reelection_period << "\n";
  out << "branching = " << config.branching << "\n";
  out << "aggregation_ratio = " << fmt_g(config.aggregation_ratio) << "\n";
  out << "header_bits = " << fmt_g(config.header_bits) << "\n";
  out << "base_loss = " << fmt_g(config.base_loss) << "\n";
  out << "duplicate_to_all_overlaps = "
      << (config.duplicate_to_all_overlaps ? "true" : "false") << "\n";
  out << "let_cap_s = " << fmt_g(config.let_cap_s) << "\n";
  out << "proc_delay_s = " << fmt_g(config.proc_delay_s) << "\n";
  out << "cloud_proc_s = " << fmt_g(config.cloud_proc_s) << "\n";
  out << "max_speed_mps = " << fmt_g(config.max_speed_mps) << "\n";
  return out.str();
}

}  // namespace hriot
