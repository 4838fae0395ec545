// Scenario configuration: strict key=value parsing, validation, and a
// serialized echo that round-trips exactly.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hriot/node.hpp"

namespace hriot {

enum class Protocol { HRIOT, DIRECT, EECRP_LIKE, ERGID_LIKE };

std::string protocol_name(Protocol p);
Protocol parse_protocol(const std::string& name);  // throws ConfigError

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TrafficModel { Constant, Poisson };

struct ScenarioConfig {
  // topology
  double area_width = 200.0;
  double area_height = 200.0;
  std::uint32_t device_count = 100;
  std::uint32_t fog_count = 4;
  std::vector<Vec2> fog_positions;  // empty => grid placement
  double cloud_x = -1.0;            // < 0 => area center (materialized by validate)
  double cloud_y = -1.0;

  // run
  std::uint32_t rounds = 200;
  double round_duration_s = 1.0;
  std::uint64_t seed = 1;

  // radio (RadioModel fields, in the units conventional for each)
  double e_elec_nj = 50.0;          // nJ/bit
  double eps_fs_pj = 10.0;          // pJ/bit/m^2
  double eps_mp_pj = 0.0013;        // pJ/bit/m^4
  double tx_power_dbm = 0.0;
  double pl0_db = 40.0;
  double path_loss_exponent = 2.0;
  double rx_sensitivity_dbm = -100.0;
  double bandwidth_bps = 250e3;

  // nodes
  double initial_energy_j = 0.1;
  double device_radius_m = 75.0;
  double fog_radius_m = 75.0;
  double max_noise_db = 5.0;

  // traffic
  double packet_bits = 2000.0;
  TrafficModel traffic_model = TrafficModel::Constant;
  double traffic_rate = 1.0;        // mean packets/round (Poisson model)

  // protocol knobs
  double rho = 0.5;
  std::vector<double> weights = {1, 1, 1, 1, 1, 1};  // six CH criteria
  std::uint32_t reelection_period = 5;
  std::uint32_t branching = 2;
  double aggregation_ratio = 1.0;
  double header_bits = 200.0;
  double base_loss = 0.0;
  bool duplicate_to_all_overlaps = false;
  double let_cap_s = 3600.0;

  // delay model
  double proc_delay_s = 0.002;
  double cloud_proc_s = 0.005;

  // mobility
  double max_speed_mps = 0.0;

  RadioModel radio() const;
  Vec2 cloud_position() const { return {cloud_x, cloud_y}; }

  // Checks constraints and materializes derived defaults (cloud position).
  // Throws ConfigError naming the offending key.
  void validate();
};

// Parses the key=value grammar ('#' comments, one key per line). Unknown
// keys, type mismatches and constraint violations raise ConfigError with the
// key name and line number. The result is validated.
ScenarioConfig parse_config(const std::string& text);

// Every key, every default materialized; parse(serialize(c)) == c.
std::string serialize_config(const ScenarioConfig& config);

}  // namespace hriot
