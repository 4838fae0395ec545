// Experiment orchestration: protocol/seed sweeps and byte-stable CSV/report
// emission.
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hriot/config.hpp"
#include "hriot/sim.hpp"

namespace hriot {

struct RoundRow {
  Protocol protocol;
  std::uint64_t seed = 0;
  std::uint32_t round = 0;
  std::uint32_t alive = 0;
  std::uint64_t sent = 0;       // cumulative
  std::uint64_t delivered = 0;  // cumulative
};

struct RunResult {
  Protocol protocol;
  std::uint64_t seed = 0;
  Summary summary;
  std::vector<RoundRow> rounds;
  std::vector<double> round_pdr;            // cumulative per round; NaN = no traffic
  std::vector<double> round_mean_delay_s;   // NaN until first delivery
  std::vector<double> round_mean_response_s;
  std::vector<double> round_energy_j;       // cumulative
};

RunResult run_one(const ScenarioConfig& config, Protocol protocol,
                  std::uint64_t seed);

// Runs the full protocol x seed cross product and writes rounds.csv,
// summary.csv and report.txt into `out_dir`. Output is byte-stable for fixed
// inputs. Throws std::ios_base::failure when out_dir is unwritable.
std::vector<RunResult> run_experiment(const ScenarioConfig& config,
                                      const std::vector<Protocol>& protocols,
                                      const std::vector<std::uint64_t>& seeds,
                                      const std::filesystem::path& out_dir);

// Fixed-format numeric field helpers used by all emitted files (locale
// independent; "na" for absent values).
std::string format_double(double value, int precision);
std::string format_optional(std::optional<double> value, int precision);

}  // namespace hriot
